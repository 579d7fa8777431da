#pragma once

#include <optional>
#include <string>
#include <vector>

namespace minrpp {

// Integer partition: weakly decreasing positive parts, no trailing zeros stored.
// All accessors read as if padded with infinitely many zeros.
using Partition = std::vector<long long>;

inline long long part(const Partition& p, long long i) {
  return (i >= 0 && i < (long long)p.size()) ? p[(size_t)i] : 0;
}

bool is_partition(const Partition& p);
Partition normalized(Partition p);  // strips trailing zeros, validates
long long weight(const Partition& p);
Partition conjugate(const Partition& p);

// Multiset union of parts, sorted decreasingly.
Partition merge_parts(const Partition& a, const Partition& b);

// gamma <= kappa in dominance order. Requires |gamma| == |kappa|.
bool dominance_leq(const Partition& gamma, const Partition& kappa);

// One partition per quiver vertex, indexed 0..n-1 for vertices 1..n.
using PartitionTuple = std::vector<Partition>;

bool tuple_dominance_leq(const PartitionTuple& a, const PartitionTuple& b);

// t-interlacing.  For t >= 0 the condition is
//   mu_{t+2i-1} >= lambda_i >= mu_{t+2i}  for all i >= 1,
// for t <= 0 it is lambda_i = mu_i for i <= -t together with
//   mu_{-t+2i-1} >= lambda_{-t+i} >= mu_{-t+2i}  for all i >= 1,
// everything read with zero padding.  At t = 0 the two readings agree; this
// is asserted rather than assumed.
bool t_interlaced(const Partition& lambda, const Partition& mu, long long t);

struct InterlaceResult {
  std::vector<long long> ts;  // valid t in a canonical window, ascending
  bool degenerate = false;    // infinitely many t qualify (lambda empty)
  bool any() const { return degenerate || !ts.empty(); }
  long long smallest_nonneg() const;  // smallest valid t >= 0 (requires any())
};

InterlaceResult interlace_values(const Partition& lambda, const Partition& mu);

// diff(mu, lambda) for t-interlaced input; independent of the valid t chosen
// (checked). Throws std::invalid_argument when not interlaced.
Partition diff_partitions(const Partition& mu, const Partition& lambda, long long t);
Partition diff_partitions(const Partition& mu, const Partition& lambda);

std::string to_string(const Partition& p);
std::string to_string(const PartitionTuple& t);

}  // namespace minrpp
