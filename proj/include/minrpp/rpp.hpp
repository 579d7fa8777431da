#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "minrpp/heap.hpp"
#include "minrpp/partition.hpp"

namespace minrpp {

// Value in [0,N], or in the extended chain 0 < 1 < ... < inf-1 < inf-0.
// CoFin(k) stands for "infinity minus k".
struct ExtValue {
  long long k = 0;
  bool cofin = false;

  static ExtValue fin(long long v) { return {v, false}; }
  static ExtValue inf_minus(long long v) { return {v, true}; }

  bool operator==(const ExtValue& o) const = default;
  bool operator<(const ExtValue& o) const {
    if (cofin != o.cofin) return !cofin;
    return cofin ? k > o.k : k < o.k;
  }
  bool operator<=(const ExtValue& o) const { return *this == o || *this < o; }
  std::string str() const;
};

ExtValue ext_min(ExtValue a, ExtValue b);
ExtValue ext_max(ExtValue a, ExtValue b);
// a + b - c for a <= c <= b; asserts on the impossible tag pattern.
ExtValue ext_toggle_combine(ExtValue up_max, ExtValue low_min, ExtValue cur);

struct Rpp {
  const MinusculeHeap* heap = nullptr;
  bool extended = false;
  long long N = 0;  // bound when !extended
  std::vector<ExtValue> val;

  static Rpp zero(const MinusculeHeap& h, long long N);
  static Rpp zero_extended(const MinusculeHeap& h);

  bool order_reversing() const;
  bool in_range() const;  // values within [0,N] (finite case)
  bool valid() const { return order_reversing() && (extended || in_range()); }
  bool all_finite() const;
  long long fin(int x) const;  // value at x, must be finite

  // Partition of the values on fibre v (finite part must be all-finite).
  Partition fibre_partition(int v) const;
  // For extended fillings: partitions of the finite and cofinite entries.
  Partition fibre_partition_finite(int v) const;
  Partition fibre_partition_cofin(int v) const;

  bool operator==(const Rpp& o) const {
    return extended == o.extended && (extended || N == o.N) && val == o.val;
  }
  std::string str() const;
};

Rpp toggle(const Rpp& r, int x);
Rpp toggle_fibre(const Rpp& r, int v);
Rpp promotion(const Rpp& r);

struct PromotionOrderMode {
  bool exhaustive = true;
  int samples = 0;
  uint64_t seed = 0;
};

// Least k such that pro^k fixes every tested filling.
long long promotion_order(const MinusculeHeap& h, long long N, const PromotionOrderMode& mode);
long long promotion_order_extended(const MinusculeHeap& h, int samples, uint64_t seed);

// Replace inf-k by N-k; throws if N is not close enough to infinity.
Rpp restrict_infinity(const Rpp& r, long long N);

// All fillings with entries in [0,N].
void enumerate_rpps(const MinusculeHeap& h, long long N, const std::function<void(const Rpp&)>& f);
// All fillings with total value sum <= bound (values otherwise unbounded).
void enumerate_rpps_by_weight(const MinusculeHeap& h, long long bound,
                              const std::function<void(const Rpp&)>& f);

Rpp random_rpp(const MinusculeHeap& h, long long N, std::mt19937_64& rng);
// Random extended filling: random order filter, finite values on it, cofinite
// below, then repaired to order-reversing by a downward max sweep.
Rpp random_extended_rpp(const MinusculeHeap& h, long long K, std::mt19937_64& rng);

}  // namespace minrpp
