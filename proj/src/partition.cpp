#include "minrpp/partition.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace minrpp {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

Partition normalized(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (!is_partition(p)) throw std::invalid_argument("not a partition: " + to_string(p));
  return p;
}

long long weight(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0LL);
}

Partition conjugate(const Partition& p) {
  Partition q;
  if (p.empty()) return q;
  for (long long k = 1; k <= p[0]; ++k) {
    long long cnt = 0;
    for (long long x : p)
      if (x >= k) ++cnt;
    q.push_back(cnt);
  }
  return q;
}

Partition merge_parts(const Partition& a, const Partition& b) {
  Partition c = a;
  c.insert(c.end(), b.begin(), b.end());
  std::sort(c.begin(), c.end(), std::greater<long long>());
  return c;
}

bool dominance_leq(const Partition& gamma, const Partition& kappa) {
  if (weight(gamma) != weight(kappa))
    throw std::invalid_argument("dominance_leq: unequal weights");
  long long sg = 0, sk = 0;
  size_t len = std::max(gamma.size(), kappa.size());
  for (size_t i = 0; i < len; ++i) {
    sg += part(gamma, i);
    sk += part(kappa, i);
    if (sg > sk) return false;
  }
  return true;
}

bool tuple_dominance_leq(const PartitionTuple& a, const PartitionTuple& b) {
  if (a.size() != b.size()) throw std::invalid_argument("tuple size mismatch");
  for (size_t i = 0; i < a.size(); ++i)
    if (!dominance_leq(a[i], b[i])) return false;
  return true;
}

bool t_interlaced(const Partition& lambda, const Partition& mu, long long t) {
  long long bound = (long long)(lambda.size() + mu.size()) + 2;
  if (t >= 0) {
    for (long long i = 1; i <= bound; ++i) {
      long long hi = part(mu, t + 2 * i - 2);  // mu_{t+2i-1} (1-based)
      long long lo = part(mu, t + 2 * i - 1);  // mu_{t+2i}
      long long li = part(lambda, i - 1);
      if (!(hi >= li && li >= lo)) return false;
    }
    return true;
  }
  long long s = -t;
  for (long long i = 1; i <= s; ++i)
    if (part(lambda, i - 1) != part(mu, i - 1)) return false;
  for (long long i = 1; i <= bound; ++i) {
    long long hi = part(mu, s + 2 * i - 2);  // mu_{s+2i-1}
    long long lo = part(mu, s + 2 * i - 1);  // mu_{s+2i}
    long long li = part(lambda, s + i - 1);  // lambda_{s+i}
    if (!(hi >= li && li >= lo)) return false;
  }
  return true;
}

InterlaceResult interlace_values(const Partition& lambda, const Partition& mu) {
  InterlaceResult res;
  if (lambda.empty()) {
    // Every large enough t works; report the smallest nonnegative one.
    res.degenerate = true;
    res.ts.push_back(std::max<long long>(0, (long long)mu.size() - 1));
    return res;
  }
  long long lo = -(long long)(lambda.size() + mu.size() + 2);
  long long hi = (long long)(mu.size() + 2);
  for (long long t = lo; t <= hi; ++t)
    if (t_interlaced(lambda, mu, t)) res.ts.push_back(t);
  return res;
}

long long InterlaceResult::smallest_nonneg() const {
  for (long long t : ts)
    if (t >= 0) return t;
  throw std::logic_error("no nonnegative interlacing value");
}

static Partition diff_at(const Partition& mu, const Partition& lambda, long long t) {
  Partition d;
  long long bound = (long long)(lambda.size() + mu.size()) + 2;
  if (t >= 0) {
    for (long long k = 0; k < t; ++k) d.push_back(part(mu, k));
    for (long long i = 1; i <= bound; ++i)
      d.push_back(part(mu, t + 2 * i - 2) + part(mu, t + 2 * i - 1) - part(lambda, i - 1));
  } else {
    long long s = -t;
    for (long long i = 1; i <= bound; ++i)
      d.push_back(part(mu, s + 2 * i - 2) + part(mu, s + 2 * i - 1) - part(lambda, s + i - 1));
  }
  return normalized(d);
}

Partition diff_partitions(const Partition& mu, const Partition& lambda, long long t) {
  if (!t_interlaced(lambda, mu, t))
    throw std::invalid_argument("diff: partitions are not " + std::to_string(t) +
                                "-interlaced: lambda=" + to_string(lambda) +
                                " mu=" + to_string(mu));
  return diff_at(mu, lambda, t);
}

Partition diff_partitions(const Partition& mu, const Partition& lambda) {
  InterlaceResult r = interlace_values(lambda, mu);
  if (!r.any())
    throw std::invalid_argument("diff: partitions are not interlaced for any t: lambda=" +
                                to_string(lambda) + " mu=" + to_string(mu));
  Partition first = diff_at(mu, lambda, r.ts.front());
  for (size_t i = 1; i < r.ts.size(); ++i)
    assert(diff_at(mu, lambda, r.ts[i]) == first && "diff must not depend on t");
  return first;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

std::string to_string(const PartitionTuple& t) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << to_string(t[i]);
  os << ')';
  return os.str();
}

}  // namespace minrpp
