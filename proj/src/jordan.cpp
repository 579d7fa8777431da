#include "minrpp/jordan.hpp"

#include <algorithm>
#include <stdexcept>

namespace minrpp {

PartitionTuple sigma_k_tuple(const PartitionTuple& nu, const DynkinQuiver& q, int k) {
  if ((int)nu.size() != q.rank()) throw std::invalid_argument("tuple rank mismatch");
  bool src = q.is_source(k), snk = q.is_sink(k);
  if (!src && !snk)
    throw std::invalid_argument("sigma_k_tuple: vertex is neither source nor sink");
  std::vector<int> adj = src ? q.arrows_out(k) : q.arrows_in(k);
  Partition mu;
  for (int j : adj) mu = merge_parts(mu, nu[j - 1]);
  const Partition& lambda = nu[k - 1];
  InterlaceResult r = interlace_values(lambda, mu);
  if (!r.any())
    throw std::invalid_argument("sigma_k_tuple: not interlaced at vertex " + std::to_string(k) +
                                ": lambda=" + to_string(lambda) + " mu=" + to_string(mu));
  PartitionTuple out = nu;
  out[k - 1] = diff_partitions(mu, lambda);
  return out;
}

FitResult fits_in(const PartitionTuple& nu, const MinusculeHeap& h, ElemSet region) {
  FitResult res;
  Rpp r = Rpp::zero_extended(h);
  r.extended = false;
  long long maxv = 0;
  for (const Partition& p : nu)
    if (!p.empty()) maxv = std::max(maxv, p[0]);
  r.N = maxv;
  for (int v = 1; v <= h.quiver.rank(); ++v) {
    const Partition& p = v <= (int)nu.size() ? nu[v - 1] : Partition{};
    std::vector<int> slots;  // fibre elements inside the region, bottom to top
    for (int x : h.fibre[v - 1])
      if ((region >> x) & 1u) slots.push_back(x);
    if (p.size() > slots.size()) {
      res.status = FitStatus::TooManyParts;
      return res;
    }
    // Largest parts at the bottom; missing parts read as zero at the top.
    for (size_t i = 0; i < slots.size(); ++i)
      r.val[slots[i]] = ExtValue::fin(part(p, (long long)i));
  }
  // Order check on the induced subposet only.
  for (const HeapElem& e : h.el) {
    if (!((region >> e.id) & 1u)) continue;
    for (int y : e.up)
      if (((region >> y) & 1u) && !(r.val[y] <= r.val[e.id])) {
        res.status = FitStatus::NotOrderReversing;
        return res;
      }
  }
  res.rpp = std::move(r);
  return res;
}

FitResult fits_in(const PartitionTuple& nu, const MinusculeHeap& h) {
  return fits_in(nu, h, h.all());
}

}  // namespace minrpp
