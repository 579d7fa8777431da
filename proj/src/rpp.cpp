#include "minrpp/rpp.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace minrpp {

std::string ExtValue::str() const {
  if (!cofin) return std::to_string(k);
  return k == 0 ? "inf" : "inf-" + std::to_string(k);
}

ExtValue ext_min(ExtValue a, ExtValue b) { return a < b ? a : b; }
ExtValue ext_max(ExtValue a, ExtValue b) { return a < b ? b : a; }

ExtValue ext_toggle_combine(ExtValue up_max, ExtValue low_min, ExtValue cur) {
  // order-reversing gives up_max <= cur <= low_min
  ExtValue out;
  if (!up_max.cofin && !low_min.cofin) {
    assert(!cur.cofin);
    out = ExtValue::fin(up_max.k + low_min.k - cur.k);
  } else if (!up_max.cofin && low_min.cofin) {
    out = cur.cofin ? ExtValue::fin(up_max.k + cur.k - low_min.k)
                    : ExtValue::inf_minus(low_min.k + cur.k - up_max.k);
  } else {
    // a cofinite upper bound forces everything above it cofinite
    assert(cur.cofin && low_min.cofin);
    out = ExtValue::inf_minus(up_max.k + low_min.k - cur.k);
  }
  assert(out.k >= 0);
  return out;
}

Rpp Rpp::zero(const MinusculeHeap& h, long long N) {
  Rpp r;
  r.heap = &h;
  r.N = N;
  r.val.assign(h.size(), ExtValue::fin(0));
  return r;
}

Rpp Rpp::zero_extended(const MinusculeHeap& h) {
  Rpp r = zero(h, 0);
  r.extended = true;
  return r;
}

bool Rpp::order_reversing() const {
  for (const HeapElem& e : heap->el)
    for (int y : e.up)
      if (!(val[y] <= val[e.id])) return false;
  return true;
}

bool Rpp::in_range() const {
  for (const ExtValue& v : val)
    if (v.cofin || v.k < 0 || v.k > N) return false;
  return true;
}

bool Rpp::all_finite() const {
  return std::none_of(val.begin(), val.end(), [](const ExtValue& v) { return v.cofin; });
}

long long Rpp::fin(int x) const {
  if (val[x].cofin) throw std::logic_error("value is not finite");
  return val[x].k;
}

Partition Rpp::fibre_partition(int v) const {
  Partition p;
  for (int x : heap->fibre[v - 1]) p.push_back(fin(x));
  std::sort(p.begin(), p.end(), std::greater<long long>());
  return normalized(p);
}

Partition Rpp::fibre_partition_finite(int v) const {
  Partition p;
  for (int x : heap->fibre[v - 1])
    if (!val[x].cofin) p.push_back(val[x].k);
  std::sort(p.begin(), p.end(), std::greater<long long>());
  return normalized(p);
}

Partition Rpp::fibre_partition_cofin(int v) const {
  Partition p;
  for (int x : heap->fibre[v - 1])
    if (val[x].cofin) p.push_back(val[x].k);
  std::sort(p.begin(), p.end(), std::greater<long long>());
  return normalized(p);
}

std::string Rpp::str() const {
  std::ostringstream os;
  os << '{';
  for (int x = 0; x < heap->size(); ++x)
    os << (x ? "," : "") << root_string(heap->el[x].root) << ':' << val[x].str();
  os << '}';
  return os.str();
}

Rpp toggle(const Rpp& r, int x) {
  const MinusculeHeap& h = *r.heap;
  ExtValue up_max = ExtValue::fin(0);
  bool have_up = false;
  for (int y : h.el[x].up) {
    up_max = have_up ? ext_max(up_max, r.val[y]) : r.val[y];
    have_up = true;
  }
  ExtValue low_min = r.extended ? ExtValue::inf_minus(0) : ExtValue::fin(r.N);
  bool have_low = false;
  for (int y : h.el[x].down) {
    low_min = have_low ? ext_min(low_min, r.val[y]) : r.val[y];
    have_low = true;
  }
  if (!have_up) up_max = ExtValue::fin(0);
  Rpp out = r;
  out.val[x] = ext_toggle_combine(up_max, low_min, r.val[x]);
  return out;
}

Rpp toggle_fibre(const Rpp& r, int v) {
  Rpp out = r;
  for (int x : r.heap->fibre[v - 1]) out = toggle(out, x);
  return out;
}

Rpp promotion(const Rpp& r) {
  Rpp out = r;
  for (int v : r.heap->quiver.vertices_by_numbering()) out = toggle_fibre(out, v);
  return out;
}

namespace {

long long orbit_size(Rpp r) {
  Rpp start = r;
  long long k = 0;
  do {
    r = promotion(r);
    ++k;
    if (k > 100000) throw std::logic_error("promotion orbit did not close");
  } while (!(r == start));
  return k;
}

}  // namespace

long long promotion_order(const MinusculeHeap& h, long long N, const PromotionOrderMode& mode) {
  long long order = 1;
  if (mode.exhaustive) {
    enumerate_rpps(h, N, [&](const Rpp& r) { order = std::lcm(order, orbit_size(r)); });
  } else {
    std::mt19937_64 rng(mode.seed);
    for (int i = 0; i < mode.samples; ++i)
      order = std::lcm(order, orbit_size(random_rpp(h, N, rng)));
  }
  return order;
}

long long promotion_order_extended(const MinusculeHeap& h, int samples, uint64_t seed) {
  std::mt19937_64 rng(seed);
  long long order = 1;
  for (int i = 0; i < samples; ++i)
    order = std::lcm(order, orbit_size(random_extended_rpp(h, 4, rng)));
  return order;
}

Rpp restrict_infinity(const Rpp& r, long long N) {
  if (!r.extended) throw std::invalid_argument("restrict_infinity: filling is not extended");
  Rpp out;
  out.heap = r.heap;
  out.N = N;
  out.val.resize(r.val.size());
  for (size_t i = 0; i < r.val.size(); ++i) {
    long long v = r.val[i].cofin ? N - r.val[i].k : r.val[i].k;
    out.val[i] = ExtValue::fin(v);
  }
  if (!out.valid())
    throw std::invalid_argument("restrict_infinity: N is not close enough to infinity");
  return out;
}

void enumerate_rpps(const MinusculeHeap& h, long long N, const std::function<void(const Rpp&)>& f) {
  // Assign values top-down: each element needs value >= its upper covers'.
  std::vector<int> order(h.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return __builtin_popcount(h.upset[a]) < __builtin_popcount(h.upset[b]);
  });
  Rpp r = Rpp::zero(h, N);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == order.size()) {
      f(r);
      return;
    }
    int x = order[i];
    long long lo = 0;
    for (int y : h.el[x].up) lo = std::max(lo, r.val[y].k);
    for (long long v = lo; v <= N; ++v) {
      r.val[x] = ExtValue::fin(v);
      rec(i + 1);
    }
    r.val[x] = ExtValue::fin(0);
  };
  rec(0);
}

void enumerate_rpps_by_weight(const MinusculeHeap& h, long long bound,
                              const std::function<void(const Rpp&)>& f) {
  std::vector<int> order(h.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return __builtin_popcount(h.upset[a]) < __builtin_popcount(h.upset[b]);
  });
  Rpp r = Rpp::zero(h, bound);
  std::function<void(size_t, long long)> rec = [&](size_t i, long long left) {
    if (i == order.size()) {
      f(r);
      return;
    }
    int x = order[i];
    long long lo = 0;
    for (int y : h.el[x].up) lo = std::max(lo, r.val[y].k);
    for (long long v = lo; v <= left; ++v) {
      r.val[x] = ExtValue::fin(v);
      rec(i + 1, left - v);
    }
    r.val[x] = ExtValue::fin(0);
  };
  rec(0, bound);
}

Rpp random_rpp(const MinusculeHeap& h, long long N, std::mt19937_64& rng) {
  std::vector<int> order(h.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return __builtin_popcount(h.upset[a]) < __builtin_popcount(h.upset[b]);
  });
  Rpp r = Rpp::zero(h, N);
  for (int x : order) {
    long long lo = 0;
    for (int y : h.el[x].up) lo = std::max(lo, r.val[y].k);
    std::uniform_int_distribution<long long> d(lo, N);
    r.val[x] = ExtValue::fin(d(rng));
  }
  return r;
}

Rpp random_extended_rpp(const MinusculeHeap& h, long long K, std::mt19937_64& rng) {
  // Random filter by upward closure of a random subset.
  ElemSet s = 0;
  std::uniform_int_distribution<int> coin(0, 1);
  for (int x = 0; x < h.size(); ++x)
    if (coin(rng)) s |= h.upset[x];
  Rpp r = Rpp::zero_extended(h);
  std::uniform_int_distribution<long long> d(0, K);
  for (int x = 0; x < h.size(); ++x)
    r.val[x] = ((s >> x) & 1u) ? ExtValue::fin(d(rng)) : ExtValue::inf_minus(d(rng));
  // Repair to order-reversing: sweep tops first, push maxima downward.
  std::vector<int> order(h.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return __builtin_popcount(h.upset[a]) < __builtin_popcount(h.upset[b]);
  });
  for (int x : order)
    for (int y : h.el[x].up) r.val[x] = ext_max(r.val[x], r.val[y]);
  assert(r.valid());
  return r;
}

}  // namespace minrpp
