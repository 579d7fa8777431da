#include "minrpp/bijection.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace minrpp {

MultVector zero_mult(const MinusculeHeap& h) { return MultVector(h.size(), 0); }

Root dim_of(const MinusculeHeap& h, const MultVector& c) {
  Root d(h.quiver.rank(), 0);
  for (int x = 0; x < h.size(); ++x)
    for (int j = 0; j < h.quiver.rank(); ++j) d[j] += (int)(c[x] * h.el[x].root[j]);
  return d;
}

std::vector<int> ar_linearization(const ArQuiver& arq) {
  // Kahn over the opposite order: vertices with no unprocessed successors
  // first, smallest id breaking ties.
  int n = arq.size();
  std::vector<int> outdeg(n, 0);
  for (const ArVertex& x : arq.v) outdeg[x.id] = (int)x.out.size();
  std::set<int> ready;
  for (int i = 0; i < n; ++i)
    if (outdeg[i] == 0) ready.insert(i);
  std::vector<int> order;
  while (!ready.empty()) {
    int x = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(x);
    for (int z : arq.v[x].in)
      if (--outdeg[z] == 0) ready.insert(z);
  }
  if ((int)order.size() != n) throw std::logic_error("AR quiver has a cycle?");
  return order;
}

std::vector<int> linearize(const MinusculeHeap& h) {
  ArQuiver arq = ar_quiver(h.quiver);
  std::vector<int> out;
  for (int a : ar_linearization(arq)) {
    int id = h.find_root(arq[a].root);
    if (id >= 0) out.push_back(id);
  }
  return out;
}

namespace {

// Toggle during the rho recurrence: all covers carry already-meaningful
// values, and a toggled element is never minimal, so no boundary is needed
// on the lower side.
void recurrence_toggle(const MinusculeHeap& h, std::vector<long long>& val, int x) {
  long long up = 0;
  for (int y : h.el[x].up) up = std::max(up, val[y]);
  if (h.el[x].down.empty())
    throw std::logic_error("recurrence toggled a minimal element");
  long long low = val[h.el[x].down.front()];
  for (int y : h.el[x].down) low = std::min(low, val[y]);
  val[x] = up + low - val[x];
  if (val[x] < 0) throw std::logic_error("recurrence produced a negative entry");
}

}  // namespace

Rpp rho_with_linearization(const MinusculeHeap& h, const MultVector& c,
                           const std::vector<int>& ar_order) {
  if ((int)c.size() != h.size()) throw std::invalid_argument("rho: multiplicity size mismatch");
  for (long long v : c)
    if (v < 0) throw std::invalid_argument("rho: negative multiplicity");
  ArQuiver arq = ar_quiver(h.quiver);
  std::vector<int> to_heap(arq.size(), -1);
  for (int a = 0; a < arq.size(); ++a) to_heap[a] = h.find_root(arq[a].root);

  std::vector<long long> val(h.size(), 0);
  for (int a : ar_order) {
    // Toggle at the heap members of the tau-orbit strictly to the right,
    // highest first.
    std::vector<int> translates;
    for (int b = arq[a].tau_inv; b != -1; b = arq[b].tau_inv)
      if (to_heap[b] >= 0) translates.push_back(to_heap[b]);
    for (auto it = translates.rbegin(); it != translates.rend(); ++it)
      recurrence_toggle(h, val, *it);
    int x = to_heap[a];
    if (x >= 0) {
      long long up = 0;
      for (int y : h.el[x].up) up = std::max(up, val[y]);
      val[x] = up + c[x];
    }
  }
  long long maxv = *std::max_element(val.begin(), val.end());
  Rpp r = Rpp::zero(h, std::max(maxv, 0LL));
  for (int x = 0; x < h.size(); ++x) r.val[x] = ExtValue::fin(val[x]);
  if (!r.valid()) throw std::logic_error("rho produced an invalid filling");
  return r;
}

Rpp rho(const MinusculeHeap& h, const MultVector& c) {
  ArQuiver arq = ar_quiver(h.quiver);
  return rho_with_linearization(h, c, ar_linearization(arq));
}

MultVector rho_inverse(const MinusculeHeap& h, const Rpp& r) {
  if (!r.all_finite()) throw std::invalid_argument("rho_inverse: filling must be finite");
  if (!r.order_reversing()) throw std::invalid_argument("rho_inverse: not order-reversing");
  ArQuiver arq = ar_quiver(h.quiver);
  std::vector<int> to_heap(arq.size(), -1);
  for (int a = 0; a < arq.size(); ++a) to_heap[a] = h.find_root(arq[a].root);
  std::vector<int> order = ar_linearization(arq);

  std::vector<long long> val(h.size());
  for (int x = 0; x < h.size(); ++x) val[x] = r.fin(x);
  MultVector c = zero_mult(h);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int a = *it;
    int x = to_heap[a];
    if (x >= 0) {
      long long up = 0;
      for (int y : h.el[x].up) up = std::max(up, val[y]);
      c[x] = val[x] - up;
      if (c[x] < 0) throw std::logic_error("rho_inverse: negative multiplicity recovered");
      val[x] = 0;
    }
    std::vector<int> translates;
    for (int b = arq[a].tau_inv; b != -1; b = arq[b].tau_inv)
      if (to_heap[b] >= 0) translates.push_back(to_heap[b]);
    for (int y : translates) recurrence_toggle(h, val, y);
  }
  for (long long v : val)
    if (v != 0) throw std::logic_error("rho_inverse: leftover values");
  return c;
}

// ---- ZQ window model ------------------------------------------------------

ZqModel ZqModel::build(const ArQuiver& arq) {
  ZqModel m;
  m.q = arq.quiver;
  m.n = arq.quiver.rank();
  m.D = arq.max_depth();
  m.psi_ = psi(arq.quiver.diagram);
  m.h = coxeter_number(arq.quiver.diagram);
  for (int i = 0; i < m.n; ++i)
    if (m.D[i] + m.D[m.psi_[i] - 1] + 2 != m.h)
      throw std::logic_error("orbit depths do not match the Coxeter number");
  std::set<std::tuple<int, int, int>> types;
  for (const ArVertex& x : arq.v)
    for (int y : x.out)
      types.insert({x.orbit, arq[y].orbit, arq[y].depth - x.depth});
  m.types.assign(types.begin(), types.end());
  // Soundness: the translation-invariant arrow set reproduces the knitted one
  // exactly on the rep-Q window.
  for (const auto& [a, b, d] : m.types)
    for (int p = 0; p <= m.D[a - 1]; ++p) {
      int q = p + d;
      bool in_window = q >= 0 && q <= m.D[b - 1];
      int va = arq.at(a, p), vb = in_window ? arq.at(b, q) : -1;
      bool knitted = false;
      if (va >= 0 && vb >= 0)
        knitted = std::find(arq[va].out.begin(), arq[va].out.end(), vb) != arq[va].out.end();
      if (in_window && !knitted)
        throw std::logic_error("ZQ arrow type missing from the knitted window");
    }
  return m;
}

ZqModel::Pos ZqModel::shift1(Pos z) const {
  int j = psi_[z.first - 1];
  return {j, z.second + D[j - 1] + 1};
}

ZqModel::Pos ZqModel::shiftm1(Pos z) const {
  int j = psi_[z.first - 1];
  return {j, z.second - D[z.first - 1] - 1};
}

std::vector<ZqModel::Pos> ZqModel::arrows_out(Pos z) const {
  std::vector<Pos> r;
  for (const auto& [a, b, d] : types)
    if (a == z.first) r.push_back({b, z.second + d});
  return r;
}

std::vector<ZqModel::Pos> ZqModel::arrows_in(Pos z) const {
  std::vector<Pos> r;
  for (const auto& [a, b, d] : types)
    if (b == z.first) r.push_back({a, z.second - d});
  return r;
}

XiState XiState::base(const ZqModel& zq) {
  XiState st;
  st.zq = &zq;
  st.xi = zq.q;
  for (int i = 1; i <= zq.n; ++i)
    for (int p = 0; p <= zq.D[i - 1]; ++p) st.W.insert({i, p});
  for (int i = 1; i <= zq.n; ++i) {
    Root e(zq.n, 0);
    e[i - 1] = 1;
    st.simple_class.push_back(e);
  }
  return st;
}

ZqModel::Pos XiState::heart_projective(int i) const {
  std::vector<ZqModel::Pos> found;
  for (const auto& z : W)
    if (z.first == i && !W.count({i, z.second - 1})) {
      // projective: tau(z) not in the heart
      found.push_back(z);
    }
  // Rows can be non-contiguous; the projective is the one whose tau-shift
  // is absent, which is exactly "previous depth missing".  Uniqueness must
  // still hold for a heart.
  if (found.size() != 1) throw std::logic_error("heart projective not unique in its row");
  return found.front();
}

ZqModel::Pos XiState::heart_injective(int i) const {
  int row = zq->psi_[i - 1];
  std::vector<ZqModel::Pos> found;
  for (const auto& z : W)
    if (z.first == row && !W.count({row, z.second + 1})) found.push_back(z);
  if (found.size() != 1) throw std::logic_error("heart injective not unique in its row");
  return found.front();
}

XiState XiState::reflect_at_source(int i) const {
  if (!xi.is_source(i)) throw std::invalid_argument("reflect_at_source: not a source");
  ZqModel::Pos z = heart_injective(i);
  // The simple injective at a source admits no irreducible maps out within
  // the heart.
  for (const auto& w : zq->arrows_out(z))
    if (W.count(w)) throw std::logic_error("simple injective has an arrow inside the heart");
  XiState st = *this;
  st.W.erase(z);
  st.W.insert(zq->shiftm1(z));
  // tilt: [S'_i] = -[S_i], [S'_j] = [S_j] + (#arrows i->j) [S_i]
  for (int j : xi.arrows_out(i))
    for (int k = 0; k < zq->n; ++k)
      st.simple_class[j - 1][k] += simple_class[i - 1][k];
  for (int k = 0; k < zq->n; ++k) st.simple_class[i - 1][k] = -simple_class[i - 1][k];
  st.xi = sigma_vertex(xi, i);
  return st;
}

XiState XiState::reflect_at_sink(int i) const {
  if (!xi.is_sink(i)) throw std::invalid_argument("reflect_at_sink: not a sink");
  ZqModel::Pos z = heart_projective(i);
  for (const auto& w : zq->arrows_in(z))
    if (W.count(w)) throw std::logic_error("simple projective has an arrow inside the heart");
  XiState st = *this;
  st.W.erase(z);
  st.W.insert(zq->shift1(z));
  for (int j : xi.arrows_in(i))
    for (int k = 0; k < zq->n; ++k)
      st.simple_class[j - 1][k] += simple_class[i - 1][k];
  for (int k = 0; k < zq->n; ++k) st.simple_class[i - 1][k] = -simple_class[i - 1][k];
  st.xi = sigma_vertex(xi, i);
  return st;
}

Root XiState::heart_dim(const Root& cls) const {
  // Solve cls = sum_j d_j [S_j] by integer elimination; the simple classes
  // form a Z-basis.
  int n = zq->n;
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n + 1, 0));
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j < n; ++j) m[r][j] = simple_class[j][r];
    m[r][n] = cls[r];
  }
  // fraction-free elimination; unimodularity keeps everything integral
  std::vector<long long> d(n, 0);
  std::vector<int> col_of_row(n, -1);
  for (int c = 0; c < n; ++c) {
    int pr = -1;
    for (int r = 0; r < n; ++r) {
      if (col_of_row[r] != -1) continue;
      if (m[r][c] == 1 || m[r][c] == -1) {
        pr = r;
        break;
      }
    }
    if (pr < 0) {
      for (int r = 0; r < n; ++r)
        if (col_of_row[r] == -1 && m[r][c] != 0) { pr = r; break; }
      if (pr < 0) continue;
    }
    col_of_row[pr] = c;
    for (int r = 0; r < n; ++r) {
      if (r == pr || m[r][c] == 0) continue;
      // eliminate using exact rational-free scaling: multiply row r by pivot,
      // subtract; final unimodularity keeps the answer integral.
      long long p = m[pr][c], q = m[r][c];
      for (int k = 0; k <= n; ++k) m[r][k] = m[r][k] * p - m[pr][k] * q;
    }
  }
  for (int r = 0; r < n; ++r) {
    int c = col_of_row[r];
    if (c < 0) throw std::logic_error("heart_dim: singular simple-class matrix");
    if (m[r][n] % m[r][c] != 0) throw std::logic_error("heart_dim: non-integral solution");
    d[c] = m[r][n] / m[r][c];
  }
  Root out(n, 0);
  for (int j = 0; j < n; ++j) {
    if (d[j] < 0) throw std::invalid_argument("heart_dim: class is not effective");
    out[j] = (int)d[j];
  }
  return out;
}

ElemSet XiState::even_region(const MinusculeHeap& h) const {
  int lo = 0, hi = 0;
  for (const auto& z : W) {
    lo = std::min(lo, z.second);
    hi = std::max(hi, z.second);
  }
  ElemSet e = 0;
  for (const HeapElem& el : h.el) {
    int matches = 0;
    for (int k = -8; k <= 8; ++k) {
      int depth = el.orbit_depth + k * zq->h;
      if (depth < lo - zq->h || depth > hi + zq->h) continue;
      if (W.count({el.pi, depth})) ++matches;
    }
    if (matches > 1) throw std::logic_error("heap object hit the window twice");
    if (matches) e |= 1u << el.id;
  }
  return e;
}

namespace {

// BFS over window states, moving in both directions, until the even region
// equals the target filter.
std::pair<std::vector<int>, XiState> find_filter_state(const MinusculeHeap& h, ElemSet filter) {
  if (!h.is_filter(filter)) throw std::invalid_argument("target is not an order filter");
  static std::map<std::pair<std::string, ElemSet>, std::pair<std::vector<int>, XiState>> cache;
  static std::map<std::string, ZqModel> models;
  std::string key = h.quiver.describe() + "#m" + std::to_string(h.m);
  auto hit = cache.find({key, filter});
  if (hit != cache.end()) return hit->second;
  if (!models.count(key)) models.emplace(key, ZqModel::build(ar_quiver(h.quiver)));
  const ZqModel& zq = models.at(key);
  XiState start = XiState::base(zq);
  if (start.even_region(h) != h.all()) throw std::logic_error("base window must be all-even");
  std::pair<std::vector<int>, XiState> result;
  bool found = false;
  if (filter == h.all()) {
    result = {{}, start};
    found = true;
  }
  struct Node {
    XiState st;
    std::vector<int> path;
  };
  std::set<std::set<ZqModel::Pos>> seen;
  std::deque<Node> queue;
  queue.push_back({start, {}});
  seen.insert(start.W);
  size_t limit = 500000;
  while (!found && !queue.empty()) {
    Node cur = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i <= zq.n && !found; ++i) {
      for (int dir = 0; dir < 2 && !found; ++dir) {
        if (dir == 0 && !cur.st.xi.is_source(i)) continue;
        if (dir == 1 && !cur.st.xi.is_sink(i)) continue;
        XiState next = dir == 0 ? cur.st.reflect_at_source(i) : cur.st.reflect_at_sink(i);
        if (seen.count(next.W)) continue;
        // Everything needed lives within one shift period of the base window.
        bool drifted = false;
        for (const auto& z : next.W)
          if (z.second < -3 * zq.h || z.second > 3 * zq.h) drifted = true;
        if (drifted) continue;
        seen.insert(next.W);
        std::vector<int> path = cur.path;
        path.push_back(i);
        ElemSet e = next.even_region(h);
        if (e == filter) {
          result = {path, next};
          found = true;
        }
        queue.push_back({std::move(next), std::move(path)});
        if (seen.size() > limit)
          throw std::logic_error("reflection path search exceeded its budget");
      }
    }
  }
  if (!found) throw std::logic_error("no reflection path reaches the requested filter");
  cache[{key, filter}] = result;
  return result;
}

}  // namespace

std::vector<int> reflection_path_to_filter(const MinusculeHeap& h, ElemSet filter) {
  return find_filter_state(h, filter).first;
}

XiState xi_state_for_filter(const MinusculeHeap& h, ElemSet filter) {
  return find_filter_state(h, filter).second;
}

Rpp rho_xi(const MinusculeHeap& h, const SplitObject& s) {
  if (!h.is_filter(s.filter)) throw std::invalid_argument("rho_xi: not an order filter");
  for (int z = 0; z < h.size(); ++z) {
    if (s.even[z] && !((s.filter >> z) & 1u))
      throw std::invalid_argument("rho_xi: even part not supported on the filter");
    if (s.odd[z] && ((s.filter >> z) & 1u))
      throw std::invalid_argument("rho_xi: odd part not supported on the ideal");
  }
  MultVector x = zero_mult(h);
  for (int z = 0; z < h.size(); ++z) x[z] = s.even[z] + s.odd[z];
  Rpp r = rho(h, x);
  r.extended = true;
  for (int i : reflection_path_to_filter(h, s.filter)) r = toggle_fibre(r, i);
  // Sanity: finite region must be exactly the filter.
  for (int z = 0; z < h.size(); ++z)
    if (((s.filter >> z) & 1u) == r.val[z].cofin)
      throw std::logic_error("rho_xi: finite region does not match the filter");
  return r;
}

SplitObject split_for_rpp(const MinusculeHeap& h, const Rpp& r) {
  if (!r.extended) throw std::invalid_argument("split_for_rpp: filling must be extended");
  if (!r.order_reversing()) throw std::invalid_argument("split_for_rpp: invalid filling");
  ElemSet filter = 0;
  for (int z = 0; z < h.size(); ++z)
    if (!r.val[z].cofin) filter |= 1u << z;
  if (!h.is_filter(filter)) throw std::logic_error("finite region is not a filter");
  std::vector<int> path = reflection_path_to_filter(h, filter);
  Rpp base = r;
  for (auto it = path.rbegin(); it != path.rend(); ++it) base = toggle_fibre(base, *it);
  if (!base.all_finite())
    throw std::logic_error("split_for_rpp: unwinding did not reach a finite filling");
  base.extended = false;
  long long maxv = 0;
  for (const ExtValue& v : base.val) maxv = std::max(maxv, v.k);
  base.N = maxv;
  MultVector x = rho_inverse(h, base);
  SplitObject s;
  s.filter = filter;
  s.even = zero_mult(h);
  s.odd = zero_mult(h);
  for (int z = 0; z < h.size(); ++z)
    (((filter >> z) & 1u) ? s.even[z] : s.odd[z]) = x[z];
  return s;
}

ElemSet reflect_filter(const MinusculeHeap& h, ElemSet filter, int i, ReflectDirection dir) {
  if (!h.is_filter(filter)) throw std::invalid_argument("reflect_filter: not a filter");
  if (dir == ReflectDirection::None) return filter;
  const auto& fib = h.fibre[i - 1];
  if (dir == ReflectDirection::Grow) {
    // Highest fibre-i element outside the filter becomes a new minimal element.
    for (auto it = fib.rbegin(); it != fib.rend(); ++it)
      if (!((filter >> *it) & 1u)) {
        ElemSet next = filter | (1u << *it);
        if (!h.is_filter(next))
          throw std::invalid_argument("reflect_filter: illegal grow at vertex " +
                                      std::to_string(i));
        return next;
      }
    throw std::invalid_argument("reflect_filter: no fibre element to add at vertex " +
                                std::to_string(i));
  }
  for (int x : fib)
    if ((filter >> x) & 1u) {
      ElemSet next = filter & ~(1u << x);
      if (!h.is_filter(next))
        throw std::invalid_argument("reflect_filter: illegal shrink at vertex " +
                                    std::to_string(i));
      return next;
    }
  throw std::invalid_argument("reflect_filter: no fibre element to remove at vertex " +
                              std::to_string(i));
}

}  // namespace minrpp
