#include "minrpp/typea.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace minrpp {

GridRpp GridRpp::zero(int rows, int cols) {
  GridRpp g;
  g.rows = rows;
  g.cols = cols;
  g.v.assign(rows, std::vector<long long>(cols, 0));
  return g;
}

bool GridRpp::valid() const {
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (v[r][c] < 0) return false;
      if (c + 1 < cols && v[r][c] > v[r][c + 1]) return false;
      if (r + 1 < rows && v[r][c] > v[r + 1][c]) return false;
    }
  return true;
}

bool GridRpp::is_zero() const {
  for (const auto& row : v)
    for (long long x : row)
      if (x) return false;
  return true;
}

Root rimhook_dimvector(int rows, int cols, const RimHook& hook) {
  if (hook.i < 1 || hook.i > rows || hook.j < 1 || hook.j > cols)
    throw std::invalid_argument("invalid rim hook key");
  int n = rows + cols - 1;
  int m = cols;
  Root r(n, 0);
  for (int v = hook.j; v <= n + 1 - hook.i; ++v) r[v - 1] = 1;
  (void)m;
  return r;
}

RimHook rimhook_from_dimvector(int rows, int cols, const Root& r) {
  int n = rows + cols - 1;
  if ((int)r.size() != n) throw std::invalid_argument("rank mismatch");
  int a = -1, b = -1;
  for (int v = 1; v <= n; ++v)
    if (r[v - 1] == 1) {
      if (a < 0) a = v;
      b = v;
    } else if (r[v - 1] != 0) {
      throw std::invalid_argument("not an interval root");
    }
  for (int v = a; v <= b; ++v)
    if (r[v - 1] != 1) throw std::invalid_argument("not an interval root");
  if (a < 0 || a > cols || n + 1 - b > rows || b < cols || a > cols)
    throw std::invalid_argument("interval does not contain the corner vertex");
  return RimHook{n + 1 - b, a};
}

std::vector<std::pair<int, int>> heap_grid_positions(const MinusculeHeap& h) {
  if (h.quiver.diagram.family != Family::A)
    throw std::invalid_argument("grid transport is a type-A construction");
  int n = h.quiver.rank(), m = h.m;
  int rows = n + 1 - m, cols = m;
  std::vector<std::pair<int, int>> pos(h.size());
  for (int v = 1; v <= n; ++v) {
    int d = m - v;  // display diagonal r - c
    int r0 = std::min(rows, cols + d);  // bottom cell of the diagonal
    const auto& f = h.fibre[v - 1];
    for (size_t k = 0; k < f.size(); ++k) {
      int r = r0 - (int)k, c = r - d;
      if (r < 1 || c < 1 || r > rows || c > cols)
        throw std::logic_error("fibre does not fit its display diagonal");
      pos[f[k]] = {r, c};
    }
    // The fibre must fill the whole diagonal.
    int lo_r = std::max(1, 1 + d), hi_r = std::min(rows, cols + d);
    if ((int)f.size() != hi_r - lo_r + 1)
      throw std::logic_error("fibre size does not match its display diagonal");
  }
  return pos;
}

GridRpp rpp_to_grid(const Rpp& rpp) {
  const MinusculeHeap& h = *rpp.heap;
  int n = h.quiver.rank(), m = h.m;
  GridRpp g = GridRpp::zero(n + 1 - m, m);
  auto pos = heap_grid_positions(h);
  for (int x = 0; x < h.size(); ++x) g.v[pos[x].first - 1][pos[x].second - 1] = rpp.fin(x);
  if (!g.valid()) throw std::logic_error("transported filling is not a grid RPP");
  return g;
}

RimHookMultiset mult_to_hooks(const MinusculeHeap& h, const MultVector& c) {
  int n = h.quiver.rank(), m = h.m;
  RimHookMultiset out;
  out.rows = n + 1 - m;
  out.cols = m;
  for (int x = 0; x < h.size(); ++x)
    if (c[x]) out.mult[rimhook_from_dimvector(out.rows, out.cols, h.el[x].root)] = c[x];
  return out;
}

MultVector hooks_to_mult(const MinusculeHeap& h, const RimHookMultiset& hooks) {
  MultVector c = zero_mult(h);
  for (const auto& [hook, mult] : hooks.mult) {
    int id = h.find_root(rimhook_dimvector(hooks.rows, hooks.cols, hook));
    if (id < 0) throw std::invalid_argument("hook does not correspond to a heap element");
    c[id] = mult;
  }
  return c;
}

RimHookMultiset hillman_grassl_inverse(const GridRpp& g_in) {
  if (!g_in.valid()) throw std::invalid_argument("not a grid RPP");
  GridRpp g = g_in;
  RimHookMultiset out;
  out.rows = g.rows;
  out.cols = g.cols;
  while (!g.is_zero()) {
    int j0 = -1;
    for (int c = 0; c < g.cols && j0 < 0; ++c)
      for (int r = 0; r < g.rows; ++r)
        if (g.v[r][c]) {
          j0 = c;
          break;
        }
    // Start at the bottom of column j0 (nonzero since columns increase down).
    int r = g.rows - 1, c = j0;
    if (!g.v[r][c]) throw std::logic_error("column bottom vanished");
    std::vector<std::pair<int, int>> path;
    while (true) {
      path.push_back({r, c});
      if (r > 0 && g.v[r - 1][c] == g.v[r][c])
        --r;  // north while the entry above is equal
      else if (c + 1 < g.cols)
        ++c;  // else east
      else
        break;
    }
    for (auto [pr, pc] : path) {
      if (--g.v[pr][pc] < 0) throw std::logic_error("path subtracted below zero");
    }
    ++out.mult[RimHook{r + 1, j0 + 1}];
    if (!g.valid()) throw std::logic_error("extraction broke the RPP");
  }
  return out;
}

GridRpp hillman_grassl(const RimHookMultiset& hooks) {
  GridRpp g = GridRpp::zero(hooks.rows, hooks.cols);
  // Insert in the reverse of the extraction order: (j desc, i asc).
  std::vector<RimHook> order;
  for (const auto& [hook, mult] : hooks.mult)
    for (long long k = 0; k < mult; ++k) order.push_back(hook);
  std::stable_sort(order.begin(), order.end(), [](const RimHook& a, const RimHook& b) {
    if (a.j != b.j) return a.j > b.j;
    return a.i < b.i;
  });
  for (const RimHook& hk : order) {
    // Reverse path: from the east end of row i, south while the entry below
    // is equal, else west, stopping in column j.
    int r = hk.i - 1, c = g.cols - 1;
    std::vector<std::pair<int, int>> path;
    while (true) {
      path.push_back({r, c});
      if (r + 1 < g.rows && g.v[r + 1][c] == g.v[r][c])
        ++r;
      else if (c > hk.j - 1)
        --c;
      else
        break;
    }
    for (auto [pr, pc] : path) ++g.v[pr][pc];
    if (!g.valid()) throw std::logic_error("insertion broke the RPP");
  }
  return g;
}

// ---- Pak-style RSK via grid toggles ----------------------------------------

namespace {

// Toggle at box (r,c) (0-based) of the grid poset where (0,0) is the maximal
// element: up-neighbours are (r-1,c),(r,c-1) with boundary 0, down-neighbours
// (r+1,c),(r,c+1); during the build all relevant cells carry meaningful
// values and a toggled cell always has a down-neighbour.
void grid_toggle(GridRpp& g, int r, int c) {
  long long up = 0;
  if (r > 0) up = std::max(up, g.v[r - 1][c]);
  if (c > 0) up = std::max(up, g.v[r][c - 1]);
  bool have_low = false;
  long long low = 0;
  if (r + 1 < g.rows) {
    low = g.v[r + 1][c];
    have_low = true;
  }
  if (c + 1 < g.cols) {
    low = have_low ? std::min(low, g.v[r][c + 1]) : g.v[r][c + 1];
    have_low = true;
  }
  if (!have_low) throw std::logic_error("rsk toggle at the minimal box");
  g.v[r][c] = up + low - g.v[r][c];
}

// Boxes in a linear extension from the maximal box (0,0) outward.
std::vector<std::pair<int, int>> build_order(int rows, int cols) {
  std::vector<std::pair<int, int>> order;
  for (int s = 0; s <= rows + cols - 2; ++s)
    for (int r = 0; r <= s; ++r) {
      int c = s - r;
      if (r < rows && c < cols) order.push_back({r, c});
    }
  return order;
}

}  // namespace

GridRpp rsk_rect(const RimHookMultiset& hooks) {
  GridRpp g = GridRpp::zero(hooks.rows, hooks.cols);
  auto order = build_order(hooks.rows, hooks.cols);
  for (auto [r, c] : order) {
    // Toggle the earlier (strictly northwest) boxes on the same diagonal,
    // deepest first, then place the multiplicity at (r,c).
    for (int k = std::min(r, c); k >= 1; --k) grid_toggle(g, r - k, c - k);
    long long up = 0;
    if (r > 0) up = std::max(up, g.v[r - 1][c]);
    if (c > 0) up = std::max(up, g.v[r][c - 1]);
    auto it = hooks.mult.find(RimHook{r + 1, c + 1});
    long long mult = it == hooks.mult.end() ? 0 : it->second;
    if (mult < 0) throw std::invalid_argument("negative hook multiplicity");
    g.v[r][c] = up + mult;
  }
  if (!g.valid()) throw std::logic_error("rsk produced an invalid grid");
  return g;
}

RimHookMultiset rsk_rect_inverse(const GridRpp& g_in) {
  if (!g_in.valid()) throw std::invalid_argument("not a grid RPP");
  GridRpp g = g_in;
  RimHookMultiset out;
  out.rows = g.rows;
  out.cols = g.cols;
  auto order = build_order(g.rows, g.cols);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto [r, c] = *it;
    long long up = 0;
    if (r > 0) up = std::max(up, g.v[r - 1][c]);
    if (c > 0) up = std::max(up, g.v[r][c - 1]);
    long long mult = g.v[r][c] - up;
    if (mult < 0) throw std::logic_error("rsk inverse recovered a negative multiplicity");
    if (mult) out.mult[RimHook{r + 1, c + 1}] = mult;
    g.v[r][c] = 0;
    for (int k = 1; k <= std::min(r, c); ++k) grid_toggle(g, r - k, c - k);
  }
  for (const auto& row : g.v)
    for (long long x : row)
      if (x) throw std::logic_error("rsk inverse left residue");
  return out;
}

}  // namespace minrpp
