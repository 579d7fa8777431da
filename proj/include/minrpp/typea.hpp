#pragma once

#include <map>
#include <vector>

#include "minrpp/bijection.hpp"
#include "minrpp/heap.hpp"

namespace minrpp {

// Rim hook of an r x c rectangle, keyed by the row of its northeast box and
// the column of its southwest box.  Every box (i,j) of the rectangle keys
// exactly one hook: the border strip from (rows, j) up-right to (i, cols).
struct RimHook {
  int i = 1;  // NE row
  int j = 1;  // SW column
  auto operator<=>(const RimHook&) const = default;
};

struct RimHookMultiset {
  int rows = 0, cols = 0;
  std::map<RimHook, long long> mult;
};

// r x c grid of naturals, weakly increasing along rows and down columns
// (toward the southeast corner).  grid[r][c] is 0-indexed, top row first.
struct GridRpp {
  int rows = 0, cols = 0;
  std::vector<std::vector<long long>> v;

  static GridRpp zero(int rows, int cols);
  bool valid() const;
  bool is_zero() const;
  long long at(int r, int c) const { return v[r - 1][c - 1]; }  // 1-based
  bool operator==(const GridRpp&) const = default;
};

// A rim hook of the (n+1-m) x m rectangle corresponds to the interval root
// supported on [j, n+1-i]; both directions.
Root rimhook_dimvector(int rows, int cols, const RimHook& hook);
RimHook rimhook_from_dimvector(int rows, int cols, const Root& r);

// Transport between a type-A heap and the rectangle: the fibre of vertex v
// lies on the display diagonal r - c = m - v, bottom of the fibre at the
// southeast end.
std::vector<std::pair<int, int>> heap_grid_positions(const MinusculeHeap& h);  // 1-based (r,c)
GridRpp rpp_to_grid(const Rpp& rpp);
RimHookMultiset mult_to_hooks(const MinusculeHeap& h, const MultVector& c);
MultVector hooks_to_mult(const MinusculeHeap& h, const RimHookMultiset& hooks);

// Classical Hillman-Grassl correspondence on rectangles (southwest-most
// zig-zag path rule) and its inverse.
GridRpp hillman_grassl(const RimHookMultiset& hooks);
RimHookMultiset hillman_grassl_inverse(const GridRpp& g);

// Pak-style toggle-built RSK on rectangles and its inverse; standalone grid
// implementation (no quiver machinery).
GridRpp rsk_rect(const RimHookMultiset& hooks);
RimHookMultiset rsk_rect_inverse(const GridRpp& g);

}  // namespace minrpp
