#include "minrpp/arquiver.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace minrpp {

namespace {

// Number of paths from a to b along the orientation (0 or 1 on a tree).
int path_exists(const DynkinQuiver& q, int a, int b) {
  if (a == b) return 1;
  for (int t : q.arrows_out(a))
    if (path_exists(q, t, b)) return 1;
  return 0;
}

}  // namespace

Root projective_root(const DynkinQuiver& q, int i) {
  int n = q.rank();
  Root r(n, 0);
  for (int j = 1; j <= n; ++j) r[j - 1] = path_exists(q, i, j);
  return r;
}

Root injective_root(const DynkinQuiver& q, int i) {
  int n = q.rank();
  Root r(n, 0);
  for (int j = 1; j <= n; ++j) r[j - 1] = path_exists(q, j, i);
  return r;
}

int ArQuiver::find_root(const Root& r) const {
  for (const ArVertex& x : v)
    if (x.root == r) return x.id;
  return -1;
}

int ArQuiver::at(int orbit, int depth) const {
  for (const ArVertex& x : v)
    if (x.orbit == orbit && x.depth == depth) return x.id;
  return -1;
}

std::vector<int> ArQuiver::max_depth() const {
  std::vector<int> d(quiver.rank(), -1);
  for (const ArVertex& x : v) d[x.orbit - 1] = std::max(d[x.orbit - 1], x.depth);
  return d;
}

std::string ArQuiver::dot() const {
  std::ostringstream os;
  os << "digraph AR {\n  rankdir=LR;\n  node [shape=box];\n";
  for (const ArVertex& x : v)
    os << "  n" << x.id << " [label=\"" << root_string(x.root) << "\\npi=" << x.orbit
       << "\"];\n";
  for (const ArVertex& x : v)
    for (int w : x.out) os << "  n" << x.id << " -> n" << w << ";\n";
  os << "}\n";
  return os.str();
}

ArQuiver ar_quiver(const DynkinQuiver& q) {
  int n = q.rank();
  ArQuiver arq{q, {}};
  std::set<Root> injectives;
  for (int i = 1; i <= n; ++i) injectives.insert(injective_root(q, i));

  auto add_vertex = [&](Root r, int orbit, int depth, bool proj) -> int {
    ArVertex x;
    x.id = (int)arq.v.size();
    x.root = std::move(r);
    x.orbit = orbit;
    x.depth = depth;
    x.projective = proj;
    x.injective = injectives.count(x.root) > 0;
    arq.v.push_back(std::move(x));
    return arq.v.back().id;
  };
  auto add_arrow = [&](int a, int b) {
    arq.v[a].out.push_back(b);
    arq.v[b].in.push_back(a);
  };

  for (int i = 1; i <= n; ++i) add_vertex(projective_root(q, i), i, 0, true);
  // rad P_i contains P_j for each arrow i -> j of Q.
  for (auto [s, t] : q.arrows) add_arrow(t - 1, s - 1);

  size_t expected = positive_roots(q.diagram).size();
  // Knit: X is ready once every in-neighbour is injective or translated.
  std::vector<bool> translated(expected, false);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int x = 0; x < (int)arq.v.size(); ++x) {
      if (arq.v[x].injective || arq.v[x].tau_inv != -1) continue;
      bool ready = true;
      for (int z : arq.v[x].in)
        if (!arq.v[z].injective && arq.v[z].tau_inv == -1) ready = false;
      if (!ready) continue;
      // Mesh: dim tau^{-}(X) = sum of dims over arrows X -> Y, minus dim X.
      Root r(n, 0);
      for (int y : arq.v[x].out)
        for (int j = 0; j < n; ++j) r[j] += arq.v[y].root[j];
      for (int j = 0; j < n; ++j) r[j] -= arq.v[x].root[j];
      if (!std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; }))
        throw std::logic_error("knitting produced a negative dimension vector");
      int w = add_vertex(std::move(r), arq.v[x].orbit, arq.v[x].depth + 1, false);
      arq.v[w].tau = x;
      arq.v[x].tau_inv = w;
      for (int y : arq.v[x].out) add_arrow(y, w);
      progress = true;
      if (arq.v.size() > expected) throw std::logic_error("knitting overran the root count");
    }
  }

  if (arq.v.size() != expected)
    throw std::logic_error("knitting did not reach every positive root");
  // Every positive root exactly once.
  std::set<Root> seen;
  for (const ArVertex& x : arq.v) {
    if (!seen.insert(x.root).second) throw std::logic_error("duplicate root in AR quiver");
  }
  return arq;
}

std::vector<int> support_at(const ArQuiver& arq, int m) {
  std::vector<int> ids;
  for (const ArVertex& x : arq.v)
    if (x.root[m - 1] != 0) ids.push_back(x.id);
  return ids;
}

}  // namespace minrpp
