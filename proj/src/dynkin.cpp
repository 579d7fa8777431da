#include "minrpp/dynkin.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace minrpp {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E: return "E";
  }
  return "?";
}

Family family_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'D': case 'd': return Family::D;
    case 'E': case 'e': return Family::E;
  }
  throw std::invalid_argument(std::string("unknown family: ") + c);
}

DynkinDiagram DynkinDiagram::make(Family f, int rank) {
  bool ok = (f == Family::A && rank >= 1) || (f == Family::D && rank >= 4) ||
            (f == Family::E && rank >= 6 && rank <= 8);
  if (!ok) throw std::invalid_argument("invalid Dynkin type " + family_name(f) +

                                       std::to_string(rank));
  return DynkinDiagram{f, rank};
}

std::vector<std::pair<int, int>> DynkinDiagram::edges() const {
  std::vector<std::pair<int, int>> e;
  int n = rank;
  switch (family) {
    case Family::A:
      for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
      break;
    case Family::D:
      for (int i = 1; i < n - 2; ++i) e.push_back({i, i + 1});
      e.push_back({n - 2, n - 1});
      e.push_back({n - 2, n});
      break;
    case Family::E:
      // path 1..(n-1) with vertex n attached at 3 (arm lengths 2, n-4, 1)
      for (int i = 1; i < n - 1; ++i) e.push_back({i, i + 1});
      e.push_back({3, n});
      break;
  }
  return e;
}

std::vector<int> DynkinDiagram::neighbors(int v) const {
  std::vector<int> nb;
  for (auto [a, b] : edges()) {
    if (a == v) nb.push_back(b);
    if (b == v) nb.push_back(a);
  }
  std::sort(nb.begin(), nb.end());
  return nb;
}

int DynkinDiagram::degree(int v) const { return (int)neighbors(v).size(); }

bool DynkinDiagram::adjacent(int a, int b) const {
  for (auto [x, y] : edges())
    if ((x == a && y == b) || (x == b && y == a)) return true;
  return false;
}

std::string DynkinDiagram::name() const { return family_name(family) + std::to_string(rank); }

DynkinDiagram diagram_from_name(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad type name: " + name);
  Family f = family_from_char(name[0]);
  int rank = std::stoi(name.substr(1));
  return DynkinDiagram::make(f, rank);
}

static std::vector<int> admissible_numbering(const DynkinDiagram& d,
                                             const std::vector<std::pair<int, int>>& arrows) {
  int n = d.rank;
  std::vector<int> indeg(n + 1, 0);
  std::vector<std::vector<int>> out(n + 1);
  for (auto [s, t] : arrows) {
    out[s].push_back(t);
    ++indeg[t];
  }
  // Kahn with smallest-label tie break: deterministic numbering.
  std::priority_queue<int, std::vector<int>, std::greater<int>> q;
  for (int v = 1; v <= n; ++v)
    if (indeg[v] == 0) q.push(v);
  std::vector<int> numbering(n, 0);
  int next = 1;
  while (!q.empty()) {
    int v = q.top();
    q.pop();
    numbering[v - 1] = next++;
    for (int w : out[v])
      if (--indeg[w] == 0) q.push(w);
  }
  if (next != n + 1) throw std::invalid_argument("orientation is not acyclic");
  return numbering;
}

DynkinQuiver DynkinQuiver::make(DynkinDiagram d, std::vector<std::pair<int, int>> arrows) {
  auto edges = d.edges();
  if (arrows.size() != edges.size())
    throw std::invalid_argument("orientation must direct each edge exactly once");
  for (auto [s, t] : arrows) {
    if (!d.adjacent(s, t)) throw std::invalid_argument("arrow not along a diagram edge");
  }
  std::set<std::pair<int, int>> covered;
  for (auto [s, t] : arrows) covered.insert({std::min(s, t), std::max(s, t)});
  if (covered.size() != edges.size())
    throw std::invalid_argument("orientation must direct each edge exactly once");
  DynkinQuiver q{d, std::move(arrows), {}};
  q.numbering = admissible_numbering(d, q.arrows);
  return q;
}

DynkinQuiver DynkinQuiver::linear(DynkinDiagram d) {
  std::vector<std::pair<int, int>> arrows = d.edges();
  return make(d, std::move(arrows));
}

bool DynkinQuiver::has_arrow(int s, int t) const {
  for (auto [a, b] : arrows)
    if (a == s && b == t) return true;
  return false;
}

bool DynkinQuiver::is_source(int v) const {
  for (auto [s, t] : arrows)
    if (t == v) return false;
  return true;
}

bool DynkinQuiver::is_sink(int v) const {
  for (auto [s, t] : arrows)
    if (s == v) return false;
  return true;
}

std::vector<int> DynkinQuiver::arrows_out(int v) const {
  std::vector<int> r;
  for (auto [s, t] : arrows)
    if (s == v) r.push_back(t);
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<int> DynkinQuiver::arrows_in(int v) const {
  std::vector<int> r;
  for (auto [s, t] : arrows)
    if (t == v) r.push_back(s);
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<int> DynkinQuiver::vertices_by_numbering() const {
  int n = rank();
  std::vector<int> order(n);
  for (int v = 1; v <= n; ++v) order[numbering[v - 1] - 1] = v;
  return order;
}

std::string DynkinQuiver::describe() const {
  std::ostringstream os;
  os << diagram.name() << '[';
  for (size_t i = 0; i < arrows.size(); ++i)
    os << (i ? "," : "") << arrows[i].first << ">" << arrows[i].second;
  os << ']';
  return os.str();
}

DynkinQuiver sigma_vertex(const DynkinQuiver& q, int k) {
  if (!q.is_source(k) && !q.is_sink(k))
    throw std::invalid_argument("sigma_vertex: vertex " + std::to_string(k) +
                                " is neither a source nor a sink of " + q.describe());
  auto arrows = q.arrows;
  for (auto& [s, t] : arrows)
    if (s == k || t == k) std::swap(s, t);
  return DynkinQuiver::make(q.diagram, std::move(arrows));
}

DynkinQuiver opposite(const DynkinQuiver& q) {
  auto arrows = q.arrows;
  for (auto& [s, t] : arrows) std::swap(s, t);
  return DynkinQuiver::make(q.diagram, std::move(arrows));
}

std::set<int> minuscule_vertices(const DynkinDiagram& d) {
  std::set<int> m;
  int n = d.rank;
  switch (d.family) {
    case Family::A:
      for (int v = 1; v <= n; ++v) m.insert(v);
      break;
    case Family::D:
      m = {1, n - 1, n};
      break;
    case Family::E:
      if (n == 6) m = {1, 5};
      if (n == 7) m = {6};
      break;
  }
  return m;
}

Root simple_reflection(const DynkinDiagram& d, int k, const Root& r) {
  Root s = r;
  int acc = -r[k - 1];
  for (int nb : d.neighbors(k)) acc += r[nb - 1];
  s[k - 1] = acc;
  return s;
}

std::vector<Root> positive_roots(const DynkinDiagram& d) {
  int n = d.rank;
  std::set<Root> known;
  std::queue<Root> work;
  for (int i = 1; i <= n; ++i) {
    Root e(n, 0);
    e[i - 1] = 1;
    known.insert(e);
    work.push(e);
  }
  while (!work.empty()) {
    Root r = work.front();
    work.pop();
    for (int k = 1; k <= n; ++k) {
      Root s = simple_reflection(d, k, r);
      bool positive = std::all_of(s.begin(), s.end(), [](int x) { return x >= 0; });
      if (positive && !known.count(s)) {
        known.insert(s);
        work.push(s);
      }
    }
  }
  std::vector<Root> out(known.begin(), known.end());
  return out;
}

int coxeter_number(const DynkinDiagram& d) {
  // Coxeter element: product of all simple reflections (any order gives the
  // same order; use 1..n).  Act on the full root set until identity.
  std::vector<Root> pos = positive_roots(d);
  std::vector<Root> all;
  for (const Root& r : pos) {
    all.push_back(r);
    Root neg = r;
    for (int& x : neg) x = -x;
    all.push_back(neg);
  }
  auto cox = [&](Root r) {
    for (int k = 1; k <= d.rank; ++k) r = simple_reflection(d, k, r);
    return r;
  };
  int order = 0;
  std::vector<Root> cur = all;
  do {
    for (Root& r : cur) r = cox(r);
    ++order;
    if (order > 1000) throw std::logic_error("coxeter_number did not terminate");
  } while (cur != all);
  return order;
}

std::vector<int> psi(const DynkinDiagram& d) {
  int n = d.rank;
  std::vector<int> p(n);
  for (int v = 1; v <= n; ++v) p[v - 1] = v;
  switch (d.family) {
    case Family::A:
      for (int v = 1; v <= n; ++v) p[v - 1] = n + 1 - v;
      break;
    case Family::D:
      if (n % 2 == 1) std::swap(p[n - 2], p[n - 1]);
      break;
    case Family::E:
      if (n == 6) {
        p = {5, 4, 3, 2, 1, 6};
      }
      break;
  }
  return p;
}

std::string root_string(const Root& r) {
  std::string s;
  for (int x : r) {
    if (x < 0 || x > 9) throw std::invalid_argument("root coefficient out of digit range");
    s += char('0' + x);
  }
  return s;
}

Root root_from_string(const std::string& s) {
  Root r;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad root string: " + s);
    r.push_back(c - '0');
  }
  return r;
}

}  // namespace minrpp
