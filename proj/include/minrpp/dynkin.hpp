#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace minrpp {

enum class Family { A, D, E };

std::string family_name(Family f);
Family family_from_char(char c);

// Simply-laced Dynkin diagram with the fixed vertex labelling:
//   A_n : path 1 - 2 - ... - n
//   D_n : path 1 - 2 - ... - (n-2), with n-1 and n attached to n-2
//   E_6 : path 1..5 with 6 attached to 3
//   E_7 : path 1..6 with 7 attached to 4
//   E_8 : path 1..7 with 8 attached to 5
struct DynkinDiagram {
  Family family;
  int rank;

  static DynkinDiagram make(Family f, int rank);

  std::vector<std::pair<int, int>> edges() const;  // canonical {a,b}, a < b
  std::vector<int> neighbors(int v) const;
  int degree(int v) const;
  bool adjacent(int a, int b) const;
  std::string name() const;  // e.g. "D5"
};

DynkinDiagram diagram_from_name(const std::string& name);  // "A5", "E7", ...

// Acyclic orientation of a Dynkin diagram together with an admissible
// numbering (arrows go from lower to higher numbers).  Vertices keep the
// canonical diagram labels; the numbering is a separate permutation.
struct DynkinQuiver {
  DynkinDiagram diagram;
  std::vector<std::pair<int, int>> arrows;  // s -> t, one per edge
  std::vector<int> numbering;               // numbering[v-1] in 1..n, admissible

  static DynkinQuiver make(DynkinDiagram d, std::vector<std::pair<int, int>> arrows);
  // All edges oriented from the smaller to the larger canonical label.
  static DynkinQuiver linear(DynkinDiagram d);

  int rank() const { return diagram.rank; }
  bool has_arrow(int s, int t) const;
  bool is_source(int v) const;
  bool is_sink(int v) const;
  std::vector<int> arrows_out(int v) const;  // targets
  std::vector<int> arrows_in(int v) const;   // sources
  // Diagram vertices sorted by numbering, i.e. the promotion order.
  std::vector<int> vertices_by_numbering() const;
  std::string describe() const;
};

// Reverse all arrows incident to k; requires k to be a source or a sink.
DynkinQuiver sigma_vertex(const DynkinQuiver& q, int k);

DynkinQuiver opposite(const DynkinQuiver& q);

std::set<int> minuscule_vertices(const DynkinDiagram& d);

// Order of a Coxeter element acting on the set of roots.
int coxeter_number(const DynkinDiagram& d);

// The diagram automorphism induced by the longest Weyl element:
// the nontrivial symmetry for A_n, D_odd, E_6; identity otherwise.
// Returned as a 1-based involution, psi[v-1] in 1..n.
std::vector<int> psi(const DynkinDiagram& d);

// Positive roots as dimension vectors indexed by canonical labels.
using Root = std::vector<int>;
std::vector<Root> positive_roots(const DynkinDiagram& d);
Root simple_reflection(const DynkinDiagram& d, int k, const Root& r);

std::string root_string(const Root& r);       // e.g. "01100"
Root root_from_string(const std::string& s);  // inverse (rank <= 9)

}  // namespace minrpp
