#pragma once

#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "minrpp/arquiver.hpp"
#include "minrpp/heap.hpp"
#include "minrpp/rpp.hpp"

namespace minrpp {

// Multiplicities of indecomposable summands, indexed by heap element id.
using MultVector = std::vector<long long>;

MultVector zero_mult(const MinusculeHeap& h);
Root dim_of(const MinusculeHeap& h, const MultVector& c);

// Default linear order on all indecomposables, compatible with the opposite
// of the AR quiver order (rightmost first, starting with a simple injective).
std::vector<int> ar_linearization(const ArQuiver& arq);
// Restriction to the heap, as heap element ids.
std::vector<int> linearize(const MinusculeHeap& h);

// The piecewise-linear bijection: multiplicities -> reverse plane partition.
Rpp rho(const MinusculeHeap& h, const MultVector& c);
// Same, along a caller-chosen linear extension of the opposite AR order.
Rpp rho_with_linearization(const MinusculeHeap& h, const MultVector& c,
                           const std::vector<int>& ar_order);
MultVector rho_inverse(const MinusculeHeap& h, const Rpp& r);

// ---- Xi-splits along order filters -------------------------------------

struct SplitObject {
  ElemSet filter = 0;   // the even region P^even
  MultVector even;      // supported on filter
  MultVector odd;       // supported on the complementary ideal
};

// Combinatorial model of the repetition quiver ZQ: rows are tau-orbits
// labelled by the projectives of Q, depth counts inverse-tau steps.  The
// shift [1] sends (i,p) to (psi(i), p + D_psi(i) + 1); [2] is depth + h.
struct ZqModel {
  DynkinQuiver q;
  int n = 0;
  int h = 0;
  std::vector<int> D;     // injective depth per orbit
  std::vector<int> psi_;  // diagram automorphism
  std::vector<std::tuple<int, int, int>> types;  // (a,b,delta): (a,p)->(b,p+delta)

  static ZqModel build(const ArQuiver& arq);

  using Pos = std::pair<int, int>;  // (orbit, depth)
  Pos shift1(Pos z) const;
  Pos shiftm1(Pos z) const;
  std::vector<Pos> arrows_out(Pos z) const;
  std::vector<Pos> arrows_in(Pos z) const;
};

// A reorientation Xi of Q realized as a window of ZQ positions, together
// with the quiver orientation it induces and the Grothendieck classes of its
// heart's simples (signed roots).  Reflections slide the window.
struct XiState {
  const ZqModel* zq = nullptr;
  DynkinQuiver xi;
  std::set<ZqModel::Pos> W;
  std::vector<Root> simple_class;  // per vertex, in the simple-root basis of Q

  static XiState base(const ZqModel& zq);  // rep Q itself

  ZqModel::Pos heart_projective(int i) const;  // P_i; asserts uniqueness
  ZqModel::Pos heart_injective(int i) const;   // I_i
  XiState reflect_at_source(int i) const;
  XiState reflect_at_sink(int i) const;

  // Heap elements whose objects lie in even shifts of the window.
  ElemSet even_region(const MinusculeHeap& h) const;
  // Dimension vector of an object of the heart (or its shift) with the given
  // class; entries are forced nonnegative, else an error.
  Root heart_dim(const Root& cls) const;
};

// Extended reverse plane partition of the split: finite entries on the
// filter, cofinite entries on the ideal.
Rpp rho_xi(const MinusculeHeap& h, const SplitObject& s);

// Inverse of rho_xi: recover the split from an extended filling.
SplitObject split_for_rpp(const MinusculeHeap& h, const Rpp& r);

enum class ReflectDirection { Grow, Shrink, None };

// Combinatorial shadow of reflecting Xi at vertex i: grow adds the highest
// missing fibre-i element, shrink removes the lowest present one; both must
// preserve the filter property.
ElemSet reflect_filter(const MinusculeHeap& h, ElemSet filter, int i, ReflectDirection dir);

// Reflection path (vertex toggled at each step) from rep Q to a state whose
// even region equals `filter`; used by rho_xi and exposed for tests.
std::vector<int> reflection_path_to_filter(const MinusculeHeap& h, ElemSet filter);
// The window state that path reaches.
XiState xi_state_for_filter(const MinusculeHeap& h, ElemSet filter);

}  // namespace minrpp
