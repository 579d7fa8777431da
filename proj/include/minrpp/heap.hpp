#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minrpp/arquiver.hpp"
#include "minrpp/dynkin.hpp"

namespace minrpp {

// Subsets of heap elements as bitsets; minuscule posets have at most 27
// elements (E7), so 32 bits suffice.
using ElemSet = uint32_t;

struct HeapElem {
  int id = -1;
  Root root;
  int pi = 0;                  // quiver vertex of the projective in the tau-orbit
  int orbit_depth = 0;         // depth within the tau-orbit (AR coordinates)
  std::vector<int> up, down;   // covers
};

// Abstract finite poset with a fibre map, the shape verify_heap checks.
struct PiPoset {
  DynkinDiagram diagram;
  int size = 0;
  std::vector<int> pi;                 // per element
  std::vector<std::vector<int>> up;    // cover lists
  std::vector<ElemSet> upset;          // upset[x] = { y : y >= x }
  bool leq(int a, int b) const { return (upset[a] >> b) & 1u; }
  void close();                        // fills upset from covers
};

struct MinusculeHeap {
  DynkinQuiver quiver;
  int m = 0;
  std::vector<HeapElem> el;
  std::vector<std::vector<int>> fibre;  // fibre[v-1], bottom to top
  std::vector<ElemSet> upset;           // upset[x] = { y : y >= x }

  int size() const { return (int)el.size(); }
  bool leq(int a, int b) const { return (upset[a] >> b) & 1u; }
  int find_root(const Root& r) const;  // -1 if absent
  ElemSet all() const { return size() == 32 ? ~0u : ((1u << size()) - 1u); }

  bool is_filter(ElemSet s) const;
  bool is_ideal(ElemSet s) const;
  std::vector<ElemSet> all_filters() const;
  std::vector<int> minimal_of(ElemSet s) const;
  std::vector<int> maximal_of(ElemSet s) const;

  PiPoset as_pi_poset() const;
  std::string dot() const;
};

// Build P_{Q,m}; rejects non-minuscule m.
MinusculeHeap minuscule_heap(const DynkinQuiver& q, int m);
MinusculeHeap minuscule_heap(const ArQuiver& arq, int m);

struct HeapReport {
  bool h1 = false, h2 = false, h3 = false;
  bool two_neighbourly = false;
  bool converse = false;       // Lemma-4.3-style property
  bool converse_dual = false;
  std::vector<std::string> failures;
  bool ok() const { return h1 && h2 && h3 && two_neighbourly && converse && converse_dual; }
};

HeapReport verify_heap(const PiPoset& p);
HeapReport verify_heap(const MinusculeHeap& h);

// The unique order-reversing involution with pi(Ant(x)) = psi(pi(x)).
// Throws if none exists (signals a construction bug).
std::vector<int> ant(const MinusculeHeap& h);

// Plain finite poset, used for the Table-1 reference constructions.
struct Poset {
  int size = 0;
  std::vector<std::vector<int>> up;  // covers
  std::vector<ElemSet> upset;
  void close();
  bool leq(int a, int b) const { return (upset[a] >> b) & 1u; }
};

Poset chain_product(int a, int b);  // [a] x [b]
Poset order_ideals(const Poset& p);  // J(P), ordered by inclusion
bool poset_isomorphic(const Poset& a, const Poset& b);

// Identify the heap with its Table-1 construction, e.g. "[2]x[3]",
// "J([2]x[3])", "J^2([2]x[2])".  Throws on mismatch.
std::string iso_type(const MinusculeHeap& h);

}  // namespace minrpp
