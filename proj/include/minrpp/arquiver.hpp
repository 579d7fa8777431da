#pragma once

#include <string>
#include <vector>

#include "minrpp/dynkin.hpp"

namespace minrpp {

// Vertex of the Auslander-Reiten quiver of rep Q.  `orbit` is the index of
// the projective in the same tau-orbit (this is the labelling pi), `depth`
// counts inverse-tau steps from that projective.
struct ArVertex {
  int id = -1;
  Root root;
  int orbit = 0;
  int depth = 0;
  bool projective = false;
  bool injective = false;
  std::vector<int> out;  // irreducible maps
  std::vector<int> in;
  int tau = -1;       // tau(this), -1 for projectives
  int tau_inv = -1;   // tau^{-1}(this), -1 for injectives
};

struct ArQuiver {
  DynkinQuiver quiver;
  std::vector<ArVertex> v;

  int find_root(const Root& r) const;           // -1 if absent
  int at(int orbit, int depth) const;           // -1 if absent
  const ArVertex& operator[](int id) const { return v[id]; }
  int size() const { return (int)v.size(); }
  // Orbit sizes; max_depth[i-1] is the depth of the injective in orbit i.
  std::vector<int> max_depth() const;
  std::string dot() const;
};

Root projective_root(const DynkinQuiver& q, int i);
Root injective_root(const DynkinQuiver& q, int i);

// Knit the AR quiver from the projectives using the mesh additivity rule.
ArQuiver ar_quiver(const DynkinQuiver& q);

// Full subquiver on the vertices supported at m (induced arrows kept),
// returned as AR vertex ids in knitting order.
std::vector<int> support_at(const ArQuiver& arq, int m);

}  // namespace minrpp
