#include "doctest.h"
#include "minrpp/arquiver.hpp"

using namespace minrpp;

namespace {

DynkinQuiver a3(std::vector<std::pair<int, int>> arrows) {
  return DynkinQuiver::make(DynkinDiagram::make(Family::A, 3), std::move(arrows));
}

}  // namespace

TEST_CASE("projectives follow the paper's convention") {
  // Q1 = 1<-2<-3: P_1 = 100, P_2 = 110, P_3 = 111 (Figure 3a left slice).
  DynkinQuiver q1 = a3({{2, 1}, {3, 2}});
  CHECK(projective_root(q1, 1) == Root{1, 0, 0});
  CHECK(projective_root(q1, 2) == Root{1, 1, 0});
  CHECK(projective_root(q1, 3) == Root{1, 1, 1});
  CHECK(injective_root(q1, 1) == Root{1, 1, 1});
  CHECK(injective_root(q1, 3) == Root{0, 0, 1});
}

TEST_CASE("AR quiver of 1->2<-3 matches Figure 3(b)") {
  DynkinQuiver q2 = a3({{1, 2}, {3, 2}});
  ArQuiver arq = ar_quiver(q2);
  CHECK(arq.size() == 6);
  // tau-orbit of P_2 = 010 is {010, 111}
  int p2 = arq.find_root({0, 1, 0});
  REQUIRE(p2 >= 0);
  CHECK(arq[p2].orbit == 2);
  CHECK(arq[p2].projective);
  int t = arq[p2].tau_inv;
  REQUIRE(t >= 0);
  CHECK(arq[t].root == Root{1, 1, 1});
  CHECK(arq[t].tau_inv == -1);  // 111 is injective for this orientation
  // arrows 010 -> 110, 010 -> 011, 110 -> 111, 011 -> 111
  auto has_arrow = [&](Root a, Root b) {
    int x = arq.find_root(a), y = arq.find_root(b);
    for (int z : arq[x].out)
      if (z == y) return true;
    return false;
  };
  CHECK(has_arrow({0, 1, 0}, {1, 1, 0}));
  CHECK(has_arrow({0, 1, 0}, {0, 1, 1}));
  CHECK(has_arrow({1, 1, 0}, {1, 1, 1}));
  CHECK(has_arrow({0, 1, 1}, {1, 1, 1}));
}

TEST_CASE("AR quiver of 1<-2<-3 matches Figure 3(a) slices") {
  DynkinQuiver q1 = a3({{2, 1}, {3, 2}});
  ArQuiver arq = ar_quiver(q1);
  CHECK(arq.size() == 6);
  // middle tau-orbit (of P_2 = 110): {110, 011}
  int p2 = arq.find_root({1, 1, 0});
  CHECK(arq[p2].orbit == 2);
  int nxt = arq[p2].tau_inv;
  CHECK(arq[nxt].root == Root{0, 1, 1});
  // bottom orbit of P_1 = 100: {100, 010, 001}
  int p1 = arq.find_root({1, 0, 0});
  int a = arq[p1].tau_inv;
  CHECK(arq[a].root == Root{0, 1, 0});
  int b = arq[a].tau_inv;
  CHECK(arq[b].root == Root{0, 0, 1});
}

TEST_CASE("single vertex") {
  DynkinQuiver q = DynkinQuiver::make(DynkinDiagram::make(Family::A, 1), {});
  ArQuiver arq = ar_quiver(q);
  CHECK(arq.size() == 1);
  CHECK(arq[0].out.empty());
}

TEST_CASE("vertex count equals root count and mesh additivity holds") {
  std::vector<DynkinQuiver> qs;
  qs.push_back(DynkinQuiver::linear(DynkinDiagram::make(Family::A, 5)));
  qs.push_back(DynkinQuiver::linear(DynkinDiagram::make(Family::D, 4)));
  qs.push_back(DynkinQuiver::linear(DynkinDiagram::make(Family::D, 5)));
  qs.push_back(DynkinQuiver::linear(DynkinDiagram::make(Family::E, 6)));
  qs.push_back(a3({{2, 1}, {3, 2}}));
  for (const auto& q : qs) {
    ArQuiver arq = ar_quiver(q);
    CHECK(arq.size() == (int)positive_roots(q.diagram).size());
    for (const ArVertex& x : arq.v) {
      if (x.tau == -1) continue;  // projective
      // dim tau(X) + dim X = sum over arrows Y -> X of dim Y
      Root sum(q.rank(), 0);
      for (int y : x.in)
        for (int j = 0; j < q.rank(); ++j) sum[j] += arq[y].root[j];
      for (int j = 0; j < q.rank(); ++j)
        CHECK(arq[x.tau].root[j] + x.root[j] == sum[j]);
    }
  }
}

TEST_CASE("support_at") {
  DynkinQuiver q2 = a3({{1, 2}, {3, 2}});
  CHECK(support_at(ar_quiver(q2), 2).size() == 4);
  DynkinQuiver a5 = DynkinQuiver::make(DynkinDiagram::make(Family::A, 5),
                                       {{2, 1}, {3, 2}, {4, 3}, {5, 4}});
  CHECK(support_at(ar_quiver(a5), 3).size() == 9);
  DynkinQuiver a2 = DynkinQuiver::make(DynkinDiagram::make(Family::A, 2), {{1, 2}});
  auto s = support_at(ar_quiver(a2), 1);
  CHECK(s.size() == 2);
}

TEST_CASE("minuscule support has coefficient one") {
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::A, 4}, {Family::D, 4}, {Family::D, 5}, {Family::E, 6}}) {
    DynkinDiagram d = DynkinDiagram::make(fam, rank);
    DynkinQuiver q = DynkinQuiver::linear(d);
    ArQuiver arq = ar_quiver(q);
    for (int m : minuscule_vertices(d))
      for (int id : support_at(arq, m)) CHECK(arq[id].root[m - 1] == 1);
  }
}
