// Acceptance suite: one pass/fail line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "minrpp/bijection.hpp"
#include "minrpp/genfun.hpp"
#include "minrpp/jordan.hpp"
#include "minrpp/oracle.hpp"
#include "minrpp/rpp.hpp"
#include "minrpp/typea.hpp"

using namespace minrpp;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& s) { g_notes.push_back(s); }

void criterion(int num, const std::string& what, const std::function<bool()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string err;
  g_notes.clear();
  try {
    ok = body();
  } catch (const std::exception& e) {
    err = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::printf("[%s] criterion %2d: %s (%lld ms)\n", ok ? "PASS" : "FAIL", num, what.c_str(),
              (long long)ms);
  for (const auto& n : g_notes) std::printf("         - %s\n", n.c_str());
  if (!err.empty()) std::printf("         ! exception: %s\n", err.c_str());
  if (!ok) ++g_failures;
  std::fflush(stdout);
}

bool expect(bool cond, const std::string& what) {
  if (!cond) note("failed: " + what);
  return cond;
}

DynkinQuiver quiver(Family f, int n, std::vector<std::pair<int, int>> arrows) {
  return DynkinQuiver::make(DynkinDiagram::make(f, n), std::move(arrows));
}

MultVector mult_of(const MinusculeHeap& h, const std::map<std::string, long long>& m) {
  MultVector c = zero_mult(h);
  for (auto& [k, v] : m) c[h.find_root(root_from_string(k))] = v;
  return c;
}

PartitionTuple fibre_partitions(const Rpp& r) {
  PartitionTuple t;
  for (int v = 1; v <= r.heap->quiver.rank(); ++v) t.push_back(r.fibre_partition(v));
  return t;
}

std::vector<DynkinQuiver> all_orientations(const DynkinDiagram& d) {
  auto edges = d.edges();
  std::vector<DynkinQuiver> out;
  for (int mask = 0; mask < (1 << edges.size()); ++mask) {
    std::vector<std::pair<int, int>> arrows;
    for (size_t i = 0; i < edges.size(); ++i) {
      auto [a, b] = edges[i];
      arrows.push_back((mask >> i) & 1 ? std::pair{b, a} : std::pair{a, b});
    }
    out.push_back(DynkinQuiver::make(d, arrows));
  }
  return out;
}

void for_each_mult(const MinusculeHeap& h, long long maxmult,
                   const std::function<void(const MultVector&)>& f) {
  MultVector c = zero_mult(h);
  std::function<void(int)> rec = [&](int x) {
    if (x == h.size()) {
      f(c);
      return;
    }
    for (long long v = 0; v <= maxmult; ++v) {
      c[x] = v;
      rec(x + 1);
    }
    c[x] = 0;
  };
  rec(0);
}

// ---- criterion 1 ----------------------------------------------------------

bool crit1() {
  bool ok = true;
  MinusculeHeap q2 = minuscule_heap(quiver(Family::A, 3, {{1, 2}, {3, 2}}), 2);
  MinusculeHeap q1 = minuscule_heap(quiver(Family::A, 3, {{2, 1}, {3, 2}}), 2);
  ok &= expect(fibre_partitions(rho(q2, mult_of(q2, {{"010", 1}, {"011", 1}, {"110", 1}}))) ==
                   PartitionTuple{{1}, {2, 1}, {1}},
               "Example 1.3 first tuple");
  ok &= expect(fibre_partitions(rho(q2, mult_of(q2, {{"010", 2}, {"111", 1}}))) ==
                   PartitionTuple{{1}, {3}, {1}},
               "Example 1.3 second tuple");
  ok &= expect(
      fibre_partitions(rho(q2, mult_of(q2, {{"010", 3}, {"011", 2}, {"110", 1}, {"111", 3}}))) ==
          PartitionTuple{{4}, {8, 1}, {5}},
      "section 4.2: ((4),(8,1),(5))");
  ok &= expect(fibre_partitions(rho(q2, mult_of(q2, {{"011", 2}, {"110", 1}, {"111", 3}}))) ==
                   PartitionTuple{{4}, {5, 1}, {5}},
               "section 4.2: ((4),(5,1),(5))");
  ok &= expect(
      fibre_partitions(rho(q1, mult_of(q1, {{"110", 1}, {"111", 3}, {"010", 2}, {"011", 3}}))) ==
          PartitionTuple{{4}, {7, 2}, {6}},
      "section 4.2: ((4),(7,2),(6))");
  ok &= expect(
      fibre_partitions(rho(q2, mult_of(q2, {{"010", 1}, {"011", 3}, {"110", 2}, {"111", 3}}))) ==
          PartitionTuple{{5}, {7, 2}, {6}},
      "section 4.2: ((5),(7,2),(6))");

  // ((4),(3),(5)) two ways: as the finite part of the stage two sink
  // reflections to the right of 1<-2<-3, and through the finite-field oracle
  // over 1<-2->3.
  {
    Rpp stage = rho(q1, mult_of(q1, {{"110", 3}, {"111", 2}, {"010", 1}, {"011", 3}}));
    stage.extended = true;
    stage = toggle_fibre(stage, 1);  // sink reflections move the heart right
    stage = toggle_fibre(stage, 2);
    bool cofin_at_110 = stage.val[q1.find_root({1, 1, 0})].cofin;
    PartitionTuple fin;
    for (int v = 1; v <= 3; ++v) fin.push_back(stage.fibre_partition_finite(v));
    ok &= expect(cofin_at_110 && fin == PartitionTuple{{4}, {3}, {5}},
                 "section 4.2: ((4),(3),(5)) via the reflected stage");
    OracleConfig cfg;
    cfg.seed = 20260809;
    auto g = gen_jf(quiver(Family::A, 3, {{2, 1}, {2, 3}}),
                    {{{0, 0, 1}, 2}, {{1, 0, 0}, 1}, {{1, 1, 1}, 3}}, cfg);
    ok &= expect(g.samples_agree && g.jf == PartitionTuple{{4}, {3}, {5}},
                 "section 4.2: ((4),(3),(5)) via the oracle");
  }

  // Figure 5 grid.
  {
    DynkinQuiver q = quiver(Family::A, 5, {{2, 1}, {3, 2}, {4, 3}, {5, 4}});
    MinusculeHeap h = minuscule_heap(q, 3);
    Rpp r = rho(h, mult_of(h, {{"11100", 4}, {"01100", 3}, {"00110", 1}, {"01110", 1},
                               {"00111", 1}, {"11111", 2}}));
    GridRpp g = rpp_to_grid(r);
    ok &= expect(g.v == std::vector<std::vector<long long>>{{0, 2, 3}, {2, 2, 3}, {6, 8, 10}},
                 "Figure 5 grid");
  }
  // Figure 6 grid.
  {
    DynkinQuiver q = quiver(Family::A, 5, {{1, 2}, {2, 3}, {4, 3}, {5, 4}});
    MinusculeHeap h = minuscule_heap(q, 3);
    Rpp r = rho(h, mult_of(h, {{"11100", 4}, {"01100", 3}, {"01110", 1}, {"11111", 1},
                               {"00110", 1}, {"00111", 2}}));
    GridRpp g = rpp_to_grid(r);
    ok &= expect(g.v == std::vector<std::vector<long long>>{{1, 1, 3}, {1, 3, 4}, {5, 8, 8}},
                 "Figure 6 grid");
  }
  // Figure 4 toggle.
  {
    MinusculeHeap h = minuscule_heap(quiver(Family::A, 4, {{1, 2}, {3, 2}, {4, 3}}), 2);
    int a = h.minimal_of(h.all())[0];
    int f = h.maximal_of(h.all())[0];
    int e = h.fibre[1][1];
    int u1 = h.el[a].up[0], u2 = h.el[a].up[1];
    int b = h.el[u1].up.size() == 2 ? u1 : u2;
    int c = h.el[u1].up.size() == 2 ? u2 : u1;
    int d = h.el[b].up[0] == e ? h.el[b].up[1] : h.el[b].up[0];
    Rpp r = Rpp::zero_extended(h);
    r.val[a] = ExtValue::inf_minus(0);
    r.val[b] = ExtValue::inf_minus(1);
    r.val[c] = ExtValue::inf_minus(2);
    r.val[d] = ExtValue::fin(3);
    r.val[e] = ExtValue::inf_minus(3);
    r.val[f] = ExtValue::fin(1);
    Rpp t = toggle_fibre(r, 2);  // the paper's t_1 in its own labelling
    bool good = t.val[a] == ExtValue::inf_minus(1) && t.val[e] == ExtValue::fin(2) &&
                t.val[b] == ExtValue::inf_minus(1) && t.val[c] == ExtValue::inf_minus(2) &&
                t.val[d] == ExtValue::fin(3) && t.val[f] == ExtValue::fin(1);
    ok &= expect(good, "Figure 4 fibre toggle");
  }
  return ok;
}

// ---- criterion 2 ----------------------------------------------------------

bool crit2() {
  MinusculeHeap h = minuscule_heap(quiver(Family::A, 3, {{1, 2}, {3, 2}}), 2);
  OracleConfig cfg;
  cfg.samples = 4;
  bool ok = true;
  for (long long a = 0; a <= 3; ++a)
    for (long long b = 0; b <= 3; ++b)
      for (long long c = 0; c <= 3; ++c)
        for (long long d = 0; d <= 3; ++d) {
          PartitionTuple want(3);
          want[0] = normalized({c + d});
          want[1] = normalized({std::max(b, c) + a + d, std::min(b, c)});
          want[2] = normalized({b + d});
          MultVector m = mult_of(h, {{"010", a}, {"011", b}, {"110", c}, {"111", d}});
          if (fibre_partitions(rho(h, m)) != want) {
            note("rho mismatch at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(c) + "," + std::to_string(d) + ")");
            ok = false;
          }
          cfg.seed = 1000 + a * 64 + b * 16 + c * 4 + d;
          auto g = gen_jf(h, m, cfg);
          if (!g.samples_agree || g.jf != want) {
            note("oracle mismatch at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(c) + "," + std::to_string(d) + ")");
            ok = false;
          }
        }
  return ok;
}

// ---- criterion 3 ----------------------------------------------------------

bool crit3() {
  bool ok = true;
  std::vector<MinusculeHeap> heaps;
  for (const auto& q : all_orientations(DynkinDiagram::make(Family::A, 3)))
    heaps.push_back(minuscule_heap(q, 2));
  for (int m : {2, 3}) {
    heaps.push_back(minuscule_heap(DynkinQuiver::linear(DynkinDiagram::make(Family::A, 4)), m));
    heaps.push_back(minuscule_heap(quiver(Family::A, 4, {{2, 1}, {2, 3}, {4, 3}}), m));
  }
  for (auto arrows : std::vector<std::vector<std::pair<int, int>>>{
           {{1, 2}, {2, 3}, {2, 4}}, {{2, 1}, {3, 2}, {4, 2}}})
    heaps.push_back(minuscule_heap(quiver(Family::D, 4, arrows), 1));
  for (const auto& h : heaps) {
    std::set<std::string> images;
    long long count = 0;
    bool good = true;
    for_each_mult(h, 2, [&](const MultVector& c) {
      Rpp r = rho(h, c);
      if (rho_inverse(h, r) != c) good = false;
      images.insert(r.str());
      ++count;
    });
    if (!good) {
      note("roundtrip failed on " + h.quiver.describe());
      ok = false;
    }
    if ((long long)images.size() != count) {
      note("rho is not injective on " + h.quiver.describe());
      ok = false;
    }
  }
  return ok;
}

// ---- criterion 4 ----------------------------------------------------------

bool crit4() {
  bool ok = true;
  OracleConfig cfg = OracleConfig::from_env();
  std::vector<MinusculeHeap> heaps;
  heaps.push_back(minuscule_heap(DynkinQuiver::linear(DynkinDiagram::make(Family::A, 4)), 2));
  heaps.push_back(minuscule_heap(DynkinQuiver::linear(DynkinDiagram::make(Family::D, 5)), 4));
  for (const auto& h : heaps) {
    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
    for (int trial = 0; trial < 50; ++trial) {
      MultVector c = zero_mult(h);
      for (auto& v : c) v = rng() % 3;
      OracleConfig c2 = cfg;
      c2.seed = cfg.seed + 7919 * trial;
      auto g = gen_jf(h, c, c2);
      if (!g.samples_agree || g.jf != fibre_partitions(rho(h, c))) {
        note("oracle disagreement on " + h.quiver.describe() + " trial " + std::to_string(trial));
        ok = false;
      }
    }
  }
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c) {
        Partition want = a + c - b > 0 ? Partition{a + c - b} : Partition{};
        if (generic_coker_jf(a, b, c, cfg.prime, cfg.seed + a * 49 + b * 7 + c) != want) {
          note("cokernel formula failed at (" + std::to_string(a) + "," + std::to_string(b) +
               "," + std::to_string(c) + ")");
          ok = false;
        }
      }
  return ok;
}

// ---- criteria 5 and 6 -----------------------------------------------------

struct PeriodCase {
  MinusculeHeap h;
  long long coxeter;
};

std::vector<PeriodCase> period_cases() {
  std::vector<PeriodCase> cases;
  cases.push_back({minuscule_heap(quiver(Family::A, 3, {{1, 2}, {3, 2}}), 2), 4});
  cases.push_back({minuscule_heap(DynkinQuiver::linear(DynkinDiagram::make(Family::A, 4)), 2), 5});
  for (int m : {1, 3, 4})
    cases.push_back(
        {minuscule_heap(DynkinQuiver::linear(DynkinDiagram::make(Family::D, 4)), m), 6});
  cases.push_back({minuscule_heap(DynkinQuiver::linear(DynkinDiagram::make(Family::D, 5)), 4), 8});
  cases.push_back({minuscule_heap(DynkinQuiver::linear(DynkinDiagram::make(Family::E, 6)), 1), 12});
  cases.push_back({minuscule_heap(DynkinQuiver::linear(DynkinDiagram::make(Family::E, 7)), 6), 18});
  return cases;
}

bool crit5() {
  bool ok = true;
  auto cases = period_cases();
  struct Ex {
    size_t idx;
    long long maxN;
  };
  for (auto [idx, maxN] : {Ex{0, 3}, Ex{1, 2}, Ex{2, 2}, Ex{3, 2}, Ex{4, 2}}) {
    const auto& pc = cases[idx];
    for (long long N = 1; N <= maxN; ++N) {
      long long order = promotion_order(pc.h, N, {});
      if (order != pc.coxeter || pc.coxeter % order != 0) {
        note("order " + std::to_string(order) + " != h=" + std::to_string(pc.coxeter) + " on " +
             pc.h.quiver.describe() + " N=" + std::to_string(N));
        ok = false;
      }
    }
  }
  struct Sam {
    size_t idx;
    long long N;
  };
  for (auto [idx, N] : {Sam{5, 2}, Sam{6, 2}, Sam{7, 1}}) {
    const auto& pc = cases[idx];
    std::mt19937_64 rng(20260809 + (unsigned)idx);
    for (int s = 0; s < 500; ++s) {
      Rpp r = random_rpp(pc.h, N, rng);
      Rpp p = r;
      for (long long k = 0; k < pc.coxeter; ++k) p = promotion(p);
      if (!(p == r)) {
        note("pro^h != id on sampled filling, " + pc.h.quiver.describe());
        ok = false;
        break;
      }
    }
  }
  return ok;
}

bool crit6() {
  bool ok = true;
  for (const auto& pc : period_cases()) {
    std::mt19937_64 rng(97 + pc.h.size());
    for (int s = 0; s < 200; ++s) {
      Rpp r = random_extended_rpp(pc.h, 3, rng);
      Rpp p = r;
      for (long long k = 0; k < pc.coxeter; ++k) p = promotion(p);
      if (!(p == r)) {
        note("extended pro^h != id on " + pc.h.quiver.describe());
        ok = false;
        break;
      }
    }
    MultVector c = zero_mult(pc.h);
    Root sm(pc.h.quiver.rank(), 0);
    sm[pc.h.m - 1] = 1;
    c[pc.h.find_root(sm)] = 1;
    Rpp r = rho(pc.h, c);
    r.extended = true;
    Rpp p = r;
    long long order = 0;
    do {
      p = promotion(p);
      ++order;
    } while (!(p == r) && order <= pc.coxeter + 1);
    if (order != pc.coxeter) {
      note("witness orbit has size " + std::to_string(order) + " != h on " +
           pc.h.quiver.describe());
      ok = false;
    }
  }
  return ok;
}

// ---- criterion 7 ----------------------------------------------------------

bool crit7() {
  bool ok = true;
  std::vector<MinusculeHeap> heaps;
  for (const auto& q : all_orientations(DynkinDiagram::make(Family::A, 2)))
    for (int m : {1, 2}) heaps.push_back(minuscule_heap(q, m));
  for (const auto& q : all_orientations(DynkinDiagram::make(Family::A, 3)))
    heaps.push_back(minuscule_heap(q, 2));

  OracleConfig cfg;
  cfg.samples = 4;
  cfg.seed = 555;

  for (const auto& h : heaps) {
    ArQuiver arq = ar_quiver(h.quiver);
    ZqModel zq = ZqModel::build(arq);

    // every filter: exhaustive splits with multiplicities <= 1 roundtrip
    for (ElemSet f : h.all_filters()) {
      for (int mask = 0; mask < (1 << h.size()); ++mask) {
        SplitObject s;
        s.filter = f;
        s.even = zero_mult(h);
        s.odd = zero_mult(h);
        for (int z = 0; z < h.size(); ++z)
          (((f >> z) & 1u) ? s.even[z] : s.odd[z]) = (mask >> z) & 1;
        Rpp r = rho_xi(h, s);
        for (int z = 0; z < h.size(); ++z)
          if ((r.val[z].cofin) == bool((f >> z) & 1u)) {
            note("finite region mismatch");
            ok = false;
          }
        SplitObject back = split_for_rpp(h, r);
        if (back.filter != s.filter || back.even != s.even || back.odd != s.odd) {
          note("split roundtrip failed on " + h.quiver.describe());
          ok = false;
        }
      }
      if (!ok) return false;
    }

    // sweeps: filter moves, comb-alt interlacing, splits, and the oracle on
    // the reflected heart at every stage; full sweep = promotion
    for (int mask = 0; mask < (1 << h.size()); ++mask) {
      MultVector x = zero_mult(h);
      for (int i = 0; i < h.size(); ++i) x[i] = (mask >> i) & 1;
      XiState st = XiState::base(zq);
      Rpp cur = rho(h, x);
      cur.extended = true;
      ElemSet prev_filter = h.all();
      for (long long round = 0; round < zq.h; ++round) {
        Rpp round_start = cur;
        for (int v : h.quiver.vertices_by_numbering()) {
          // comb-alt reads the fibres of the heart's own poset; when the even
          // region sits at the bottom of the heap, the slot fibres carry the
          // psi-twisted labels.
          ElemSet pre_even = st.even_region(h);
          std::vector<int> ps = psi(h.quiver.diagram);
          int slot_v = h.is_filter(pre_even) ? v : ps[v - 1];
          Partition lambda = cur.fibre_partition_finite(slot_v);
          Partition mu;
          for (int nb : h.quiver.diagram.neighbors(slot_v))
            mu = merge_parts(mu, cur.fibre_partition_finite(nb));
          XiState next = st.reflect_at_source(v);
          Rpp toggled = toggle_fibre(cur, v);
          ElemSet fin = 0;
          for (int z = 0; z < h.size(); ++z)
            if (!toggled.val[z].cofin) fin |= 1u << z;
          if (!h.is_filter(fin)) {
            note("finite region is not a filter");
            ok = false;
          }
          bool grew = __builtin_popcount(fin) > __builtin_popcount(prev_filter);
          bool shrank = __builtin_popcount(fin) < __builtin_popcount(prev_filter);
          // the interlacing lemma presumes the leaving simple is outside the
          // category, so it says nothing about shrinking steps
          if (!shrank && !t_interlaced(lambda, mu, grew ? 1 : 0)) {
            note("comb-alt interlacing failed at vertex " + std::to_string(v) + " on " +
                 h.quiver.describe());
            ok = false;
          }
          if (fin != prev_filter) {
            ReflectDirection dir = grew ? ReflectDirection::Grow : ReflectDirection::Shrink;
            if (reflect_filter(h, prev_filter, v, dir) != fin) {
              note("reflect_filter mismatch");
              ok = false;
            }
          }
          st = next;
          cur = toggled;
          prev_filter = fin;
          SplitObject s = split_for_rpp(h, cur);
          if (s.filter != fin || !(rho_xi(h, s) == cur)) {
            note("rho_xi(split_for_rpp) != stage filling");
            ok = false;
          }
          // oracle cross-check on the reflected heart
          ElemSet even = st.even_region(h);
          std::vector<std::pair<Root, long long>> even_parts, odd_parts;
          for (int z = 0; z < h.size(); ++z) {
            if (!x[z]) continue;
            Root cls = h.el[z].root;
            if ((even >> z) & 1u) {
              even_parts.push_back({st.heart_dim(cls), x[z]});
            } else {
              for (int& cc : cls) cc = -cc;
              odd_parts.push_back({st.heart_dim(cls), x[z]});
            }
          }
          auto ge = gen_jf(st.xi, even_parts, cfg);
          auto go = gen_jf(st.xi, odd_parts, cfg);
          PartitionTuple fin_parts, cof_parts;
          for (int w = 1; w <= h.quiver.rank(); ++w) {
            fin_parts.push_back(cur.fibre_partition_finite(w));
            cof_parts.push_back(cur.fibre_partition_cofin(w));
          }
          if (!ge.samples_agree || ge.jf != fin_parts) {
            note("even Jordan data mismatch at a sweep stage on " + h.quiver.describe());
            ok = false;
          }
          if (!go.samples_agree || go.jf != cof_parts) {
            note("odd Jordan data mismatch at a sweep stage on " + h.quiver.describe());
            ok = false;
          }
          if (!ok) return false;
        }
        if (!(cur == promotion(round_start))) {
          note("full reflection sweep != promotion on " + h.quiver.describe());
          ok = false;
        }
      }
      Rpp back = rho(h, x);
      back.extended = true;
      if (!(cur == back)) {
        note("grand cycle is not the identity on " + h.quiver.describe());
        ok = false;
      }
      if (!ok) return false;
    }
  }
  return ok;
}

// ---- criterion 8 ----------------------------------------------------------

bool crit8() {
  bool ok = true;
  MinusculeHeap a3 = minuscule_heap(quiver(Family::A, 3, {{1, 2}, {3, 2}}), 2);
  for (ElemSet f : a3.all_filters())
    if (!generating_function_check(a3, f, 8)) {
      note("generating function mismatch on an A3 filter");
      ok = false;
    }
  for (int m : {1, 3, 4}) {
    MinusculeHeap d4 = minuscule_heap(DynkinQuiver::linear(DynkinDiagram::make(Family::D, 4)), m);
    if (!generating_function_check(d4, d4.all(), 8)) {
      note("generating function mismatch on D4 m=" + std::to_string(m));
      ok = false;
    }
  }
  return ok;
}

// ---- criterion 9 ----------------------------------------------------------

bool crit9() {
  bool ok = true;
  DynkinQuiver hg_q = quiver(Family::A, 5, {{2, 1}, {3, 2}, {4, 3}, {5, 4}});
  DynkinQuiver rsk_q = quiver(Family::A, 5, {{1, 2}, {2, 3}, {4, 3}, {5, 4}});
  MinusculeHeap hg_h = minuscule_heap(hg_q, 3);
  MinusculeHeap rsk_h = minuscule_heap(rsk_q, 3);
  for (int mask = 0; mask < (1 << 9) && ok; ++mask) {
    MultVector c1 = zero_mult(hg_h);
    for (int z = 0; z < 9; ++z) c1[z] = (mask >> z) & 1;
    GridRpp viarho = rpp_to_grid(rho(hg_h, c1));
    GridRpp viahg = hillman_grassl(mult_to_hooks(hg_h, c1));
    if (!(viarho == viahg)) {
      note("HG mismatch at mask " + std::to_string(mask));
      ok = false;
    }
    if (hooks_to_mult(hg_h, hillman_grassl_inverse(viahg)) != c1) {
      note("HG inverse mismatch at mask " + std::to_string(mask));
      ok = false;
    }
  }
  for (int mask = 0; mask < (1 << 9) && ok; ++mask) {
    MultVector c2 = zero_mult(rsk_h);
    for (int z = 0; z < 9; ++z) c2[z] = (mask >> z) & 1;
    GridRpp viarho = rpp_to_grid(rho(rsk_h, c2));
    GridRpp viarsk = rsk_rect(mult_to_hooks(rsk_h, c2));
    if (!(viarho == viarsk)) {
      note("RSK mismatch at mask " + std::to_string(mask));
      ok = false;
    }
    if (hooks_to_mult(rsk_h, rsk_rect_inverse(viarsk)) != c2) {
      note("RSK inverse mismatch at mask " + std::to_string(mask));
      ok = false;
    }
  }
  {
    MultVector c = mult_of(hg_h, {{"11100", 4}, {"01100", 3}, {"00110", 1}, {"01110", 1},
                                  {"00111", 1}, {"11111", 2}});
    GridRpp g = hillman_grassl(mult_to_hooks(hg_h, c));
    ok &= expect(g.v == std::vector<std::vector<long long>>{{0, 2, 3}, {2, 2, 3}, {6, 8, 10}},
                 "Figure 5 via Hillman-Grassl");
    MultVector c6 = mult_of(rsk_h, {{"11100", 4}, {"01100", 3}, {"01110", 1}, {"11111", 1},
                                    {"00110", 1}, {"00111", 2}});
    GridRpp g6 = rsk_rect(mult_to_hooks(rsk_h, c6));
    ok &= expect(g6.v == std::vector<std::vector<long long>>{{1, 1, 3}, {1, 3, 4}, {5, 8, 8}},
                 "Figure 6 via RSK");
  }
  // the orientation-dependence example of section 6.4
  {
    DynkinQuiver q = quiver(Family::A, 5, {{2, 1}, {2, 3}, {4, 3}, {4, 5}});
    MinusculeHeap h = minuscule_heap(q, 3);
    MultVector c = mult_of(h, {{"01100", 1}, {"01110", 1}, {"11111", 2}, {"00110", 2}});
    Rpp r = rho(h, c);
    std::map<std::string, long long> displayed = {
        {"00110", 2}, {"00111", 3}, {"11110", 2}, {"11111", 2}, {"01110", 1},
        {"01111", 1}, {"00100", 3}, {"11100", 3}, {"01100", 2}};
    bool match = true;
    for (auto& [k, v] : displayed)
      if (r.fin(h.find_root(root_from_string(k))) != v) match = false;
    ok &= expect(match, "section 6.4 filling matches the displayed one");
    int maxel = h.maximal_of(h.all())[0];
    long long at_max = r.fin(maxel);
    GridRpp grho = rpp_to_grid(r);
    GridRpp ghg = hillman_grassl(mult_to_hooks(h, c));
    GridRpp grsk = rsk_rect(mult_to_hooks(h, c));
    ok &= expect(ghg.at(1, 1) == 0 && grsk.at(1, 1) == 0,
                 "HG and RSK label the maximal element with 0");
    ok &= expect(at_max != 0 && grho.at(1, 1) == at_max,
                 "rho labels the maximal element differently");
    ok &= expect(!(grho == ghg) && !(grho == grsk), "rho differs from both images");
    ok &= expect(r.fin(h.find_root(root_from_string("01100"))) == 2,
                 "entry 2 at the top-drawn element");
  }
  return ok;
}

// ---- criterion 10 ---------------------------------------------------------

bool crit10() {
  bool ok = true;
  for (int m : {1, 2, 3})
    for (const auto& q : all_orientations(DynkinDiagram::make(Family::A, 3))) {
      MinusculeHeap h = minuscule_heap(q, m);
      bool good = true;
      for_each_mult(h, 2, [&](const MultVector& c) {
        Rpp r = rho(h, c);
        for (int i = 1; i <= 3; ++i)
          if (gk_partition(build_tilde_poset(h, c, i)) != r.fibre_partition(i)) good = false;
      });
      if (!good) {
        note("GK mismatch on " + h.quiver.describe() + " m=" + std::to_string(m));
        ok = false;
      }
    }
  return ok;
}

// ---- criterion 11 ---------------------------------------------------------

bool crit11() {
  bool ok = true;
  std::vector<DynkinDiagram> ds;
  for (int n = 1; n <= 7; ++n) ds.push_back(DynkinDiagram::make(Family::A, n));
  for (int n = 4; n <= 7; ++n) ds.push_back(DynkinDiagram::make(Family::D, n));
  ds.push_back(DynkinDiagram::make(Family::E, 6));
  ds.push_back(DynkinDiagram::make(Family::E, 7));
  for (const auto& d : ds)
    for (int m : minuscule_vertices(d)) {
      MinusculeHeap h = minuscule_heap(DynkinQuiver::linear(d), m);
      HeapReport rep = verify_heap(h);
      if (!rep.ok()) {
        note("axioms failed on " + d.name() + " m=" + std::to_string(m));
        ok = false;
      }
      try {
        (void)iso_type(h);
        (void)ant(h);
      } catch (const std::exception& e) {
        note(std::string("iso/ant failed: ") + e.what());
        ok = false;
      }
    }
  std::vector<MinusculeHeap> small;
  small.push_back(minuscule_heap(quiver(Family::A, 3, {{1, 2}, {3, 2}}), 2));
  small.push_back(minuscule_heap(DynkinQuiver::linear(DynkinDiagram::make(Family::A, 4)), 2));
  small.push_back(minuscule_heap(DynkinQuiver::linear(DynkinDiagram::make(Family::A, 5)), 3));
  small.push_back(minuscule_heap(DynkinQuiver::linear(DynkinDiagram::make(Family::D, 4)), 1));
  small.push_back(minuscule_heap(DynkinQuiver::linear(DynkinDiagram::make(Family::D, 5)), 4));
  for (const auto& h : small) {
    if (h.size() > 10) continue;
    bool good = true;
    enumerate_rpps(h, 2, [&](const Rpp& r) {
      for (int x = 0; x < h.size() && good; ++x) {
        if (!(toggle(toggle(r, x), x) == r)) good = false;
        for (int y = x + 1; y < h.size() && good; ++y) {
          bool cover = false;
          for (int u : h.el[x].up) cover |= u == y;
          for (int u : h.el[x].down) cover |= u == y;
          if (cover) continue;
          if (!(toggle(toggle(r, x), y) == toggle(toggle(r, y), x))) good = false;
        }
      }
    });
    if (!good) {
      note("toggle involution/commutation failed on " + h.quiver.describe());
      ok = false;
    }
  }
  {
    std::mt19937_64 rng(31337);
    for (auto arrows : std::vector<std::vector<std::pair<int, int>>>{
             {{1, 2}, {3, 2}}, {{2, 1}, {3, 2}}}) {
      MinusculeHeap h = minuscule_heap(quiver(Family::A, 3, arrows), 2);
      ArQuiver arq = ar_quiver(h.quiver);
      for (int trial = 0; trial < 25; ++trial) {
        MultVector c = zero_mult(h);
        for (auto& v : c) v = rng() % 3;
        Rpp ref = rho(h, c);
        std::vector<int> outdeg(arq.size());
        for (const ArVertex& xv : arq.v) outdeg[xv.id] = (int)xv.out.size();
        std::vector<int> avail, order;
        for (int i = 0; i < arq.size(); ++i)
          if (!outdeg[i]) avail.push_back(i);
        while (!avail.empty()) {
          std::uniform_int_distribution<size_t> dd(0, avail.size() - 1);
          size_t k = dd(rng);
          int xx = avail[k];
          avail.erase(avail.begin() + k);
          order.push_back(xx);
          for (int z : arq[xx].in)
            if (--outdeg[z] == 0) avail.push_back(z);
        }
        if (!(rho_with_linearization(h, c, order) == ref)) {
          note("linearization dependence detected");
          ok = false;
        }
      }
    }
  }
  {
    MinusculeHeap h = minuscule_heap(quiver(Family::A, 3, {{1, 2}, {3, 2}}), 2);
    std::vector<ExtValue> choices;
    for (long long k = 0; k <= 4; ++k) {
      choices.push_back(ExtValue::fin(k));
      choices.push_back(ExtValue::inf_minus(k));
    }
    int n = h.size();
    std::vector<int> idx(n, 0);
    bool good = true;
    while (good) {
      Rpp r = Rpp::zero_extended(h);
      for (int x = 0; x < n; ++x) r.val[x] = choices[idx[x]];
      if (r.order_reversing()) {
        long long mf = 0, mc = 0;
        for (const auto& v : r.val) (v.cofin ? mc : mf) = std::max(v.cofin ? mc : mf, v.k);
        for (long long N = mf + mc; N <= 4; ++N) {
          Rpp restricted = restrict_infinity(r, N);
          for (int x = 0; x < n; ++x)
            if (!(restrict_infinity(toggle(r, x), N) == toggle(restricted, x))) good = false;
        }
      }
      int i = 0;
      while (i < n && ++idx[i] == (int)choices.size()) idx[i++] = 0;
      if (i == n) break;
    }
    if (!good) {
      note("restriction does not commute with a toggle");
      ok = false;
    }
  }
  return ok;
}

}  // namespace

int main() {
  criterion(1, "paper worked examples", crit1);
  criterion(2, "closed-form sweep on 1->2<-3, 256 cases, rho and oracle", crit2);
  criterion(3, "bijection roundtrip and injectivity", crit3);
  criterion(4, "oracle agreement and the cokernel formula", crit4);
  criterion(5, "periodicity on [0,N]", crit5);
  criterion(6, "extended-entry promotion order", crit6);
  criterion(7, "toggles vs derived reflections, sweeps, splits", crit7);
  criterion(8, "generating functions up to degree 8", crit8);
  criterion(9, "Hillman-Grassl and RSK equalities", crit9);
  criterion(10, "Greene-Kleitman invariants", crit10);
  criterion(11, "structural property suites", crit11);
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
