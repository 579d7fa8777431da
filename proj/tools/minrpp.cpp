// minrpp: minuscule posets, reverse plane partitions and quiver Jordan data.
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "minrpp/bijection.hpp"
#include "minrpp/genfun.hpp"
#include "minrpp/jordan.hpp"
#include "minrpp/json_io.hpp"
#include "minrpp/oracle.hpp"
#include "minrpp/rpp.hpp"
#include "minrpp/typea.hpp"

using namespace minrpp;
using nlohmann::json;

namespace {

struct QuiverArgs {
  std::string type;
  std::string orient;
  std::string quiver_file;
  int m = 0;
};

// Orientation strings: comma-separated relation chains over canonical vertex
// labels, e.g. "1<2<3" (arrows 1->2->3) or "2>1,2>3" (arrows 2->1, 2->3).
std::vector<std::pair<int, int>> parse_orient(const std::string& s) {
  std::vector<std::pair<int, int>> arrows;
  std::stringstream ss(s);
  std::string chunk;
  while (std::getline(ss, chunk, ',')) {
    int prev = -1;
    char rel = 0;
    std::string num;
    auto flush = [&]() {
      if (num.empty()) throw CLI::ValidationError("--orient", "malformed orientation: " + s);
      int v = std::stoi(num);
      num.clear();
      if (prev >= 0) {
        if (rel == '<')
          arrows.push_back({prev, v});
        else
          arrows.push_back({v, prev});
      }
      prev = v;
    };
    for (char c : chunk) {
      if (std::isdigit((unsigned char)c)) {
        num += c;
      } else if (c == '<' || c == '>') {
        flush();
        rel = c;
      } else if (!std::isspace((unsigned char)c)) {
        throw CLI::ValidationError("--orient", "malformed orientation: " + s);
      }
    }
    flush();
  }
  return arrows;
}

DynkinQuiver quiver_from_args(const QuiverArgs& a) {
  if (!a.quiver_file.empty()) {
    std::ifstream in(a.quiver_file);
    if (!in) throw CLI::ValidationError("--quiver", "cannot open " + a.quiver_file);
    json j;
    in >> j;
    return quiver_from_json(j);
  }
  if (a.type.empty()) throw CLI::ValidationError("--type", "a Dynkin type is required");
  DynkinDiagram d = diagram_from_name(a.type);
  if (a.orient.empty()) return DynkinQuiver::linear(d);
  return DynkinQuiver::make(d, parse_orient(a.orient));
}

json read_json_arg(const std::string& s) {
  if (!s.empty() && s[0] == '@') {
    std::ifstream in(s.substr(1));
    if (!in) throw CLI::ValidationError("json", "cannot open " + s.substr(1));
    json j;
    in >> j;
    return j;
  }
  return json::parse(s);
}

void attach_quiver_opts(CLI::App* cmd, QuiverArgs& a, bool need_m) {
  cmd->add_option("--type", a.type, "Dynkin type, e.g. A5, D4, E6");
  cmd->add_option("--orient", a.orient, "orientation, e.g. \"1<2<3\" or \"2>1,2>3\"");
  cmd->add_option("--quiver", a.quiver_file, "quiver JSON file");
  auto* m = cmd->add_option("--m", a.m, "marked minuscule vertex");
  if (need_m) m->required();
}

int fail_verification(const json& report) {
  std::cout << report.dump() << "\n";
  std::cerr << "verification failed\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minuscule reverse plane partitions and quiver Jordan data"};
  app.require_subcommand(1);

  QuiverArgs qa;
  std::string mults_arg, rpp_arg, filter_arg;
  long long N = -1;
  int count = 1, x_elem = -1, fibre_v = 0, degree = 8, verify_count = 20;
  bool dot = false, json_out = false;
  OracleConfig oracle = OracleConfig::from_env();
  uint64_t seed = oracle.seed;
  int samples = 0;

  auto* heap_cmd = app.add_subcommand("heap", "construct the minuscule poset");
  attach_quiver_opts(heap_cmd, qa, true);
  heap_cmd->add_flag("--dot", dot, "emit graphviz instead of JSON");
  heap_cmd->add_flag("--json", json_out, "emit JSON (default)");

  auto* ar_cmd = app.add_subcommand("ar", "Auslander-Reiten quiver of the orientation");
  attach_quiver_opts(ar_cmd, qa, false);
  ar_cmd->add_flag("--dot", dot, "emit graphviz instead of JSON");

  auto* roots_cmd = app.add_subcommand("roots", "positive roots of the diagram");
  attach_quiver_opts(roots_cmd, qa, false);

  auto* iso_cmd = app.add_subcommand("iso-type", "identify the heap in the classification");
  attach_quiver_opts(iso_cmd, qa, true);

  auto* rho_cmd = app.add_subcommand("rho", "reverse plane partition of a representation");
  attach_quiver_opts(rho_cmd, qa, true);
  rho_cmd->add_option("--mults", mults_arg, "multiplicities JSON, e.g. '{\"010\":1}'")->required();

  auto* inv_cmd = app.add_subcommand("inv", "representation of a reverse plane partition");
  attach_quiver_opts(inv_cmd, qa, true);
  inv_cmd->add_option("--rpp", rpp_arg, "filling JSON or @file")->required();

  auto* promote_cmd = app.add_subcommand("promote", "apply promotion");
  attach_quiver_opts(promote_cmd, qa, true);
  promote_cmd->add_option("--rpp", rpp_arg, "filling JSON or @file")->required();
  promote_cmd->add_option("--count", count, "number of applications");

  auto* toggle_cmd = app.add_subcommand("toggle", "toggle one element or one fibre");
  attach_quiver_opts(toggle_cmd, qa, true);
  toggle_cmd->add_option("--rpp", rpp_arg, "filling JSON or @file")->required();
  toggle_cmd->add_option("--x", x_elem, "element id to toggle");
  toggle_cmd->add_option("--i", fibre_v, "fibre (quiver vertex) to toggle");

  auto* split_cmd = app.add_subcommand("split", "order-filter split of an extended filling");
  attach_quiver_opts(split_cmd, qa, true);
  split_cmd->add_option("--rpp", rpp_arg, "extended filling JSON or @file")->required();

  auto* verify = app.add_subcommand("verify", "run a verification family");
  verify->require_subcommand(1);
  auto* v_axioms = verify->add_subcommand("axioms", "heap axioms and classification");
  attach_quiver_opts(v_axioms, qa, true);
  auto* v_period = verify->add_subcommand("periodicity", "promotion has order dividing h");
  attach_quiver_opts(v_period, qa, true);
  v_period->add_option("--N", N, "entry bound")->required();
  v_period->add_option("--samples", samples, "sample count (default exhaustive)");
  v_period->add_option("--seed", seed, "random seed");
  auto* v_oracle = verify->add_subcommand("oracle", "generic Jordan forms match rho");
  attach_quiver_opts(v_oracle, qa, true);
  v_oracle->add_option("--count", verify_count, "number of random representations");
  v_oracle->add_option("--prime", oracle.prime, "field size");
  v_oracle->add_option("--samples", oracle.samples, "endomorphism samples");
  v_oracle->add_option("--seed", oracle.seed, "random seed");
  auto* v_hg = verify->add_subcommand("hg", "rho equals Hillman-Grassl on rectangles");
  attach_quiver_opts(v_hg, qa, false);
  auto* v_rsk = verify->add_subcommand("rsk", "rho equals RSK on rectangles");
  attach_quiver_opts(v_rsk, qa, false);
  auto* v_gk = verify->add_subcommand("gk", "Greene-Kleitman invariants match rho");
  attach_quiver_opts(v_gk, qa, true);
  auto* v_genfun = verify->add_subcommand("genfun", "generating function identity");
  attach_quiver_opts(v_genfun, qa, true);
  v_genfun->add_option("--degree", degree, "total degree bound");
  v_genfun->add_option("--filter", filter_arg, "comma-separated element ids of an order filter");
  auto* v_togref = verify->add_subcommand("togref", "reflection sweeps match fibre toggles");
  attach_quiver_opts(v_togref, qa, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*heap_cmd) {
      MinusculeHeap h = minuscule_heap(quiver_from_args(qa), qa.m);
      if (dot)
        std::cout << h.dot();
      else
        std::cout << heap_to_json(h).dump(2) << "\n";
      return 0;
    }
    if (*ar_cmd) {
      ArQuiver arq = ar_quiver(quiver_from_args(qa));
      if (dot) {
        std::cout << arq.dot();
      } else {
        json nodes = json::array(), arcs = json::array();
        for (const ArVertex& v : arq.v) {
          nodes.push_back(json{{"id", v.id},
                               {"dim", root_string(v.root)},
                               {"pi", v.orbit},
                               {"projective", v.projective},
                               {"injective", v.injective},
                               {"tau", v.tau}});
          for (int w : v.out) arcs.push_back(json::array({v.id, w}));
        }
        std::cout << json{{"vertices", nodes}, {"arrows", arcs}}.dump() << "\n";
      }
      return 0;
    }
    if (*roots_cmd) {
      DynkinQuiver q = quiver_from_args(qa);
      json out = json::array();
      for (const Root& r : positive_roots(q.diagram)) out.push_back(root_string(r));
      std::cout << json{{"count", out.size()}, {"roots", out}}.dump() << "\n";
      return 0;
    }
    if (*iso_cmd) {
      MinusculeHeap h = minuscule_heap(quiver_from_args(qa), qa.m);
      std::cout << json{{"size", h.size()}, {"iso_type", iso_type(h)}}.dump() << "\n";
      return 0;
    }
    if (*rho_cmd) {
      MinusculeHeap h = minuscule_heap(quiver_from_args(qa), qa.m);
      MultVector c = mult_from_json(h, read_json_arg(mults_arg));
      Rpp r = rho(h, c);
      json out = rpp_to_json(r);
      json parts = json::array();
      for (int v = 1; v <= h.quiver.rank(); ++v)
        parts.push_back(partition_to_json(r.fibre_partition(v)));
      out["partitions"] = parts;
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*inv_cmd) {
      MinusculeHeap h = minuscule_heap(quiver_from_args(qa), qa.m);
      Rpp r = rpp_from_json(h, read_json_arg(rpp_arg));
      std::cout << mult_to_json(h, rho_inverse(h, r)).dump() << "\n";
      return 0;
    }
    if (*promote_cmd) {
      MinusculeHeap h = minuscule_heap(quiver_from_args(qa), qa.m);
      Rpp r = rpp_from_json(h, read_json_arg(rpp_arg));
      for (int k = 0; k < count; ++k) r = promotion(r);
      std::cout << rpp_to_json(r).dump() << "\n";
      return 0;
    }
    if (*toggle_cmd) {
      MinusculeHeap h = minuscule_heap(quiver_from_args(qa), qa.m);
      Rpp r = rpp_from_json(h, read_json_arg(rpp_arg));
      if (x_elem >= 0)
        r = toggle(r, x_elem);
      else if (fibre_v >= 1)
        r = toggle_fibre(r, fibre_v);
      else
        throw CLI::ValidationError("toggle", "one of --x or --i is required");
      std::cout << rpp_to_json(r).dump() << "\n";
      return 0;
    }
    if (*split_cmd) {
      MinusculeHeap h = minuscule_heap(quiver_from_args(qa), qa.m);
      Rpp r = rpp_from_json(h, read_json_arg(rpp_arg));
      r.extended = true;
      SplitObject s = split_for_rpp(h, r);
      std::cout << split_to_json(h, s).dump() << "\n";
      return 0;
    }
    if (*v_axioms) {
      MinusculeHeap h = minuscule_heap(quiver_from_args(qa), qa.m);
      HeapReport rep = verify_heap(h);
      json out{{"h1", rep.h1},
               {"h2", rep.h2},
               {"h3", rep.h3},
               {"two_neighbourly", rep.two_neighbourly},
               {"converse", rep.converse},
               {"converse_dual", rep.converse_dual},
               {"size", h.size()},
               {"iso_type", iso_type(h)},
               {"failures", rep.failures}};
      if (!rep.ok()) return fail_verification(out);
      std::cout << out.dump() << "\n";
      return 0;
    }
    if (*v_period) {
      MinusculeHeap h = minuscule_heap(quiver_from_args(qa), qa.m);
      int cox = coxeter_number(h.quiver.diagram);
      PromotionOrderMode mode;
      if (samples > 0) {
        mode.exhaustive = false;
        mode.samples = samples;
        mode.seed = seed;
      }
      long long order = promotion_order(h, N, mode);
      json out{{"order", order}, {"coxeter", cox}, {"divides", cox % order == 0}};
      if (cox % order != 0) return fail_verification(out);
      std::cout << out.dump() << "\n";
      return 0;
    }
    if (*v_oracle) {
      MinusculeHeap h = minuscule_heap(quiver_from_args(qa), qa.m);
      std::mt19937_64 rng(oracle.seed);
      int agree = 0;
      for (int t = 0; t < verify_count; ++t) {
        MultVector c = zero_mult(h);
        for (auto& v : c) v = rng() % 3;
        OracleConfig cfg = oracle;
        cfg.seed = oracle.seed + 101 * t;
        auto g = gen_jf(h, c, cfg);
        PartitionTuple want;
        Rpp r = rho(h, c);
        for (int v = 1; v <= h.quiver.rank(); ++v) want.push_back(r.fibre_partition(v));
        if (g.samples_agree && g.jf == want) ++agree;
      }
      json out{{"trials", verify_count}, {"agree", agree}, {"prime", oracle.prime}};
      if (agree != verify_count) return fail_verification(out);
      std::cout << out.dump() << "\n";
      return 0;
    }
    if (*v_hg || *v_rsk) {
      bool is_hg = v_hg->parsed();
      int n = qa.type.empty() ? 5 : diagram_from_name(qa.type).rank;
      int m = qa.m ? qa.m : (n + 1) / 2;
      DynkinDiagram d = DynkinDiagram::make(Family::A, n);
      std::vector<std::pair<int, int>> arrows;
      for (int i = 1; i < n; ++i)
        arrows.push_back(is_hg || i >= m ? std::pair{i + 1, i} : std::pair{i, i + 1});
      MinusculeHeap h = minuscule_heap(DynkinQuiver::make(d, arrows), m);
      if (h.size() > 12)
        throw CLI::ValidationError("verify", "rectangle too large for the exhaustive check");
      long long cases = 0, okc = 0;
      for (int mask = 0; mask < (1 << h.size()); ++mask) {
        MultVector c = zero_mult(h);
        for (int z = 0; z < h.size(); ++z) c[z] = (mask >> z) & 1;
        GridRpp viarho = rpp_to_grid(rho(h, c));
        GridRpp other =
            is_hg ? hillman_grassl(mult_to_hooks(h, c)) : rsk_rect(mult_to_hooks(h, c));
        MultVector back = is_hg ? hooks_to_mult(h, hillman_grassl_inverse(other))
                                : hooks_to_mult(h, rsk_rect_inverse(other));
        ++cases;
        if (viarho == other && back == c) ++okc;
      }
      json out{{"cases", cases}, {"matching", okc}};
      if (okc != cases) return fail_verification(out);
      std::cout << out.dump() << "\n";
      return 0;
    }
    if (*v_gk) {
      MinusculeHeap h = minuscule_heap(quiver_from_args(qa), qa.m);
      if (h.quiver.diagram.family != Family::A)
        throw CLI::ValidationError("verify gk", "the chain oracle applies in type A only");
      long long cases = 0, okc = 0;
      MultVector c = zero_mult(h);
      std::function<void(int)> rec = [&](int x) {
        if (x == h.size()) {
          Rpp r = rho(h, c);
          bool good = true;
          for (int i = 1; i <= h.quiver.rank(); ++i)
            if (gk_partition(build_tilde_poset(h, c, i)) != r.fibre_partition(i)) good = false;
          ++cases;
          if (good) ++okc;
          return;
        }
        for (long long v = 0; v <= 2; ++v) {
          c[x] = v;
          rec(x + 1);
        }
        c[x] = 0;
      };
      rec(0);
      json out{{"cases", cases}, {"matching", okc}};
      if (okc != cases) return fail_verification(out);
      std::cout << out.dump() << "\n";
      return 0;
    }
    if (*v_genfun) {
      MinusculeHeap h = minuscule_heap(quiver_from_args(qa), qa.m);
      ElemSet region = h.all();
      if (!filter_arg.empty()) {
        region = 0;
        std::stringstream ss(filter_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) region |= 1u << std::stoi(tok);
        if (!h.is_filter(region))
          throw CLI::ValidationError("--filter", "the given set is not an order filter");
      }
      bool good = generating_function_check(h, region, degree);
      json out{{"degree", degree}, {"match", good}};
      if (!good) return fail_verification(out);
      std::cout << out.dump() << "\n";
      return 0;
    }
    if (*v_togref) {
      MinusculeHeap h = minuscule_heap(quiver_from_args(qa), qa.m);
      if (h.size() > 6)
        throw CLI::ValidationError("verify togref", "desk-scale heaps only (size <= 6)");
      ZqModel zq = ZqModel::build(ar_quiver(h.quiver));
      bool good = true;
      for (int mask = 0; mask < (1 << h.size()) && good; ++mask) {
        MultVector x = zero_mult(h);
        for (int i = 0; i < h.size(); ++i) x[i] = (mask >> i) & 1;
        Rpp cur = rho(h, x);
        cur.extended = true;
        Rpp start = cur;
        for (int round = 0; round < zq.h && good; ++round) {
          Rpp round_start = cur;
          for (int v : h.quiver.vertices_by_numbering()) {
            cur = toggle_fibre(cur, v);
            SplitObject s = split_for_rpp(h, cur);
            if (!(rho_xi(h, s) == cur)) good = false;
          }
          if (!(cur == promotion(round_start))) good = false;
        }
        if (!(cur == start)) good = false;
      }
      json out{{"match", good}};
      if (!good) return fail_verification(out);
      std::cout << out.dump() << "\n";
      return 0;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
