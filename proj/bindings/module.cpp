#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

#include "minrpp/bijection.hpp"
#include "minrpp/genfun.hpp"
#include "minrpp/json_io.hpp"
#include "minrpp/oracle.hpp"
#include "minrpp/rpp.hpp"
#include "minrpp/typea.hpp"

namespace py = pybind11;
using namespace minrpp;

namespace {

DynkinQuiver make_quiver(const std::string& type,
                         const std::vector<std::pair<int, int>>& arrows) {
  DynkinDiagram d = diagram_from_name(type);
  if (arrows.empty()) return DynkinQuiver::linear(d);
  return DynkinQuiver::make(d, arrows);
}

MultVector mult_from_dict(const MinusculeHeap& h, const std::map<std::string, long long>& m) {
  MultVector c = zero_mult(h);
  for (const auto& [k, v] : m) {
    int id = h.find_root(root_from_string(k));
    if (id < 0) throw std::invalid_argument(k + " is not a heap element");
    c[id] = v;
  }
  return c;
}

std::map<std::string, long long> mult_to_dict(const MinusculeHeap& h, const MultVector& c) {
  std::map<std::string, long long> out;
  for (int x = 0; x < h.size(); ++x)
    if (c[x]) out[root_string(h.el[x].root)] = c[x];
  return out;
}

// Fillings cross the boundary as {dim: value} with cofinite entries encoded
// as the string "inf-k".
py::dict rpp_to_dict(const Rpp& r) {
  py::dict d;
  for (int x = 0; x < r.heap->size(); ++x) {
    std::string key = root_string(r.heap->el[x].root);
    if (r.val[x].cofin)
      d[py::str(key)] = py::str(r.val[x].str());
    else
      d[py::str(key)] = py::int_(r.val[x].k);
  }
  return d;
}

Rpp rpp_from_dict(const MinusculeHeap& h, const py::dict& d, bool extended) {
  Rpp r = extended ? Rpp::zero_extended(h) : Rpp::zero(h, 0);
  long long maxv = 0;
  for (auto item : d) {
    int id = h.find_root(root_from_string(py::cast<std::string>(item.first)));
    if (id < 0) throw std::invalid_argument("unknown heap element");
    if (py::isinstance<py::str>(item.second)) {
      std::string s = py::cast<std::string>(item.second);
      long long k = s == "inf" ? 0 : std::stoll(s.substr(4));
      r.val[id] = ExtValue::inf_minus(k);
    } else {
      long long v = py::cast<long long>(item.second);
      r.val[id] = ExtValue::fin(v);
      maxv = std::max(maxv, v);
    }
  }
  if (!extended) r.N = maxv;
  if (!r.order_reversing()) throw std::invalid_argument("filling is not order-reversing");
  return r;
}

}  // namespace

PYBIND11_MODULE(_minrpp, mod) {
  mod.doc() = "minuscule posets, reverse plane partitions and quiver Jordan data";

  py::class_<DynkinQuiver>(mod, "Quiver")
      .def(py::init(&make_quiver), py::arg("type"),
           py::arg("arrows") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("rank", &DynkinQuiver::rank)
      .def_property_readonly("arrows", [](const DynkinQuiver& q) { return q.arrows; })
      .def_property_readonly("numbering", [](const DynkinQuiver& q) { return q.numbering; })
      .def("coxeter_number", [](const DynkinQuiver& q) { return coxeter_number(q.diagram); })
      .def("minuscule_vertices",
           [](const DynkinQuiver& q) {
             auto s = minuscule_vertices(q.diagram);
             return std::vector<int>(s.begin(), s.end());
           })
      .def("positive_roots",
           [](const DynkinQuiver& q) {
             std::vector<std::string> out;
             for (const Root& r : positive_roots(q.diagram)) out.push_back(root_string(r));
             return out;
           })
      .def("__repr__", [](const DynkinQuiver& q) { return "<Quiver " + q.describe() + ">"; });

  py::class_<MinusculeHeap>(mod, "Heap")
      .def(py::init([](const DynkinQuiver& q, int m) { return minuscule_heap(q, m); }),
           py::arg("quiver"), py::arg("m"))
      .def_property_readonly("size", &MinusculeHeap::size)
      .def_property_readonly("m", [](const MinusculeHeap& h) { return h.m; })
      .def("elements",
           [](const MinusculeHeap& h) {
             std::vector<py::dict> out;
             for (const HeapElem& e : h.el) {
               py::dict d;
               d["id"] = e.id;
               d["dim"] = root_string(e.root);
               d["pi"] = e.pi;
               std::vector<int> up = e.up;
               d["up"] = up;
               out.push_back(d);
             }
             return out;
           })
      .def("iso_type", [](const MinusculeHeap& h) { return iso_type(h); })
      .def("verify",
           [](const MinusculeHeap& h) {
             HeapReport r = verify_heap(h);
             py::dict d;
             d["h1"] = r.h1;
             d["h2"] = r.h2;
             d["h3"] = r.h3;
             d["two_neighbourly"] = r.two_neighbourly;
             d["converse"] = r.converse;
             d["converse_dual"] = r.converse_dual;
             d["ok"] = r.ok();
             return d;
           })
      .def("dot", &MinusculeHeap::dot)
      .def("rho",
           [](const MinusculeHeap& h, const std::map<std::string, long long>& mults) {
             return rpp_to_dict(rho(h, mult_from_dict(h, mults)));
           },
           py::arg("mults"))
      .def("rho_partitions",
           [](const MinusculeHeap& h, const std::map<std::string, long long>& mults) {
             Rpp r = rho(h, mult_from_dict(h, mults));
             std::vector<Partition> out;
             for (int v = 1; v <= h.quiver.rank(); ++v) out.push_back(r.fibre_partition(v));
             return out;
           },
           py::arg("mults"))
      .def("rho_inverse",
           [](const MinusculeHeap& h, const py::dict& filling) {
             return mult_to_dict(h, rho_inverse(h, rpp_from_dict(h, filling, false)));
           },
           py::arg("filling"))
      .def("promotion",
           [](const MinusculeHeap& h, const py::dict& filling, long long n_bound, int count) {
             bool extended = n_bound < 0;
             Rpp r = rpp_from_dict(h, filling, extended);
             if (!extended) {
               r.N = n_bound;
               if (!r.in_range()) throw std::invalid_argument("entries exceed the bound");
             }
             for (int k = 0; k < count; ++k) r = promotion(r);
             return rpp_to_dict(r);
           },
           py::arg("filling"), py::arg("N") = -1, py::arg("count") = 1)
      .def("promotion_order",
           [](const MinusculeHeap& h, long long N) { return promotion_order(h, N, {}); },
           py::arg("N"))
      .def("gen_jf",
           [](const MinusculeHeap& h, const std::map<std::string, long long>& mults,
              long long prime, int samples, uint64_t seed) {
             OracleConfig cfg;
             cfg.prime = prime;
             cfg.samples = samples;
             cfg.seed = seed;
             auto g = gen_jf(h, mult_from_dict(h, mults), cfg);
             py::dict d;
             d["jf"] = g.jf;
             d["samples_agree"] = g.samples_agree;
             return d;
           },
           py::arg("mults"), py::arg("prime") = 32003, py::arg("samples") = 8,
           py::arg("seed") = 12345)
      .def("__repr__", [](const MinusculeHeap& h) {
        return "<Heap " + h.quiver.describe() + " m=" + std::to_string(h.m) + " size=" +
               std::to_string(h.size()) + ">";
      });

  mod.def("hillman_grassl",
          [](int rows, int cols, const std::map<std::string, long long>& hooks) {
            RimHookMultiset m;
            m.rows = rows;
            m.cols = cols;
            for (const auto& [k, v] : hooks)
              m.mult[rimhook_from_dimvector(rows, cols, root_from_string(k))] = v;
            return hillman_grassl(m).v;
          },
          py::arg("rows"), py::arg("cols"), py::arg("hooks"),
          "Hillman-Grassl image of a rim-hook multiset keyed by dimension vectors");

  mod.def("rsk",
          [](int rows, int cols, const std::map<std::string, long long>& hooks) {
            RimHookMultiset m;
            m.rows = rows;
            m.cols = cols;
            for (const auto& [k, v] : hooks)
              m.mult[rimhook_from_dimvector(rows, cols, root_from_string(k))] = v;
            return rsk_rect(m).v;
          },
          py::arg("rows"), py::arg("cols"), py::arg("hooks"),
          "RSK image of a rim-hook multiset keyed by dimension vectors");

  mod.def("generic_coker_jf",
          [](int a, int b, int c, long long p, uint64_t seed) {
            return generic_coker_jf(a, b, c, p, seed);
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("p") = 32003,
          py::arg("seed") = 1);

  mod.def("generating_function_check",
          [](const MinusculeHeap& h, int degree) {
            return generating_function_check(h, h.all(), degree);
          },
          py::arg("heap"), py::arg("degree") = 8);
}
