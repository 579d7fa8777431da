#include "minrpp/json_io.hpp"

#include <stdexcept>

namespace minrpp {

json quiver_to_json(const DynkinQuiver& q) {
  json j;
  j["family"] = family_name(q.diagram.family);
  j["rank"] = q.diagram.rank;
  json arrows = json::array();
  for (auto [s, t] : q.arrows) arrows.push_back(json::array({s, t}));
  j["arrows"] = arrows;
  j["numbering"] = q.numbering;
  return j;
}

DynkinQuiver quiver_from_json(const json& j) {
  DynkinDiagram d =
      DynkinDiagram::make(family_from_char(j.at("family").get<std::string>().at(0)),
                          j.at("rank").get<int>());
  std::vector<std::pair<int, int>> arrows;
  for (const auto& a : j.at("arrows")) arrows.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
  return DynkinQuiver::make(d, std::move(arrows));
}

json partition_to_json(const Partition& p) {
  json j = json::array();
  for (long long x : p) j.push_back(x);
  return j;
}

Partition partition_from_json(const json& j) {
  Partition p;
  for (const auto& x : j) p.push_back(x.get<long long>());
  return normalized(p);
}

json tuple_to_json(const PartitionTuple& t) {
  json j = json::array();
  for (const Partition& p : t) j.push_back(partition_to_json(p));
  return j;
}

PartitionTuple tuple_from_json(const json& j) {
  PartitionTuple t;
  for (const auto& p : j) t.push_back(partition_from_json(p));
  return t;
}

json heap_to_json(const MinusculeHeap& h) {
  json j;
  j["quiver"] = quiver_to_json(h.quiver);
  j["m"] = h.m;
  json els = json::array();
  for (const HeapElem& e : h.el) {
    json je;
    je["id"] = e.id;
    je["dim"] = root_string(e.root);
    je["pi"] = e.pi;
    els.push_back(je);
  }
  j["elements"] = els;
  json covers = json::array();
  for (const HeapElem& e : h.el)
    for (int y : e.up) covers.push_back(json::array({e.id, y}));
  j["covers"] = covers;
  return j;
}

json rpp_to_json(const Rpp& r) {
  json j;
  j["heap"] = heap_to_json(*r.heap);
  if (r.extended)
    j["N"] = "extended";
  else
    j["N"] = r.N;
  json vals;
  for (int x = 0; x < r.heap->size(); ++x) {
    if (r.val[x].cofin)
      vals[std::to_string(x)] = json{{"cofin", r.val[x].k}};
    else
      vals[std::to_string(x)] = r.val[x].k;
  }
  j["values"] = vals;
  return j;
}

Rpp rpp_from_json(const MinusculeHeap& h, const json& j) {
  Rpp r;
  r.heap = &h;
  const json& nj = j.at("N");
  if (nj.is_string() && nj.get<std::string>() == "extended") {
    r.extended = true;
  } else {
    r.N = nj.get<long long>();
  }
  r.val.assign(h.size(), ExtValue::fin(0));
  for (const auto& [key, v] : j.at("values").items()) {
    int x = std::stoi(key);
    if (x < 0 || x >= h.size()) throw std::invalid_argument("rpp value id out of range");
    if (v.is_object())
      r.val[x] = ExtValue::inf_minus(v.at("cofin").get<long long>());
    else
      r.val[x] = ExtValue::fin(v.get<long long>());
  }
  if (!r.valid()) throw std::invalid_argument("filling is not order-reversing/in range");
  return r;
}

json mult_to_json(const MinusculeHeap& h, const MultVector& c) {
  json j = json::object();
  for (int x = 0; x < h.size(); ++x)
    if (c[x]) j[root_string(h.el[x].root)] = c[x];
  return j;
}

MultVector mult_from_json(const MinusculeHeap& h, const json& j) {
  MultVector c = zero_mult(h);
  for (const auto& [key, v] : j.items()) {
    int id = h.find_root(root_from_string(key));
    if (id < 0)
      throw std::invalid_argument("dimension vector " + key + " is not a heap element");
    c[id] = v.get<long long>();
  }
  return c;
}

json split_to_json(const MinusculeHeap& h, const SplitObject& s) {
  json j;
  json filter = json::array();
  for (int x = 0; x < h.size(); ++x)
    if ((s.filter >> x) & 1u) filter.push_back(x);
  j["filter"] = filter;
  j["even"] = mult_to_json(h, s.even);
  j["odd"] = mult_to_json(h, s.odd);
  return j;
}

SplitObject split_from_json(const MinusculeHeap& h, const json& j) {
  SplitObject s;
  s.filter = 0;
  for (const auto& x : j.at("filter")) s.filter |= 1u << x.get<int>();
  s.even = mult_from_json(h, j.at("even"));
  s.odd = mult_from_json(h, j.at("odd"));
  return s;
}

json grid_to_json(const GridRpp& g) {
  json j = json::array();
  for (const auto& row : g.v) {
    json r = json::array();
    for (long long x : row) r.push_back(x);
    j.push_back(r);
  }
  return j;
}

}  // namespace minrpp
