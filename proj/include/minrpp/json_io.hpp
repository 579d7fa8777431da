#pragma once

#include <nlohmann/json.hpp>

#include "minrpp/bijection.hpp"
#include "minrpp/heap.hpp"
#include "minrpp/rpp.hpp"
#include "minrpp/typea.hpp"

namespace minrpp {

using nlohmann::json;

json quiver_to_json(const DynkinQuiver& q);
DynkinQuiver quiver_from_json(const json& j);

json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j);
json tuple_to_json(const PartitionTuple& t);
PartitionTuple tuple_from_json(const json& j);

json heap_to_json(const MinusculeHeap& h);

json rpp_to_json(const Rpp& r);
Rpp rpp_from_json(const MinusculeHeap& h, const json& j);

// Multiplicities keyed by dimension-vector strings, e.g. {"01100": 2}.
json mult_to_json(const MinusculeHeap& h, const MultVector& c);
MultVector mult_from_json(const MinusculeHeap& h, const json& j);

json split_to_json(const MinusculeHeap& h, const SplitObject& s);
SplitObject split_from_json(const MinusculeHeap& h, const json& j);

json grid_to_json(const GridRpp& g);

}  // namespace minrpp
