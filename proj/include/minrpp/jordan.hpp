#pragma once

#include <optional>

#include "minrpp/heap.hpp"
#include "minrpp/partition.hpp"
#include "minrpp/rpp.hpp"

namespace minrpp {

// Reflection rule on Jordan form data: replace nu^k by diff(nu^{adj(k)}, nu^k)
// where adj(k) collects the parts of all neighbours along arrows at k.
// k must be a source or a sink; throws with a diagnostic when the partitions
// fail to interlace.
PartitionTuple sigma_k_tuple(const PartitionTuple& nu, const DynkinQuiver& q, int k);

enum class FitStatus { Ok, TooManyParts, NotOrderReversing };

struct FitResult {
  FitStatus status = FitStatus::Ok;
  std::optional<Rpp> rpp;  // present iff status == Ok
};

// Place nu^i into the fibre slots of `region` (an order filter, or the whole
// heap) in decreasing order going up, padding with zeros.  Returns the filling
// when it is order-reversing on the induced subposet (values outside the
// region are left at zero and ignored by the check).
FitResult fits_in(const PartitionTuple& nu, const MinusculeHeap& h, ElemSet region);
FitResult fits_in(const PartitionTuple& nu, const MinusculeHeap& h);

}  // namespace minrpp
