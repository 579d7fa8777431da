#pragma once

#include <map>
#include <vector>

#include "minrpp/bijection.hpp"
#include "minrpp/heap.hpp"

namespace minrpp {

// Multivariate series truncated by total degree: exponent vector -> coefficient.
using Series = std::map<std::vector<int>, long long>;

// Dimension vectors of the heart's indecomposables attached to an order
// filter; for the whole heap these are the roots themselves.
std::vector<Root> heart_dims(const MinusculeHeap& h, ElemSet region);

// The three sides of the generating function identity on a region: reverse
// plane partitions graded by fibre sums, multiplicity vectors graded by
// dimension, and the truncated product.
Series genfun_rpp_side(const MinusculeHeap& h, ElemSet region, int degree);
Series genfun_object_side(const MinusculeHeap& h, ElemSet region, const std::vector<Root>& dims,
                          int degree);
Series genfun_product_side(const MinusculeHeap& h, ElemSet region, const std::vector<Root>& dims,
                           int degree);

bool generating_function_check(const MinusculeHeap& h, ElemSet region, int degree);

}  // namespace minrpp
