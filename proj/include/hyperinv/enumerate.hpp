#pragma once

#include "hyperinv/monomial.hpp"
#include "hyperinv/rational.hpp"

namespace hyperinv {

/// All monomials of the given shape, degree, and weight, in ascending
/// canonical order. An empty basis is a valid result.
MonomialBasis enumerate_weight_space(const Shape& shape, long degree, const WeightVector& weight);

/// Zero-weight monomials of the given degree; their exponent arrays are
/// exactly the arrays whose parallel slices have equal sums in every
/// direction. Empty unless lcm(dims) divides the degree.
MonomialBasis enumerate_eps_arrays(const Shape& shape, long degree);

/// Size of enumerate_weight_space(...) without materializing the basis.
Integer count_weight_space(const Shape& shape, long degree, const WeightVector& weight);

}  // namespace hyperinv
