#pragma once

#include <vector>

#include "hyperinv/rational.hpp"
#include "hyperinv/shape.hpp"

namespace hyperinv {

/// Number of 2x2 non-negative integer matrices with row sums (r0, r1) and
/// column sums (c0, c1); equals min(r0, r1, c0, c1) + 1.
/// Throws MarginError unless r0 + r1 == c0 + c1.
Integer count_contingency_2x2(const Integer& r0, const Integer& r1, const Integer& c0,
                              const Integer& c1);

/// Closed form of sum_{i=1..k} sum_{j=1..k} min(i,j)^2 = k(k+1)(k^2+k+1)/6.
Integer sum_min_square(long k);

/// Degrees in [1, max_degree] that can carry zero-weight monomials: the
/// positive multiples of lcm(dims). Degree 0 always qualifies too but is
/// excluded here as uninteresting.
std::vector<long> admissible_degrees(const Shape& shape, long max_degree);

}  // namespace hyperinv
