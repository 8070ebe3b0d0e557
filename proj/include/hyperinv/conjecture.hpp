#pragma once

#include <utility>
#include <vector>

#include "hyperinv/rational.hpp"
#include "hyperinv/shape.hpp"

namespace hyperinv {

/// Predicted degree of the zero-weight dimension polynomial:
/// prod(dims) - sum(dims) + k - 1 (cell count minus independent constraints).
long conjectured_degree(const Shape& shape);

/// Exact polynomial through the given (x, y) points, coefficients ascending;
/// degree = points - 1. Throws on duplicate x.
std::vector<Rational> lagrange_interpolate(const std::vector<std::pair<long, Integer>>& points);

Rational evaluate_polynomial(const std::vector<Rational>& coeffs_ascending, long x);

struct ResidueInterpolant {
    long residue = 0;             ///< residue class of the degree modulo `modulus`
    std::vector<Rational> coefficients;  ///< ascending
    long points_used = 0;         ///< points the fit went through
    bool validated = false;       ///< remaining points all lay on the interpolant
};

struct ConjectureFit {
    Shape shape;
    long max_degree = 0;
    long lcm_degree = 0;          ///< N; data points sit at multiples of N
    long conjectured_deg = 0;     ///< D from the closed-form prediction
    long modulus = 0;             ///< residue-class modulus M the fit settled on
    bool data_sufficient = false; ///< every class had >= D + 2 points
    bool all_validated = false;
    std::vector<ResidueInterpolant> interpolants;
    std::vector<std::pair<long, Integer>> counts;  ///< (degree, zero-weight dim)
};

/// Fits the zero-weight dimension counts at degrees 0, N, 2N, ..., max_degree
/// by residue-class polynomials of the predicted degree D. The modulus starts
/// at N and doubles until every class validates on its spare points. If a
/// class lacks the D + 2 points needed to fit and validate, the fit falls
/// back to an interpolant through all of that class's points (degree =
/// points - 1) and flags data_sufficient = false. Throws
/// InsufficientDataError when fewer than two data points exist at all.
ConjectureFit conjecture_fit(const Shape& shape, long max_degree);

}  // namespace hyperinv
