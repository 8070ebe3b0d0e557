#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "hyperinv/shape.hpp"

namespace hyperinv {

/// Per-direction eigenvalue tuples of the Cartan generators: component l is a
/// list of n_l - 1 integers.
struct WeightVector {
    std::vector<std::vector<long>> components;

    static WeightVector zero(const Shape& shape);

    /// Parse "a;b1,b2;c" (groups by ';', integers by ','). When every
    /// dimension is 2, the scalar form "a,b,c" is also accepted.
    static WeightVector parse(const std::string& text, const Shape& shape);

    bool is_zero() const;
    bool matches(const Shape& shape) const;

    /// "a;b1,b2;c" in general; "a,b,c" when every component is a scalar.
    std::string to_string() const;

    bool operator==(const WeightVector& other) const { return components == other.components; }
    bool operator!=(const WeightVector& other) const { return !(*this == other); }
};

/// A monomial in the array entries, stored as its dense exponent array in
/// canonical cell order. Monomials are totally ordered lexicographically on
/// that exponent sequence.
class Monomial {
  public:
    Monomial(Shape shape, std::vector<int> exponents);

    const Shape& shape() const { return shape_; }
    const std::vector<int>& exponents() const { return exponents_; }
    long degree() const;

    /// Digit string in cell order; only legal when every exponent is <= 9.
    std::string to_compact() const;
    /// "[e1,e2,...]" — always legal.
    std::string to_brackets() const;
    /// Emits the compact form when legal, the bracket form otherwise.
    std::string to_text() const;

    /// Parses either text form against the given shape.
    static Monomial parse(const std::string& text, const Shape& shape);

    bool operator==(const Monomial& other) const;
    bool operator<(const Monomial& other) const;

  private:
    Shape shape_;
    std::vector<int> exponents_;
};

/// Weight of a monomial: component (l, i) is the difference between the
/// exponent sums of slices i and i+1 in direction l.
WeightVector weight_of(const Monomial& m);
WeightVector weight_of(const Shape& shape, const std::vector<int>& exponents);

/// Exponent sums of the n_l parallel slices in direction l.
std::vector<long> slice_sums(const Shape& shape, const std::vector<int>& exponents, int direction0);

/// An ordered list of monomials of a common shape, degree, and weight,
/// strictly ascending in canonical order.
struct MonomialBasis {
    Shape shape;
    long degree = 0;
    WeightVector weight;
    std::vector<std::vector<int>> exponents;  // ascending lex

    size_t size() const { return exponents.size(); }
    Monomial monomial(size_t index) const { return Monomial(shape, exponents.at(index)); }

    /// Binary search; nullopt when the exponent array is not in the basis.
    std::optional<size_t> index_of(const std::vector<int>& expo) const;
};

}  // namespace hyperinv
