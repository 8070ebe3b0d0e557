#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hyperinv/matrix.hpp"
#include "hyperinv/monomial.hpp"
#include "hyperinv/rational.hpp"

namespace hyperinv {

/// Sparse exact-rational polynomial in the array entries. Terms are keyed by
/// exponent array in canonical (ascending lex) order; zero coefficients are
/// never stored.
class Polynomial {
  public:
    using TermMap = std::map<std::vector<int>, Rational>;

    explicit Polynomial(Shape shape) : shape_(std::move(shape)) {}

    static Polynomial constant(const Shape& shape, const Rational& value);
    static Polynomial single(const Monomial& m, const Rational& coeff);

    const Shape& shape() const { return shape_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    /// Accumulates `coeff` onto the monomial with the given exponents,
    /// dropping the term if it cancels to zero.
    void add_term(const std::vector<int>& exponents, const Rational& coeff);

    Rational coefficient(const std::vector<int>& exponents) const;

    /// Common degree of all terms; nullopt for the zero polynomial or an
    /// inhomogeneous one.
    std::optional<long> homogeneous_degree() const;

    /// Exponents of the canonically largest monomial; throws on zero.
    const std::vector<int>& leading_exponents() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scaled(const Rational& factor) const;

    bool operator==(const Polynomial& other) const {
        return shape_ == other.shape_ && terms_ == other.terms_;
    }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

  private:
    void require_same_shape(const Polynomial& other) const;

    Shape shape_;
    TermMap terms_;
};

/// Scale so all coefficients are coprime integers and the coefficient of the
/// canonically largest monomial is positive. Idempotent; throws on zero.
Polynomial normalize_primitive(const Polynomial& p);

/// Replace every indeterminate by its image under the linear substitution
/// x_j -> sum_i M(i, j_l) x_{..i..} in direction l (1-based), fully expanded.
Polynomial substitute_direction(const Polynomial& p, int direction1, const RationalMatrix& m);

/// Linear combination of a basis's monomials with the given coefficients.
Polynomial from_basis_vector(const MonomialBasis& basis, const std::vector<Rational>& coeffs);

}  // namespace hyperinv
