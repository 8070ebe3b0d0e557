#include "hyperinv/polynomial.hpp"

namespace hyperinv {

Polynomial Polynomial::constant(const Shape& shape, const Rational& value) {
    Polynomial p(shape);
    p.add_term(std::vector<int>(shape.total_cells(), 0), value);
    return p;
}

Polynomial Polynomial::single(const Monomial& m, const Rational& coeff) {
    Polynomial p(m.shape());
    p.add_term(m.exponents(), coeff);
    return p;
}

void Polynomial::add_term(const std::vector<int>& exponents, const Rational& coeff) {
    if (static_cast<long>(exponents.size()) != shape_.total_cells())
        throw UsageError("exponent array does not match polynomial shape");
    for (int e : exponents)
        if (e < 0) throw UsageError("negative exponent in monomial");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponents, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Polynomial::coefficient(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<long> Polynomial::homogeneous_degree() const {
    std::optional<long> degree;
    for (const auto& [expo, coeff] : terms_) {
        long d = 0;
        for (int e : expo) d += e;
        if (!degree)
            degree = d;
        else if (*degree != d)
            return std::nullopt;
    }
    return degree;
}

const std::vector<int>& Polynomial::leading_exponents() const {
    if (terms_.empty()) throw UsageError("zero polynomial has no leading monomial");
    return terms_.rbegin()->first;
}

void Polynomial::require_same_shape(const Polynomial& other) const {
    if (shape_ != other.shape_) throw UsageError("polynomial shapes differ");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    require_same_shape(other);
    Polynomial out = *this;
    for (const auto& [expo, coeff] : other.terms_) out.add_term(expo, coeff);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    require_same_shape(other);
    Polynomial out = *this;
    for (const auto& [expo, coeff] : other.terms_) out.add_term(expo, -coeff);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    require_same_shape(other);
    Polynomial out(shape_);
    std::vector<int> expo(shape_.total_cells());
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : other.terms_) {
            for (size_t i = 0; i < expo.size(); ++i) expo[i] = e1[i] + e2[i];
            out.add_term(expo, c1 * c2);
        }
    }
    return out;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
    Polynomial out(shape_);
    if (factor == 0) return out;
    for (const auto& [expo, coeff] : terms_) out.terms_[expo] = coeff * factor;
    return out;
}

Polynomial normalize_primitive(const Polynomial& p) {
    if (p.is_zero()) throw UsageError("cannot normalize the zero polynomial");
    Integer den_lcm = 1;
    for (const auto& [expo, coeff] : p.terms()) den_lcm = lcm(den_lcm, coeff.get_den());
    Integer num_gcd = 0;
    for (const auto& [expo, coeff] : p.terms()) {
        Integer scaled_num = coeff.get_num() * (den_lcm / coeff.get_den());
        num_gcd = gcd(num_gcd, scaled_num);
    }
    Rational factor = make_rational(den_lcm, num_gcd);
    Polynomial out = p.scaled(factor);
    if (out.terms().rbegin()->second < 0) out = out.scaled(-1);
    return out;
}

Polynomial substitute_direction(const Polynomial& p, int direction1, const RationalMatrix& m) {
    const Shape& shape = p.shape();
    if (direction1 < 1 || direction1 > shape.ndims())
        throw UsageError("substitution direction out of range");
    const int l = direction1 - 1;
    const size_t n = static_cast<size_t>(shape.dims()[l]);
    if (m.rows() != n || m.cols() != n)
        throw UsageError("substitution matrix must be " + std::to_string(n) + "x" +
                         std::to_string(n));

    const long stride = shape.stride(l);
    const long cells = shape.total_cells();

    // Linear image of each indeterminate, built once per cell.
    std::vector<Polynomial> images;
    images.reserve(cells);
    for (long r = 0; r < cells; ++r) {
        int j = static_cast<int>((r / stride) % n);
        Polynomial lin(shape);
        std::vector<int> unit(cells, 0);
        for (size_t i = 0; i < n; ++i) {
            if (m.at(i, j) == 0) continue;
            long target = r + (static_cast<long>(i) - j) * stride;
            unit[target] = 1;
            lin.add_term(unit, m.at(i, j));
            unit[target] = 0;
        }
        images.push_back(std::move(lin));
    }

    Polynomial out(shape);
    for (const auto& [expo, coeff] : p.terms()) {
        Polynomial term = Polynomial::constant(shape, coeff);
        for (long r = 0; r < cells; ++r) {
            for (int e = 0; e < expo[r]; ++e) term = term * images[r];
        }
        out = out + term;
    }
    return out;
}

Polynomial from_basis_vector(const MonomialBasis& basis, const std::vector<Rational>& coeffs) {
    if (coeffs.size() != basis.size())
        throw UsageError("coefficient count does not match basis size");
    Polynomial out(basis.shape);
    for (size_t i = 0; i < coeffs.size(); ++i) out.add_term(basis.exponents[i], coeffs[i]);
    return out;
}

}  // namespace hyperinv
