#include <doctest.h>

#include <random>

#include "golden_data.hpp"
#include "hyperinv/polynomial.hpp"

using namespace hyperinv;

namespace {

Polynomial hyperdet() {
    Shape cube({2, 2, 2});
    Polynomial c(cube);
    for (const auto& [compact, coeff] : golden::kHyperdetTerms)
        c.add_term(Monomial::parse(compact, cube).exponents(), Rational(coeff));
    return c;
}

Polynomial var(const Shape& shape, long cell) {
    std::vector<int> expo(shape.total_cells(), 0);
    expo[cell] = 1;
    return Polynomial::single(Monomial(shape, expo), Rational(1));
}

Polynomial det2() {
    Shape square({2, 2});
    Polynomial d(square);
    d.add_term({1, 0, 0, 1}, Rational(1));
    d.add_term({0, 1, 1, 0}, Rational(-1));
    return d;
}

Polynomial random_poly(std::mt19937_64& rng, const Shape& shape, int terms, int max_exp) {
    std::uniform_int_distribution<int> e(0, max_exp);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    Polynomial p(shape);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> expo(shape.total_cells());
        for (auto& x : expo) x = e(rng);
        p.add_term(expo, make_rational(num(rng), den(rng)));
    }
    return p;
}

RationalMatrix mat2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    RationalMatrix m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

}  // namespace

TEST_CASE("term bookkeeping: accumulation and cancellation") {
    Shape square({2, 2});
    Polynomial p(square);
    p.add_term({1, 0, 0, 1}, Rational(2));
    p.add_term({1, 0, 0, 1}, Rational(-2));
    CHECK(p.is_zero());
    p.add_term({1, 0, 0, 1}, make_rational(1, 2));
    p.add_term({1, 0, 0, 1}, make_rational(1, 3));
    CHECK(p.coefficient({1, 0, 0, 1}) == make_rational(5, 6));
    CHECK_THROWS_AS(p.add_term({1, 0}, Rational(1)), UsageError);
}

TEST_CASE("binomial square") {
    Shape square({2, 2});
    Polynomial sum = var(square, 0) + var(square, 3);  // x11 + x22
    Polynomial sq = sum * sum;
    CHECK(sq.term_count() == 3);
    CHECK(sq.coefficient({2, 0, 0, 0}) == Rational(1));
    CHECK(sq.coefficient({1, 0, 0, 1}) == Rational(2));
    CHECK(sq.coefficient({0, 0, 0, 2}) == Rational(1));
    CHECK(sq.homogeneous_degree() == 2);
}

TEST_CASE("multiplying by one and by zero") {
    Polynomial c = hyperdet();
    Polynomial one = Polynomial::constant(c.shape(), Rational(1));
    CHECK(c * one == c);
    CHECK((c - c).is_zero());
    REQUIRE(c.homogeneous_degree().has_value());
    CHECK(*c.homogeneous_degree() == 4);
    Polynomial inhom = c + one;
    CHECK(!inhom.homogeneous_degree().has_value());
}

TEST_CASE("product degrees add") {
    std::mt19937_64 rng(41);
    Shape square({2, 2});
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial a = random_poly(rng, square, 3, 2);
        Polynomial b = random_poly(rng, square, 3, 2);
        Polynomial c = random_poly(rng, square, 3, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        auto da = a.homogeneous_degree();
        auto db = b.homogeneous_degree();
        if (da && db && !a.is_zero() && !b.is_zero()) {
            auto dp = (a * b).homogeneous_degree();
            REQUIRE(dp.has_value());
            CHECK(*dp == *da + *db);
        }
    }
}

TEST_CASE("primitive normalization") {
    Polynomial c = hyperdet();
    CHECK(normalize_primitive(c.scaled(Rational(-2))) == c);
    CHECK(normalize_primitive(c.scaled(make_rational(7, 3))) == c);
    CHECK(normalize_primitive(c) == c);

    Shape square({2, 2});
    Polynomial thirds(square);
    thirds.add_term({1, 0, 0, 1}, make_rational(1, 3));
    thirds.add_term({0, 1, 1, 0}, make_rational(-1, 3));
    Polynomial d = det2();
    CHECK(normalize_primitive(thirds) == d);

    // Idempotence and coprime-integer output on random nonzero polynomials.
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial p = random_poly(rng, square, 4, 3);
        if (p.is_zero()) continue;
        Polynomial n = normalize_primitive(p);
        CHECK(normalize_primitive(n) == n);
        Integer content = 0;
        for (const auto& [expo, coeff] : n.terms()) {
            CHECK(coeff.get_den() == 1);
            Integer num = coeff.get_num();
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
        }
        CHECK(content == 1);
        CHECK(sgn(n.terms().rbegin()->second) > 0);
    }
    CHECK_THROWS_AS(normalize_primitive(Polynomial(square)), UsageError);
}

TEST_CASE("substitution by the identity is a no-op") {
    Polynomial c = hyperdet();
    for (int l = 1; l <= 3; ++l)
        CHECK(substitute_direction(c, l, RationalMatrix::identity(2)) == c);
}

TEST_CASE("determinant is fixed by shears and scaled torus") {
    Polynomial d = det2();
    for (const Rational& t :
         {Rational(1), Rational(2), Rational(-3), make_rational(1, 2)}) {
        CHECK(substitute_direction(d, 1, mat2(1, t, 0, 1)) == d);
        CHECK(substitute_direction(d, 2, mat2(1, 0, t, 1)) == d);
    }
    CHECK(substitute_direction(d, 1, mat2(Rational(5), 0, 0, make_rational(1, 5))) == d);
    // A non-special matrix scales the determinant by its own determinant.
    Polynomial scaled = substitute_direction(d, 1, mat2(2, 0, 0, 1));
    CHECK(scaled == d.scaled(Rational(2)));
}

TEST_CASE("hyperdeterminant is fixed by a torus element in direction 2") {
    Polynomial c = hyperdet();
    CHECK(substitute_direction(c, 2, mat2(Rational(2), 0, 0, make_rational(1, 2))) == c);
}

TEST_CASE("substitution respects matrix products") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    Shape cube({2, 2, 2});
    auto random_mat = [&]() {
        RationalMatrix m(2, 2);
        for (size_t r = 0; r < 2; ++r)
            for (size_t col = 0; col < 2; ++col) m.at(r, col) = make_rational(num(rng), den(rng));
        return m;
    };
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial p = random_poly(rng, cube, 3, 2);
        const int l = 1 + trial % 3;
        RationalMatrix m1 = random_mat();
        RationalMatrix m2 = random_mat();
        CHECK(substitute_direction(p, l, m1.multiply(m2)) ==
              substitute_direction(substitute_direction(p, l, m2), l, m1));
    }
}

TEST_CASE("substitutions in distinct directions commute") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> num(-9, 9);
    Shape cube({2, 2, 2});
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial p = random_poly(rng, cube, 3, 2);
        RationalMatrix m1 = mat2(num(rng), num(rng), num(rng), num(rng));
        RationalMatrix m2 = mat2(num(rng), num(rng), num(rng), num(rng));
        CHECK(substitute_direction(substitute_direction(p, 1, m1), 3, m2) ==
              substitute_direction(substitute_direction(p, 3, m2), 1, m1));
    }
}

TEST_CASE("substitution validates dimensions") {
    Polynomial c = hyperdet();
    CHECK_THROWS_AS(substitute_direction(c, 1, RationalMatrix::identity(3)), UsageError);
    CHECK_THROWS_AS(substitute_direction(c, 4, RationalMatrix::identity(2)), UsageError);
    CHECK_THROWS_AS(substitute_direction(c, 0, RationalMatrix::identity(2)), UsageError);
}

TEST_CASE("building a polynomial from basis coordinates") {
    Shape square({2, 2});
    MonomialBasis basis{square, 2, WeightVector::zero(square), {{0, 1, 1, 0}, {1, 0, 0, 1}}};
    Polynomial p = from_basis_vector(basis, {Rational(-1), Rational(1)});
    CHECK(p == det2());
    CHECK(p.leading_exponents() == std::vector<int>{1, 0, 0, 1});
    CHECK_THROWS_AS(from_basis_vector(basis, {Rational(1)}), UsageError);
}
