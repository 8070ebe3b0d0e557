#include <doctest.h>

#include "golden_data.hpp"
#include "hyperinv/invariants.hpp"

using namespace hyperinv;

namespace {

Polynomial hyperdet() {
    Shape cube({2, 2, 2});
    Polynomial c(cube);
    for (const auto& [compact, coeff] : golden::kHyperdetTerms)
        c.add_term(Monomial::parse(compact, cube).exponents(), Rational(coeff));
    return c;
}

Polynomial det2() {
    Shape s({2, 2});
    Polynomial d(s);
    d.add_term({1, 0, 0, 1}, Rational(1));
    d.add_term({0, 1, 1, 0}, Rational(-1));
    return d;
}

Polynomial det3() {
    Shape s({3, 3});
    Polynomial d(s);
    // Signed permutation expansion of a 3x3 determinant.
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
    for (int p = 0; p < 6; ++p) {
        std::vector<int> expo(9, 0);
        for (int row = 0; row < 3; ++row) expo[3 * row + perms[p][row]] = 1;
        d.add_term(expo, Rational(p < 3 ? 1 : -1));
    }
    return d;
}

}  // namespace

TEST_CASE("the two-by-two determinant spans the degree-2 kernel") {
    InvariantReport report = invariant_basis(Shape({2, 2}), 2);
    CHECK(report.zero_weight_dim == 2);
    CHECK(report.rank == 1);
    REQUIRE(report.kernel_dim == 1);
    REQUIRE(report.invariants.size() == 1);
    CHECK(report.invariants[0] == det2());
}

TEST_CASE("the three-by-three determinant spans the degree-3 kernel") {
    InvariantReport report = invariant_basis(Shape({3, 3}), 3);
    REQUIRE(report.invariants.size() == 1);
    const Polynomial& p = report.invariants[0];
    CHECK(p.term_count() == 6);
    CHECK(p == det3());
    // The identity-permutation diagonal carries coefficient +1.
    CHECK(p.coefficient({1, 0, 0, 0, 1, 0, 0, 0, 1}) == Rational(1));
}

TEST_CASE("degree-4 pipeline on the 2x2x2 array") {
    InvariantReport report = invariant_basis(Shape({2, 2, 2}), 4);
    CHECK(report.zero_weight_dim == 12);
    CHECK(report.matrix_rows == 24);
    CHECK(report.matrix_cols == 12);
    CHECK(report.rank == 11);
    CHECK(report.kernel_dim == 1);
    CHECK(report.kernel_dim == report.zero_weight_dim - report.rank);
    REQUIRE(report.invariants.size() == report.kernel_dim);

    const Polynomial& c = report.invariants[0];
    const Polynomial expected = hyperdet();
    CHECK(c.term_count() == 12);
    CHECK(c == expected);

    CHECK(report.timings_seconds.count("enumerate") == 1);
    CHECK(report.timings_seconds.count("matrix") == 1);
    CHECK(report.timings_seconds.count("kernel") == 1);
}

TEST_CASE("no cube invariants below degree 4") {
    InvariantReport report = invariant_basis(Shape({2, 2, 2}), 2);
    CHECK(report.zero_weight_dim == 4);
    CHECK(report.rank == 4);
    CHECK(report.kernel_dim == 0);
    CHECK(report.invariants.empty());
}

TEST_CASE("cube kernel dimensions through degree 12") {
    for (long d = 1; d <= 12; ++d) {
        InvariantReport report = invariant_basis(Shape({2, 2, 2}), d);
        CHECK(report.kernel_dim == golden::kCubeKernelDims[d - 1]);
    }
}

TEST_CASE("the degree-8 invariant is the squared degree-4 one") {
    InvariantReport report = invariant_basis(Shape({2, 2, 2}), 8);
    REQUIRE(report.invariants.size() == 1);
    Polynomial c = hyperdet();
    CHECK(report.invariants[0] == normalize_primitive(c * c));
}

TEST_CASE("both elimination backends produce the same invariants") {
    for (RrefBackend backend : {RrefBackend::GaussJordan, RrefBackend::Bareiss}) {
        InvariantOptions options;
        options.backend = backend;
        InvariantReport report = invariant_basis(Shape({2, 2, 2}), 4, options);
        REQUIRE(report.invariants.size() == 1);
        CHECK(report.invariants[0] == hyperdet());
    }
}

TEST_CASE("known invariants pass both verifiers") {
    Polynomial c = hyperdet();
    for (const Polynomial& p : {c, normalize_primitive(c * c), det2(), det3()}) {
        LieVerification lie = verify_invariance_lie(p);
        CHECK(lie.invariant);
        CHECK(!lie.witness.has_value());
        GroupVerification group = verify_invariance_group(p);
        CHECK(group.invariant);
        CHECK(group.witness.empty());
        CHECK(group.elements_checked > 0);
    }
}

TEST_CASE("non-invariants are caught with a concrete witness") {
    Shape cube({2, 2, 2});
    Polynomial x000 = Polynomial::single(Monomial::parse("10000000", cube), Rational(1));

    LieVerification lie = verify_invariance_lie(x000);
    CHECK(!lie.invariant);
    REQUIRE(lie.witness.has_value());
    REQUIRE(lie.residual.has_value());
    CHECK(!lie.residual->is_zero());
    CHECK(*lie.residual == apply_generator_poly(*lie.witness, x000));

    // x000 x111 has weight zero, so no Cartan generator can expose it; the
    // witness must come from a raising or lowering generator, and the group
    // sweep must catch it independently.
    Polynomial diag = Polynomial::single(Monomial::parse("10000001", cube), Rational(1));
    LieVerification diag_lie = verify_invariance_lie(diag);
    CHECK(!diag_lie.invariant);
    REQUIRE(diag_lie.witness.has_value());
    CHECK(diag_lie.witness->kind != GeneratorKind::H);
    GroupVerification group = verify_invariance_group(diag);
    CHECK(!group.invariant);
    CHECK(!group.witness.empty());
}

TEST_CASE("group verifier sweeps a fixed element count on the cube") {
    GroupVerification group = verify_invariance_group(hyperdet());
    // 24 parameter values, 3 directions, 3 elements (two transvections and
    // one torus element) per direction and value.
    CHECK(group.elements_checked == 216);
}

TEST_CASE("column cap aborts oversized runs") {
    InvariantOptions options;
    options.column_cap = 5;
    CHECK_THROWS_AS(invariant_basis(Shape({2, 2, 2}), 4, options), ResourceCapError);
    // A cap that is not exceeded leaves the run unaffected.
    options.column_cap = 12;
    CHECK(invariant_basis(Shape({2, 2, 2}), 4, options).kernel_dim == 1);
}

TEST_CASE("four-direction arrays yield sorted, verified invariants") {
    InvariantReport report = invariant_basis(Shape({2, 2, 2, 2}), 4);
    CHECK(report.invariants.size() == report.kernel_dim);
    CHECK(report.kernel_dim >= 1);
    for (size_t i = 0; i + 1 < report.invariants.size(); ++i)
        CHECK(report.invariants[i].leading_exponents() <
              report.invariants[i + 1].leading_exponents());
    for (const Polynomial& p : report.invariants) {
        CHECK(p.homogeneous_degree() == 4);
        CHECK(verify_invariance_lie(p).invariant);
    }
}

TEST_CASE("invalid degrees are rejected") {
    CHECK_THROWS_AS(invariant_basis(Shape({2, 2, 2}), 0), UsageError);
    CHECK_THROWS_AS(invariant_basis(Shape({2, 2, 2}), -3), UsageError);
}
