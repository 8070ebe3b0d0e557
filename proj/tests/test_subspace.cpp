#include <doctest.h>

#include <random>

#include "golden_data.hpp"
#include "hyperinv/lie_action.hpp"
#include "hyperinv/subspace.hpp"

using namespace hyperinv;

namespace {

RationalMatrix columns_from(const std::vector<std::vector<long>>& cols, size_t dim) {
    RationalMatrix m(dim, cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < dim; ++i) m.at(i, j) = Rational(cols[j][i]);
    return m;
}

}  // namespace

TEST_CASE("a subspace is independent of its spanning set") {
    // Two generating sets of the same plane in Q^3.
    Subspace a = Subspace::from_vectors(3, {{Rational(1), Rational(0), Rational(1)},
                                            {Rational(0), Rational(1), Rational(1)}});
    Subspace b = Subspace::from_vectors(3, {{Rational(2), Rational(2), Rational(4)},
                                            {Rational(1), Rational(-1), Rational(0)},
                                            {Rational(3), Rational(1), Rational(4)}});
    CHECK(a.dim() == 2);
    CHECK(b.dim() == 2);
    CHECK(a.basis() == b.basis());
}

TEST_CASE("sum and intersection of identical lines") {
    Subspace line = Subspace::from_vectors(2, {{Rational(1), Rational(2)}});
    CHECK(subspace_sum_dim({line, line}) == 1);
    CHECK(subspace_intersection_dim({line, line}) == 1);
}

TEST_CASE("three distinct lines in the plane break additivity") {
    Subspace u = Subspace::from_vectors(2, {{Rational(1), Rational(0)}});
    Subspace v = Subspace::from_vectors(2, {{Rational(0), Rational(1)}});
    Subspace w = Subspace::from_vectors(2, {{Rational(1), Rational(1)}});
    CHECK(subspace_sum_dim({u, v, w}) == 2);
    CHECK(subspace_intersection_dim({u, v}) == 0);
    CHECK(subspace_intersection_dim({u, w}) == 0);
    CHECK(subspace_intersection_dim({v, w}) == 0);

    InclusionExclusionResult r = inclusion_exclusion_check({u, v, w});
    CHECK(r.lhs == 2);
    CHECK(r.rhs == 3);
    CHECK(r.holds);       // lhs <= rhs
    CHECK(r.lhs < r.rhs); // and strictly so here
}

TEST_CASE("coordinate planes meet inclusion-exclusion with equality") {
    auto axis = [](size_t i) {
        std::vector<Rational> v(6, Rational(0));
        v[i] = Rational(1);
        return v;
    };
    Subspace u = Subspace::from_vectors(6, {axis(0), axis(1), axis(2)});
    Subspace v = Subspace::from_vectors(6, {axis(2), axis(3), axis(4)});
    Subspace w = Subspace::from_vectors(6, {axis(4), axis(5), axis(0)});
    InclusionExclusionResult r = inclusion_exclusion_check({u, v, w});
    CHECK(r.lhs == 6);
    CHECK(r.rhs == 6);
    CHECK(r.holds);
    CHECK(r.subset_dims.at({0}) == 3);
    CHECK(r.subset_dims.at({0, 1}) == 1);
    CHECK(r.subset_dims.at({0, 1, 2}) == 0);
}

TEST_CASE("dimension formula for two random subspaces") {
    std::mt19937_64 rng(20250825);
    std::uniform_int_distribution<long> entry(-4, 4);
    for (int trial = 0; trial < 15; ++trial) {
        auto random_vec = [&] {
            std::vector<Rational> v(4);
            for (auto& x : v) x = Rational(entry(rng));
            return v;
        };
        Subspace u = Subspace::from_vectors(4, {random_vec(), random_vec()});
        Subspace v = Subspace::from_vectors(4, {random_vec(), random_vec()});
        size_t sum = subspace_sum_dim({u, v});
        size_t meet = subspace_intersection_dim({u, v});
        CHECK(sum + meet == u.dim() + v.dim());
        CHECK(inclusion_exclusion_check({u, v}).holds);
    }
}

TEST_CASE("inclusion-exclusion guard rails") {
    Subspace line = Subspace::from_vectors(2, {{Rational(1), Rational(0)}});
    Subspace other = Subspace::from_vectors(3, {{Rational(1), Rational(0), Rational(0)}});
    CHECK_THROWS_AS(subspace_sum_dim({line, other}), UsageError);
    CHECK_THROWS_AS(subspace_intersection_dim({line, other}), UsageError);
    std::vector<Subspace> seven(7, line);
    CHECK_THROWS_AS(inclusion_exclusion_check(seven), UsageError);
    CHECK_THROWS_AS(inclusion_exclusion_check({}), UsageError);
}

TEST_CASE("images of the three lowering maps into the zero weight space") {
    Shape cube({2, 2, 2});
    std::vector<Subspace> images;
    for (int l = 1; l <= 3; ++l) {
        std::vector<int> w{0, 0, 0};
        w[l - 1] = 2;
        WeightVector from = WeightVector::parse(std::to_string(w[0]) + "," +
                                                    std::to_string(w[1]) + "," +
                                                    std::to_string(w[2]),
                                                cube);
        images.push_back(Subspace::from_columns(lowering_matrix(cube, 4, from, l).matrix));
    }
    for (size_t i = 0; i < 3; ++i) CHECK(images[i].dim() == golden::kCubeD4ImageDims[i]);
    CHECK(subspace_intersection_dim({images[0], images[1]}) == golden::kCubeD4PairwiseDim);
    CHECK(subspace_intersection_dim({images[0], images[2]}) == golden::kCubeD4PairwiseDim);
    CHECK(subspace_intersection_dim({images[1], images[2]}) == golden::kCubeD4PairwiseDim);
    CHECK(subspace_sum_dim(images) == golden::kCubeD4SumDim);

    InclusionExclusionResult r = inclusion_exclusion_check(images);
    CHECK(r.lhs == golden::kCubeD4SumDim);
    CHECK(r.rhs == golden::kCubeD4SumDim);
    CHECK(r.subset_dims.at({0, 1, 2}) == golden::kCubeD4TripleDim);
    CHECK(r.holds);
}

TEST_CASE("column spans of synthetic matrices") {
    RationalMatrix m = columns_from({{1, 0, 0}, {2, 0, 0}, {0, 1, 0}}, 3);
    Subspace s = Subspace::from_columns(m);
    CHECK(s.dim() == 2);
    CHECK(s.ambient_dim() == 3);
    Subspace zero = Subspace::from_columns(RationalMatrix(3, 0));
    CHECK(zero.dim() == 0);
    CHECK(subspace_sum_dim({s, zero}) == 2);
    CHECK(subspace_intersection_dim({s, zero}) == 0);
}
