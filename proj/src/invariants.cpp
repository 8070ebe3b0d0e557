#include "hyperinv/invariants.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "hyperinv/enumerate.hpp"

namespace hyperinv {

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

InvariantReport invariant_basis(const Shape& shape, long degree,
                                const InvariantOptions& options) {
    if (degree < 1) throw UsageError("invariant_basis requires degree >= 1");
    InvariantReport report{shape, degree, 0, 0, 0, 0, 0, {}, {}};

    auto t0 = std::chrono::steady_clock::now();
    MonomialBasis zero_basis = enumerate_weight_space(shape, degree, WeightVector::zero(shape));
    report.timings_seconds["enumerate"] = seconds_since(t0);
    report.zero_weight_dim = zero_basis.size();
    if (zero_basis.size() > options.column_cap)
        throw ResourceCapError("zero-weight dimension " + std::to_string(zero_basis.size()) +
                               " exceeds column cap " + std::to_string(options.column_cap));
    if (zero_basis.size() == 0) return report;

    t0 = std::chrono::steady_clock::now();
    RaisingMaps maps = raising_matrix(shape, degree);
    report.timings_seconds["matrix"] = seconds_since(t0);
    report.matrix_rows = maps.stacked.rows();
    report.matrix_cols = maps.stacked.cols();

    t0 = std::chrono::steady_clock::now();
    RrefResult rr = rref(maps.stacked, options.backend);
    auto kernel = nullspace_from_rref(rr, maps.stacked.cols());
    report.timings_seconds["kernel"] = seconds_since(t0);
    report.rank = rr.rank;
    report.kernel_dim = kernel.size();

    for (const auto& vec : kernel)
        report.invariants.push_back(normalize_primitive(from_basis_vector(maps.source, vec)));
    std::sort(report.invariants.begin(), report.invariants.end(),
              [](const Polynomial& a, const Polynomial& b) {
                  return a.leading_exponents() < b.leading_exponents();
              });
    return report;
}

LieVerification verify_invariance_lie(const Polynomial& p) {
    for (const Generator& g : all_generators(p.shape())) {
        Polynomial residual = apply_generator_poly(g, p);
        if (!residual.is_zero()) return LieVerification{false, g, std::move(residual)};
    }
    return LieVerification{true, std::nullopt, std::nullopt};
}

namespace {

/// All determinant-one test matrices for one direction and one parameter t:
/// transvections I + t U_ij for every i != j, and torus elements with t and
/// 1/t at adjacent diagonal positions.
std::vector<std::pair<std::string, RationalMatrix>> direction_elements(int n,
                                                                       const Rational& t) {
    std::vector<std::pair<std::string, RationalMatrix>> out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            RationalMatrix m = RationalMatrix::identity(n);
            m.at(i, j) = t;
            out.emplace_back("transvection (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ") t=" + to_string(t),
                             std::move(m));
        }
    }
    for (int i = 0; i + 1 < n; ++i) {
        RationalMatrix m = RationalMatrix::identity(n);
        m.at(i, i) = t;
        m.at(i + 1, i + 1) = Rational(1) / t;
        out.emplace_back("torus (" + std::to_string(i + 1) + "," + std::to_string(i + 2) +
                             ") t=" + to_string(t),
                         std::move(m));
    }
    return out;
}

}  // namespace

GroupVerification verify_invariance_group(const Polynomial& p, int random_trials,
                                          unsigned long seed) {
    std::vector<Rational> ts = {make_rational(1), make_rational(2), make_rational(-3),
                                make_rational(1, 2)};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(-9, 9);
    auto nonzero = [&]() {
        int v = 0;
        while (v == 0) v = pick(rng);
        return v;
    };
    for (int trial = 0; trial < random_trials; ++trial)
        ts.push_back(make_rational(nonzero(), nonzero()));

    GroupVerification result{true, 0, ""};
    const Shape& shape = p.shape();
    for (const Rational& t : ts) {
        for (int l = 1; l <= shape.ndims(); ++l) {
            for (auto& [label, m] : direction_elements(shape.dims()[l - 1], t)) {
                ++result.elements_checked;
                if (substitute_direction(p, l, m) != p) {
                    result.invariant = false;
                    result.witness = "direction " + std::to_string(l) + " " + label;
                    return result;
                }
            }
        }
    }
    return result;
}

}  // namespace hyperinv
