#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperinv/lie_action.hpp"
#include "hyperinv/polynomial.hpp"

namespace hyperinv {

/// Fixed default seed for the randomized group-element trials, so repeated
/// runs are reproducible unless the caller chooses otherwise.
inline constexpr unsigned long kDefaultSeed = 20250825UL;

/// Default bound on the number of matrix columns (zero-weight dimension)
/// before invariant_basis refuses to run.
inline constexpr size_t kDefaultColumnCap = 20000;

struct InvariantOptions {
    size_t column_cap = kDefaultColumnCap;
    RrefBackend backend = RrefBackend::GaussJordan;
};

struct InvariantReport {
    Shape shape;
    long degree = 0;
    size_t zero_weight_dim = 0;
    size_t matrix_rows = 0;
    size_t matrix_cols = 0;
    size_t rank = 0;
    size_t kernel_dim = 0;
    /// Primitive-normalized invariants, ordered by canonical order of their
    /// leading monomials.
    std::vector<Polynomial> invariants;
    /// Elapsed wall-clock seconds of the pipeline stages.
    std::map<std::string, double> timings_seconds;
};

/// Full pipeline: zero-weight basis, stacked raising matrix, kernel, one
/// normalized polynomial per kernel vector. Throws ResourceCapError when the
/// zero-weight dimension exceeds options.column_cap.
InvariantReport invariant_basis(const Shape& shape, long degree,
                                const InvariantOptions& options = {});

struct LieVerification {
    bool invariant = false;
    std::optional<Generator> witness;  ///< first generator with nonzero residual
    std::optional<Polynomial> residual;
};

/// True iff every H, E, and F generator annihilates p.
LieVerification verify_invariance_lie(const Polynomial& p);

struct GroupVerification {
    bool invariant = false;
    size_t elements_checked = 0;
    std::string witness;  ///< description of the first group element that moved p
};

/// Substitutes determinant-one group elements: all transvections I + t U_ij
/// and torus elements diag(.., t, 1/t, ..) in every direction, for
/// t in {1, 2, -3, 1/2} plus `random_trials` random nonzero rationals with
/// numerator and denominator in [-9, 9].
GroupVerification verify_invariance_group(const Polynomial& p, int random_trials = 20,
                                          unsigned long seed = kDefaultSeed);

}  // namespace hyperinv
