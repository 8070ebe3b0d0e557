#pragma once

#include <map>
#include <vector>

#include "hyperinv/matrix.hpp"

namespace hyperinv {

/// A subspace of Q^ambient, stored as a canonical column basis (the reduced
/// row echelon form of the spanning set, transposed back to columns). The
/// stored columns are always linearly independent.
class Subspace {
  public:
    /// Span of the columns of `columns` (ambient x m, any m >= 0).
    static Subspace from_columns(const RationalMatrix& columns);
    /// Span of the given vectors inside Q^ambient.
    static Subspace from_vectors(size_t ambient_dim, const std::vector<std::vector<Rational>>& vs);

    size_t ambient_dim() const { return ambient_dim_; }
    size_t dim() const { return basis_.cols(); }
    const RationalMatrix& basis() const { return basis_; }

  private:
    Subspace(size_t ambient, RationalMatrix basis)
        : ambient_dim_(ambient), basis_(std::move(basis)) {}
    size_t ambient_dim_ = 0;
    RationalMatrix basis_;
};

/// dim(U_1 + ... + U_n): rank of the concatenated bases.
size_t subspace_sum_dim(const std::vector<Subspace>& subspaces);

/// dim(U_1 ∩ ... ∩ U_n), computed as the nullity of the stacked system that
/// equates basis combinations pairwise against the first subspace.
size_t subspace_intersection_dim(const std::vector<Subspace>& subspaces);

struct InclusionExclusionResult {
    long lhs = 0;  ///< dim of the sum
    long rhs = 0;  ///< alternating sum of intersection dims over nonempty subsets
    bool holds = false;  ///< lhs <= rhs
    /// Intersection dimension per index subset (ascending indices).
    std::map<std::vector<size_t>, size_t> subset_dims;
};

/// Verifies dim(sum) <= alternating sum of intersection dimensions.
/// Guarded to n <= 6 subspaces (2^n - 1 subset intersections).
InclusionExclusionResult inclusion_exclusion_check(const std::vector<Subspace>& subspaces);

}  // namespace hyperinv
