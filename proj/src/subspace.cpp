#include "hyperinv/subspace.hpp"

namespace hyperinv {

Subspace Subspace::from_columns(const RationalMatrix& columns) {
    const size_t ambient = columns.rows();
    RrefResult rr = rref(columns.transpose());
    RationalMatrix basis(ambient, rr.rank);
    for (size_t i = 0; i < rr.rank; ++i)
        for (size_t c = 0; c < ambient; ++c) basis.at(c, i) = rr.matrix.at(i, c);
    return Subspace(ambient, std::move(basis));
}

Subspace Subspace::from_vectors(size_t ambient_dim,
                                const std::vector<std::vector<Rational>>& vs) {
    RationalMatrix columns(ambient_dim, vs.size());
    for (size_t j = 0; j < vs.size(); ++j) {
        if (vs[j].size() != ambient_dim) throw UsageError("vector length differs from ambient");
        for (size_t i = 0; i < ambient_dim; ++i) columns.at(i, j) = vs[j][i];
    }
    return from_columns(columns);
}

namespace {

void require_common_ambient(const std::vector<Subspace>& subspaces) {
    if (subspaces.empty()) throw UsageError("need at least one subspace");
    for (const Subspace& s : subspaces)
        if (s.ambient_dim() != subspaces.front().ambient_dim())
            throw UsageError("subspaces have different ambient dimensions");
}

}  // namespace

size_t subspace_sum_dim(const std::vector<Subspace>& subspaces) {
    require_common_ambient(subspaces);
    RationalMatrix all = subspaces.front().basis();
    for (size_t i = 1; i < subspaces.size(); ++i) all = all.hstack(subspaces[i].basis());
    return rank_of(all);
}

size_t subspace_intersection_dim(const std::vector<Subspace>& subspaces) {
    require_common_ambient(subspaces);
    const size_t n = subspaces.size();
    if (n == 1) return subspaces.front().dim();
    const size_t ambient = subspaces.front().ambient_dim();

    // Unknowns: one coefficient vector per subspace, stacked. Constraints:
    // B_0 a_0 - B_t a_t = 0 for t = 1..n-1. A solution picks one common
    // vector, and since each basis has independent columns the solution space
    // is isomorphic to the intersection.
    std::vector<size_t> offset(n, 0);
    size_t total_cols = 0;
    for (size_t t = 0; t < n; ++t) {
        offset[t] = total_cols;
        total_cols += subspaces[t].dim();
    }
    RationalMatrix system((n - 1) * ambient, total_cols);
    for (size_t t = 1; t < n; ++t) {
        const RationalMatrix& b0 = subspaces[0].basis();
        const RationalMatrix& bt = subspaces[t].basis();
        for (size_t r = 0; r < ambient; ++r) {
            size_t row = (t - 1) * ambient + r;
            for (size_t c = 0; c < b0.cols(); ++c) system.at(row, offset[0] + c) = b0.at(r, c);
            for (size_t c = 0; c < bt.cols(); ++c) system.at(row, offset[t] + c) = -bt.at(r, c);
        }
    }
    RrefResult rr = rref(system);
    return total_cols - rr.rank;
}

InclusionExclusionResult inclusion_exclusion_check(const std::vector<Subspace>& subspaces) {
    require_common_ambient(subspaces);
    const size_t n = subspaces.size();
    if (n > 6) throw UsageError("inclusion-exclusion check is limited to 6 subspaces");

    InclusionExclusionResult result;
    result.lhs = static_cast<long>(subspace_sum_dim(subspaces));
    result.rhs = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<size_t> indices;
        std::vector<Subspace> members;
        for (size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                indices.push_back(i);
                members.push_back(subspaces[i]);
            }
        }
        size_t dim = subspace_intersection_dim(members);
        result.subset_dims[indices] = dim;
        result.rhs += (indices.size() % 2 == 1) ? static_cast<long>(dim) : -static_cast<long>(dim);
    }
    result.holds = result.lhs <= result.rhs;
    return result;
}

}  // namespace hyperinv
