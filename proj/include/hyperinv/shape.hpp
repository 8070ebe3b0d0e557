#pragma once

#include <string>
#include <vector>

#include "hyperinv/errors.hpp"

namespace hyperinv {

/// Dimensions (n_1, ..., n_k) of a k-dimensional array. Cells are the
/// multi-indices, totally ordered lexicographically; internally they are
/// addressed by their rank in that order (row-major, last index fastest).
class Shape {
  public:
    explicit Shape(std::vector<int> dims);

    /// Parse "2,2,2" style text.
    static Shape parse(const std::string& text);

    const std::vector<int>& dims() const { return dims_; }
    int ndims() const { return static_cast<int>(dims_.size()); }
    long total_cells() const { return total_cells_; }

    /// LCM of all dimensions; zero-weight monomials exist only in degrees
    /// divisible by this number.
    long lcm_degree() const { return lcm_degree_; }

    /// Rank difference caused by changing coordinate `direction0` by one.
    long stride(int direction0) const { return strides_.at(direction0); }

    /// 0-based coordinates of the cell with the given lex rank.
    std::vector<int> coords_of(long rank) const;

    /// Lex rank of the cell with the given 0-based coordinates.
    long rank_of(const std::vector<int>& coords0) const;

    bool operator==(const Shape& other) const { return dims_ == other.dims_; }
    bool operator!=(const Shape& other) const { return !(*this == other); }

    std::string to_string() const;

  private:
    std::vector<int> dims_;
    std::vector<long> strides_;
    long total_cells_ = 0;
    long lcm_degree_ = 0;
};

}  // namespace hyperinv
