#pragma once

#include <vector>

#include "hyperinv/rational.hpp"

namespace hyperinv {

/// Dense exact-rational matrix, row-major.
class RationalMatrix {
  public:
    RationalMatrix() = default;
    RationalMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    RationalMatrix transpose() const;
    RationalMatrix multiply(const RationalMatrix& other) const;

    /// Rows of `other` appended below this matrix (column counts must agree).
    RationalMatrix vstack(const RationalMatrix& other) const;
    /// Columns of `other` appended to the right (row counts must agree).
    RationalMatrix hstack(const RationalMatrix& other) const;

    std::vector<Rational> column(size_t c) const;
    std::vector<Rational> row(size_t r) const;

    bool operator==(const RationalMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const RationalMatrix& other) const { return !(*this == other); }

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// Elimination backend. Both produce the identical canonical reduced row
/// echelon form; GaussJordan pivots on the smallest-magnitude nonzero entry
/// to keep intermediate numerators small, Bareiss performs fraction-free
/// integer elimination followed by normalization.
enum class RrefBackend { GaussJordan, Bareiss };

struct RrefResult {
    RationalMatrix matrix;             ///< canonical RREF
    size_t rank = 0;
    std::vector<size_t> pivot_columns; ///< ascending
};

RrefResult rref(const RationalMatrix& a, RrefBackend backend = RrefBackend::GaussJordan);

/// Nullspace basis via free-variable back-substitution: one vector per free
/// column, in ascending free-column order, free variable set to +1.
std::vector<std::vector<Rational>> nullspace_basis(const RationalMatrix& a,
                                                   RrefBackend backend = RrefBackend::GaussJordan);
std::vector<std::vector<Rational>> nullspace_from_rref(const RrefResult& rr, size_t cols);

/// Rank of the matrix (shared elimination machinery).
size_t rank_of(const RationalMatrix& a, RrefBackend backend = RrefBackend::GaussJordan);

/// A . v for a column vector v.
std::vector<Rational> matrix_vector(const RationalMatrix& a, const std::vector<Rational>& v);

}  // namespace hyperinv
