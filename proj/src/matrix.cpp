#include "hyperinv/matrix.hpp"

#include <algorithm>

namespace hyperinv {

RationalMatrix RationalMatrix::identity(size_t n) {
    RationalMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RationalMatrix RationalMatrix::multiply(const RationalMatrix& other) const {
    if (cols_ != other.rows_) throw UsageError("matrix product dimension mismatch");
    RationalMatrix out(rows_, other.cols_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t t = 0; t < cols_; ++t) {
            const Rational& a = at(r, t);
            if (a == 0) continue;
            for (size_t c = 0; c < other.cols_; ++c) {
                const Rational& b = other.at(t, c);
                if (b != 0) out.at(r, c) += a * b;
            }
        }
    }
    return out;
}

RationalMatrix RationalMatrix::vstack(const RationalMatrix& other) const {
    if (cols_ != other.cols_) throw UsageError("vstack column mismatch");
    RationalMatrix out(rows_ + other.rows_, cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
    for (size_t r = 0; r < other.rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) out.at(rows_ + r, c) = other.at(r, c);
    return out;
}

RationalMatrix RationalMatrix::hstack(const RationalMatrix& other) const {
    if (rows_ != other.rows_) throw UsageError("hstack row mismatch");
    RationalMatrix out(rows_, cols_ + other.cols_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
        for (size_t c = 0; c < other.cols_; ++c) out.at(r, cols_ + c) = other.at(r, c);
    }
    return out;
}

std::vector<Rational> RationalMatrix::column(size_t c) const {
    std::vector<Rational> v(rows_);
    for (size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

std::vector<Rational> RationalMatrix::row(size_t r) const {
    std::vector<Rational> v(cols_);
    for (size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

namespace {

/// Gauss-Jordan with the smallest-magnitude nonzero pivot in each column.
RrefResult rref_gauss_jordan(RationalMatrix m) {
    const size_t rows = m.rows(), cols = m.cols();
    RrefResult out;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t best = rows;
        for (size_t rr = r; rr < rows; ++rr) {
            if (m.at(rr, c) == 0) continue;
            if (best == rows || abs_compare(m.at(rr, c), m.at(best, c)) < 0) best = rr;
        }
        if (best == rows) continue;
        if (best != r)
            for (size_t cc = 0; cc < cols; ++cc) std::swap(m.at(r, cc), m.at(best, cc));
        Rational pivot = m.at(r, c);
        for (size_t cc = c; cc < cols; ++cc) m.at(r, cc) /= pivot;
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || m.at(rr, c) == 0) continue;
            Rational factor = m.at(rr, c);
            for (size_t cc = c; cc < cols; ++cc) m.at(rr, cc) -= factor * m.at(r, cc);
        }
        out.pivot_columns.push_back(c);
        ++r;
    }
    out.rank = out.pivot_columns.size();
    out.matrix = std::move(m);
    return out;
}

/// Fraction-free Bareiss forward elimination on a denominator-cleared integer
/// copy, then rational normalization to the canonical RREF.
RrefResult rref_bareiss(const RationalMatrix& a) {
    const size_t rows = a.rows(), cols = a.cols();
    // Clear denominators row by row; row scaling does not change the RREF.
    std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
    for (size_t r = 0; r < rows; ++r) {
        Integer scale = 1;
        for (size_t c = 0; c < cols; ++c) scale = lcm(scale, a.at(r, c).get_den());
        for (size_t c = 0; c < cols; ++c) {
            Rational v = a.at(r, c) * Rational(scale);
            v.canonicalize();
            m[r][c] = v.get_num();
        }
    }

    RrefResult out;
    Integer prev_pivot = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t src = rows;
        for (size_t rr = r; rr < rows; ++rr) {
            if (m[rr][c] != 0) {
                src = rr;
                break;
            }
        }
        if (src == rows) continue;
        if (src != r) std::swap(m[src], m[r]);
        const Integer pivot = m[r][c];
        for (size_t rr = r + 1; rr < rows; ++rr) {
            for (size_t cc = c + 1; cc < cols; ++cc) {
                Integer num = pivot * m[rr][cc] - m[rr][c] * m[r][cc];
                Integer quot, rem;
                mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                            prev_pivot.get_mpz_t());
                if (rem != 0) throw std::logic_error("fraction-free elimination lost exactness");
                m[rr][cc] = quot;
            }
            m[rr][c] = 0;
        }
        prev_pivot = pivot;
        out.pivot_columns.push_back(c);
        ++r;
    }
    out.rank = out.pivot_columns.size();

    // Normalize pivots to 1 and eliminate above them (back substitution).
    RationalMatrix red(rows, cols);
    for (size_t rr = 0; rr < rows; ++rr)
        for (size_t cc = 0; cc < cols; ++cc) red.at(rr, cc) = Rational(m[rr][cc]);
    for (size_t i = out.rank; i-- > 0;) {
        size_t pc = out.pivot_columns[i];
        Rational pivot = red.at(i, pc);
        for (size_t cc = pc; cc < cols; ++cc) red.at(i, cc) /= pivot;
        for (size_t rr = 0; rr < i; ++rr) {
            Rational factor = red.at(rr, pc);
            if (factor == 0) continue;
            for (size_t cc = pc; cc < cols; ++cc) red.at(rr, cc) -= factor * red.at(i, cc);
        }
    }
    out.matrix = std::move(red);
    return out;
}

}  // namespace

RrefResult rref(const RationalMatrix& a, RrefBackend backend) {
    if (backend == RrefBackend::GaussJordan) return rref_gauss_jordan(a);
    return rref_bareiss(a);
}

std::vector<std::vector<Rational>> nullspace_from_rref(const RrefResult& rr, size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : rr.pivot_columns) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols);
        v[f] = 1;
        for (size_t i = 0; i < rr.pivot_columns.size(); ++i)
            v[rr.pivot_columns[i]] = -rr.matrix.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Rational>> nullspace_basis(const RationalMatrix& a, RrefBackend backend) {
    return nullspace_from_rref(rref(a, backend), a.cols());
}

size_t rank_of(const RationalMatrix& a, RrefBackend backend) { return rref(a, backend).rank; }

std::vector<Rational> matrix_vector(const RationalMatrix& a, const std::vector<Rational>& v) {
    if (v.size() != a.cols()) throw UsageError("matrix-vector dimension mismatch");
    std::vector<Rational> out(a.rows());
    for (size_t r = 0; r < a.rows(); ++r)
        for (size_t c = 0; c < a.cols(); ++c)
            if (a.at(r, c) != 0 && v[c] != 0) out[r] += a.at(r, c) * v[c];
    return out;
}

}  // namespace hyperinv
