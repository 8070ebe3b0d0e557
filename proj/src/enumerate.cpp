#include "hyperinv/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hyperinv {

namespace {

/// Required exponent sums per slice, direction by direction, implied by the
/// degree and weight. Empty optional when no monomial can satisfy them.
std::optional<std::vector<std::vector<long>>> slice_targets(const Shape& shape, long degree,
                                                            const WeightVector& weight) {
    std::vector<std::vector<long>> targets;
    for (int l = 0; l < shape.ndims(); ++l) {
        const int n = shape.dims()[l];
        const std::vector<long>& a = weight.components[l];
        // c[j] = a[j] + ... + a[n-2]; slice sums are s[j] = t + c[j] with a
        // common offset t fixed by the degree.
        std::vector<long> c(n, 0);
        for (int j = n - 2; j >= 0; --j) c[j] = c[j + 1] + a[j];
        long total = std::accumulate(c.begin(), c.end(), 0L);
        long num = degree - total;
        if (num % n != 0) return std::nullopt;
        long t = num / n;
        std::vector<long> s(n);
        for (int j = 0; j < n; ++j) {
            s[j] = t + c[j];
            if (s[j] < 0) return std::nullopt;
        }
        targets.push_back(std::move(s));
    }
    return targets;
}

/// Depth-first enumeration over cells in lex order. `emit` receives each
/// complete exponent array, already in ascending lex order.
void dfs_weight_space(const Shape& shape, long degree, const WeightVector& weight,
                      const std::function<void(const std::vector<int>&)>& emit) {
    if (!weight.matches(shape))
        throw UsageError("weight does not match shape " + shape.to_string());
    if (degree < 0) return;
    auto targets = slice_targets(shape, degree, weight);
    if (!targets) return;

    const int k = shape.ndims();
    const long cell_count = shape.total_cells();
    std::vector<std::vector<int>> coords(cell_count);
    for (long r = 0; r < cell_count; ++r) coords[r] = shape.coords_of(r);

    // A cell "closes" slice (l, coords[l]) when every other coordinate is at
    // its maximum: it is then the last cell of that slice in lex order and
    // its value is forced to the slice's remaining budget.
    std::vector<std::vector<int>> closers(cell_count);
    for (long r = 0; r < cell_count; ++r) {
        for (int l = 0; l < k; ++l) {
            bool last = true;
            for (int m = 0; m < k; ++m) {
                if (m != l && coords[r][m] != shape.dims()[m] - 1) {
                    last = false;
                    break;
                }
            }
            if (last) closers[r].push_back(l);
        }
    }

    std::vector<std::vector<long>> rem = *targets;
    std::vector<int> expo(cell_count, 0);

    // Largest total the unassigned cells of slice (l, j) can still absorb.
    auto capacity = [&](int l, int j, long from_rank) {
        long total = 0;
        for (long rr = from_rank; rr < cell_count; ++rr) {
            if (coords[rr][l] != j) continue;
            long cell_max = rem[0][coords[rr][0]];
            for (int m = 1; m < k; ++m) cell_max = std::min(cell_max, rem[m][coords[rr][m]]);
            total += cell_max;
        }
        return total;
    };

    std::function<void(long)> rec = [&](long r) {
        if (r == cell_count) {
            emit(expo);
            return;
        }
        const std::vector<int>& c = coords[r];
        if (!closers[r].empty()) {
            long v = rem[closers[r][0]][c[closers[r][0]]];
            for (int l : closers[r])
                if (rem[l][c[l]] != v) return;
            if (v < 0) return;
            for (int l = 0; l < k; ++l)
                if (rem[l][c[l]] < v) return;
            expo[r] = static_cast<int>(v);
            for (int l = 0; l < k; ++l) rem[l][c[l]] -= v;
            rec(r + 1);
            for (int l = 0; l < k; ++l) rem[l][c[l]] += v;
            expo[r] = 0;
            return;
        }
        long hi = rem[0][c[0]];
        for (int l = 1; l < k; ++l) hi = std::min(hi, rem[l][c[l]]);
        for (long v = 0; v <= hi; ++v) {
            expo[r] = static_cast<int>(v);
            for (int l = 0; l < k; ++l) rem[l][c[l]] -= v;
            bool feasible = true;
            for (int l = 0; l < k; ++l) {
                if (rem[l][c[l]] > capacity(l, c[l], r + 1)) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) rec(r + 1);
            for (int l = 0; l < k; ++l) rem[l][c[l]] += v;
        }
        expo[r] = 0;
    };
    rec(0);
}

}  // namespace

MonomialBasis enumerate_weight_space(const Shape& shape, long degree,
                                     const WeightVector& weight) {
    MonomialBasis basis{shape, degree, weight, {}};
    dfs_weight_space(shape, degree, weight,
                     [&](const std::vector<int>& expo) { basis.exponents.push_back(expo); });
    return basis;
}

MonomialBasis enumerate_eps_arrays(const Shape& shape, long degree) {
    return enumerate_weight_space(shape, degree, WeightVector::zero(shape));
}

Integer count_weight_space(const Shape& shape, long degree, const WeightVector& weight) {
    Integer count = 0;
    dfs_weight_space(shape, degree, weight, [&](const std::vector<int>&) { ++count; });
    return count;
}

}  // namespace hyperinv
