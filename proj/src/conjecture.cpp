#include "hyperinv/conjecture.hpp"

#include <map>

#include "hyperinv/enumerate.hpp"

namespace hyperinv {

long conjectured_degree(const Shape& shape) {
    long prod = 1, sum = 0;
    for (int n : shape.dims()) {
        prod *= n;
        sum += n;
    }
    return prod - sum + shape.ndims() - 1;
}

std::vector<Rational> lagrange_interpolate(
    const std::vector<std::pair<long, Integer>>& points) {
    const size_t n = points.size();
    if (n == 0) throw InsufficientDataError("no points to interpolate");
    std::vector<Rational> coeffs(n, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        // numerator polynomial prod_{j != i} (x - x_j), coefficients ascending
        std::vector<Rational> num = {Rational(1)};
        Rational den(1);
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            if (points[j].first == points[i].first)
                throw UsageError("duplicate interpolation point");
            std::vector<Rational> next(num.size() + 1, Rational(0));
            Rational neg_xj(-points[j].first);
            for (size_t t = 0; t < num.size(); ++t) {
                next[t] += num[t] * neg_xj;
                next[t + 1] += num[t];
            }
            num = std::move(next);
            den *= Rational(points[i].first - points[j].first);
        }
        Rational weight = Rational(points[i].second) / den;
        for (size_t t = 0; t < num.size(); ++t) coeffs[t] += weight * num[t];
    }
    return coeffs;
}

Rational evaluate_polynomial(const std::vector<Rational>& coeffs_ascending, long x) {
    Rational value(0);
    for (size_t i = coeffs_ascending.size(); i-- > 0;) {
        value *= Rational(x);
        value += coeffs_ascending[i];
    }
    return value;
}

ConjectureFit conjecture_fit(const Shape& shape, long max_degree) {
    ConjectureFit fit{shape, max_degree, shape.lcm_degree(), conjectured_degree(shape),
                      0,     false,      false,              {},
                      {}};
    const long n = fit.lcm_degree;
    const long d_pred = fit.conjectured_deg;
    for (long d = 0; d <= max_degree; d += n)
        fit.counts.emplace_back(d, count_weight_space(shape, d, WeightVector::zero(shape)));
    if (fit.counts.size() < 2)
        throw InsufficientDataError("need at least two data points; raise max_degree");

    for (long m = n;; m *= 2) {
        std::map<long, std::vector<std::pair<long, Integer>>> classes;
        for (const auto& pt : fit.counts) classes[pt.first % m].push_back(pt);

        bool enough = true;
        for (const auto& [residue, pts] : classes) {
            if (static_cast<long>(pts.size()) < d_pred + 2) {
                enough = false;
                break;
            }
        }

        if (!enough) {
            // Not enough points per class to fit degree D and still validate:
            // report interpolants through all available points, flagged.
            fit.modulus = m;
            fit.data_sufficient = false;
            fit.all_validated = false;
            for (const auto& [residue, pts] : classes) {
                ResidueInterpolant ri;
                ri.residue = residue;
                ri.points_used = static_cast<long>(pts.size());
                ri.coefficients = lagrange_interpolate(pts);
                ri.validated = false;
                fit.interpolants.push_back(std::move(ri));
            }
            return fit;
        }

        std::vector<ResidueInterpolant> fits;
        bool all_ok = true;
        for (const auto& [residue, pts] : classes) {
            ResidueInterpolant ri;
            ri.residue = residue;
            ri.points_used = d_pred + 1;
            std::vector<std::pair<long, Integer>> head(pts.begin(), pts.begin() + d_pred + 1);
            ri.coefficients = lagrange_interpolate(head);
            ri.validated = true;
            for (size_t i = d_pred + 1; i < pts.size(); ++i) {
                if (evaluate_polynomial(ri.coefficients, pts[i].first) !=
                    Rational(pts[i].second)) {
                    ri.validated = false;
                    break;
                }
            }
            all_ok = all_ok && ri.validated;
            fits.push_back(std::move(ri));
        }
        if (all_ok) {
            fit.modulus = m;
            fit.data_sufficient = true;
            fit.all_validated = true;
            fit.interpolants = std::move(fits);
            return fit;
        }
    }
}

}  // namespace hyperinv
