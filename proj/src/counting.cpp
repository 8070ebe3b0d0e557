#include "hyperinv/counting.hpp"

#include <algorithm>

namespace hyperinv {

Integer count_contingency_2x2(const Integer& r0, const Integer& r1, const Integer& c0,
                              const Integer& c1) {
    if (r0 < 0 || r1 < 0 || c0 < 0 || c1 < 0)
        throw MarginError("contingency margins must be non-negative");
    if (r0 + r1 != c0 + c1)
        throw MarginError("row margins " + to_string(Integer(r0 + r1)) + " and column margins " +
                          to_string(Integer(c0 + c1)) + " differ");
    Integer m = std::min(std::min(r0, r1), std::min(c0, c1));
    return m + 1;
}

Integer sum_min_square(long k) {
    if (k < 1) throw UsageError("sum_min_square requires k >= 1");
    Integer n = k;
    Integer value = n * (n + 1) * (n * n + n + 1);
    Integer result;
    mpz_divexact_ui(result.get_mpz_t(), value.get_mpz_t(), 6);
    return result;
}

std::vector<long> admissible_degrees(const Shape& shape, long max_degree) {
    std::vector<long> out;
    const long n = shape.lcm_degree();
    for (long d = n; d <= max_degree; d += n) out.push_back(d);
    return out;
}

}  // namespace hyperinv
