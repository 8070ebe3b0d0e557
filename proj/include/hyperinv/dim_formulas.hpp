#pragma once

#include <string>
#include <vector>

#include "hyperinv/monomial.hpp"
#include "hyperinv/rational.hpp"

namespace hyperinv {

/// Weight-space labels for a 2x2x2 array: "000" is the zero weight space,
/// "200" any weight with a single 2 (the three are equal-dimensional by
/// symmetry), "220" two 2s, "222" all three.
extern const std::vector<std::string> kDimFormulaCases;

/// Closed-form dimension of the labeled weight space of degree d for a 2x2x2
/// array. Piecewise in d mod 4; zero for odd d. Throws on unknown labels.
Integer dim_formula(long d, const std::string& case_label);

/// Weight vector of a case label ("200" -> (2,0,0), ...).
WeightVector case_weight(const std::string& case_label);

struct DimCheckRow {
    long d = 0;
    std::string label;
    Integer formula;
    Integer enumerated;
    bool ok = false;
};

struct DimCheckReport {
    std::vector<DimCheckRow> rows;
    bool all_ok = true;
};

/// Compares every case's formula against enumeration for all degrees up to
/// max_d (odd degrees must give zero on both sides).
DimCheckReport dim_formula_check(long max_d);

/// dim 000 - 3 dim 200 + 3 dim 220 - dim 222, from the closed forms.
/// Equals 1 when d is divisible by 4 and 0 for other even d; throws on odd d.
Integer alternating_sum_222(long d);

}  // namespace hyperinv
