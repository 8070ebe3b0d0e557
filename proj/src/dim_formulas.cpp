#include "hyperinv/dim_formulas.hpp"

#include "hyperinv/enumerate.hpp"

namespace hyperinv {

const std::vector<std::string> kDimFormulaCases = {"000", "200", "220", "222"};

Integer dim_formula(long degree, const std::string& case_label) {
    if (degree < 0) throw UsageError("degree must be non-negative");
    if (degree % 2 == 1) {
        if (case_label != "000" && case_label != "200" && case_label != "220" &&
            case_label != "222")
            throw UsageError("unknown dimension-formula case '" + case_label + "'");
        return 0;
    }
    const Integer d = degree;
    Integer value;
    const bool r0 = (degree % 4 == 0);
    if (case_label == "000") {
        value = r0 ? Integer((d + 4) * (d + 4) * (d * d + 8 * d + 24))
                   : Integer((d + 2) * (d + 6) * (d * d + 8 * d + 28));
    } else if (case_label == "200") {
        value = r0 ? Integer(d * (d + 4) * (d + 4) * (d + 8))
                   : Integer((d + 2) * (d + 6) * (d * d + 8 * d + 4));
    } else if (case_label == "220") {
        value = r0 ? Integer(d * (d + 4) * (d * d + 12 * d + 8))
                   : Integer((d + 2) * (d * d * d + 14 * d * d + 28 * d - 24));
    } else if (case_label == "222") {
        value = r0 ? Integer(d * (d * d * d + 16 * d * d + 32 * d + 32))
                   : Integer((d + 2) * (d * d * d + 14 * d * d + 4 * d + 24));
    } else {
        throw UsageError("unknown dimension-formula case '" + case_label + "'");
    }
    Integer result, rem;
    mpz_tdiv_qr_ui(result.get_mpz_t(), rem.get_mpz_t(), value.get_mpz_t(), 384);
    if (rem != 0) throw std::logic_error("dimension formula not divisible by 384");
    return result;
}

WeightVector case_weight(const std::string& case_label) {
    if (case_label.size() != 3) throw UsageError("unknown case '" + case_label + "'");
    WeightVector w;
    for (char ch : case_label) {
        if (ch != '0' && ch != '2') throw UsageError("unknown case '" + case_label + "'");
        w.components.push_back({ch - '0'});
    }
    return w;
}

DimCheckReport dim_formula_check(long max_d) {
    Shape shape({2, 2, 2});
    DimCheckReport report;
    for (long d = 0; d <= max_d; ++d) {
        for (const std::string& label : kDimFormulaCases) {
            DimCheckRow row;
            row.d = d;
            row.label = label;
            row.formula = dim_formula(d, label);
            row.enumerated = count_weight_space(shape, d, case_weight(label));
            row.ok = (row.formula == row.enumerated);
            report.all_ok = report.all_ok && row.ok;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

Integer alternating_sum_222(long d) {
    if (d % 2 != 0) throw UsageError("alternating sum requires an even degree");
    return dim_formula(d, "000") - 3 * dim_formula(d, "200") + 3 * dim_formula(d, "220") -
           dim_formula(d, "222");
}

}  // namespace hyperinv
