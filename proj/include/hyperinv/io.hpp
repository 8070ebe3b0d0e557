#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "hyperinv/conjecture.hpp"
#include "hyperinv/dim_formulas.hpp"
#include "hyperinv/invariants.hpp"
#include "hyperinv/lie_action.hpp"
#include "hyperinv/polynomial.hpp"
#include "hyperinv/subspace.hpp"

namespace hyperinv {

using Json = nlohmann::json;

/// Name of the indeterminate at a cell. A 2x2x2 array uses 0-based digit
/// subscripts ("x000".."x111"); every other shape uses 1-based subscripts,
/// as digits when all dimensions are single-digit ("x11".."x23") and as a
/// bracketed index list ("x[1,10]") otherwise.
std::string variable_name(const Shape& shape, long cell_rank);

/// "x000^2*x111^2" — factors in ascending cell order, '*' between them.
std::string monomial_text(const Shape& shape, const std::vector<int>& exponents);

/// Display form that groups terms by coefficient: groups ordered by ascending
/// |coefficient| (positive before negative on ties), terms inside a group in
/// descending canonical order, multi-term groups parenthesized:
///   a^2… + … - 2*(…) + 4*(…)
std::string polynomial_text(const Polynomial& p);

/// { "shape": [...], "terms": [ { "exponents": [...], "coeff": "str" } ] },
/// terms ascending in canonical monomial order.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json basis_to_json(const MonomialBasis& basis);

/// Matrix renderings shared by the raising maps and their row canonical
/// forms. `paper` style uses '.' for zero entries and right-aligns columns.
std::string matrix_text_plain(const RationalMatrix& m);
std::string matrix_csv(const RationalMatrix& m, const std::vector<std::string>& column_labels);

/// Labeled block grid: each row is "<label>  <entries>"; generator blocks are
/// separated by a dashed line. Zero entries render as '.'.
std::string raising_paper(const RaisingMaps& maps);
std::string raising_csv(const RaisingMaps& maps);
Json raising_to_json(const RaisingMaps& maps);

/// Row canonical form in display style: '.' zeros, right-aligned columns,
/// zero rows omitted, no labels.
std::string rref_paper(const RationalMatrix& r);
Json rref_to_json(const RrefResult& rr);

Json report_to_json(const InvariantReport& report, bool include_timings);
std::string report_text(const InvariantReport& report);

Json dim_check_to_json(const DimCheckReport& report);

Json conjecture_to_json(const ConjectureFit& fit);
std::string conjecture_text(const ConjectureFit& fit);

/// Result of the lowering-map diagram check run by the CLI for one degree.
struct CubeCheckRow {
    long degree = 0;
    long lhs = 0;
    long rhs = 0;
    bool holds = false;
    bool injective = false;  ///< all lowering maps into the zero weight space
    bool commutes = false;   ///< both orders of descending the cube agree
    std::vector<size_t> image_dims;
};

Json cube_check_to_json(const std::vector<CubeCheckRow>& rows);

}  // namespace hyperinv
