#include "hyperinv/io.hpp"

#include <algorithm>
#include <sstream>

namespace hyperinv {

namespace {

bool all_single_digit(const Shape& shape) {
    for (int n : shape.dims())
        if (n > 9) return false;
    return true;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

/// Right-align each column of a token grid to its widest entry and join the
/// tokens of every row with single spaces.
std::vector<std::string> align_rows(const std::vector<std::vector<std::string>>& grid) {
    std::vector<size_t> widths;
    for (const auto& row : grid) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    std::vector<std::string> lines;
    lines.reserve(grid.size());
    for (const auto& row : grid) {
        std::string line;
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) line += ' ';
            line += std::string(widths[c] - row[c].size(), ' ') + row[c];
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

std::string entry_token(const Rational& value) {
    return sgn(value) == 0 ? "." : to_string(value);
}

std::vector<std::string> basis_texts(const MonomialBasis& basis) {
    std::vector<std::string> out;
    out.reserve(basis.size());
    for (const auto& expo : basis.exponents) out.push_back(Monomial(basis.shape, expo).to_text());
    return out;
}

Json weight_json(const WeightVector& w) { return w.to_string(); }

}  // namespace

std::string variable_name(const Shape& shape, long cell_rank) {
    const std::vector<int> coords = shape.coords_of(cell_rank);
    const bool cube_labels = shape.dims() == std::vector<int>{2, 2, 2};
    if (cube_labels || all_single_digit(shape)) {
        std::string name = "x";
        for (int c : coords) name += static_cast<char>('0' + c + (cube_labels ? 0 : 1));
        return name;
    }
    std::vector<std::string> parts;
    for (int c : coords) parts.push_back(std::to_string(c + 1));
    return "x[" + join(parts, ",") + "]";
}

std::string monomial_text(const Shape& shape, const std::vector<int>& exponents) {
    std::vector<std::string> factors;
    for (size_t cell = 0; cell < exponents.size(); ++cell) {
        const int e = exponents[cell];
        if (e == 0) continue;
        std::string f = variable_name(shape, static_cast<long>(cell));
        if (e > 1) f += "^" + std::to_string(e);
        factors.push_back(std::move(f));
    }
    if (factors.empty()) return "1";
    return join(factors, "*");
}

std::string polynomial_text(const Polynomial& p) {
    if (p.is_zero()) return "0";

    // Bucket the terms by coefficient value, keeping each bucket's monomials
    // in descending canonical order.
    std::vector<std::pair<Rational, std::vector<std::string>>> groups;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        auto found = std::find_if(groups.begin(), groups.end(),
                                  [&](const auto& g) { return g.first == it->second; });
        if (found == groups.end()) {
            groups.push_back({it->second, {monomial_text(p.shape(), it->first)}});
        } else {
            found->second.push_back(monomial_text(p.shape(), it->first));
        }
    }
    std::stable_sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
        const int c = abs_compare(a.first, b.first);
        if (c != 0) return c < 0;
        return sgn(a.first) > sgn(b.first);
    });

    std::string out;
    for (size_t g = 0; g < groups.size(); ++g) {
        const Rational& coeff = groups[g].first;
        const auto& monos = groups[g].second;
        const bool negative = sgn(coeff) < 0;
        if (g == 0) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = abs(coeff);
        std::string body = join(monos, " + ");
        if (mag == 1) {
            if (monos.size() > 1 && negative) body = "(" + body + ")";
        } else if (monos.size() == 1 && monos[0] == "1") {
            body = to_string(mag);  // a lone constant reads "3", not "3*1"
        } else {
            body = to_string(mag) + "*" + (monos.size() > 1 ? "(" + body + ")" : body);
        }
        out += body;
    }
    return out;
}

Json polynomial_to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [expo, coeff] : p.terms())
        terms.push_back({{"exponents", expo}, {"coeff", to_string(coeff)}});
    return {{"shape", p.shape().dims()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const Json& j) {
    try {
        Shape shape(j.at("shape").get<std::vector<int>>());
        Polynomial p(shape);
        for (const auto& term : j.at("terms")) {
            auto expo = term.at("exponents").get<std::vector<int>>();
            p.add_term(expo, parse_rational(term.at("coeff").get<std::string>()));
        }
        return p;
    } catch (const Json::exception& e) {
        throw UsageError(std::string("malformed polynomial JSON: ") + e.what());
    }
}

Json basis_to_json(const MonomialBasis& basis) {
    return {{"shape", basis.shape.dims()},
            {"degree", basis.degree},
            {"weight", weight_json(basis.weight)},
            {"count", basis.size()},
            {"monomials", basis_texts(basis)}};
}

std::string matrix_text_plain(const RationalMatrix& m) {
    std::vector<std::vector<std::string>> grid(m.rows(), std::vector<std::string>(m.cols()));
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) grid[r][c] = to_string(m.at(r, c));
    return join(align_rows(grid), "\n");
}

std::string matrix_csv(const RationalMatrix& m, const std::vector<std::string>& column_labels) {
    std::vector<std::string> lines;
    if (!column_labels.empty()) lines.push_back(join(column_labels, ","));
    for (size_t r = 0; r < m.rows(); ++r) {
        std::vector<std::string> cells;
        cells.reserve(m.cols());
        for (size_t c = 0; c < m.cols(); ++c) cells.push_back(to_string(m.at(r, c)));
        lines.push_back(join(cells, ","));
    }
    return join(lines, "\n");
}

std::string raising_paper(const RaisingMaps& maps) {
    // Gather every row's label and entry tokens first so the columns align
    // across all blocks, then insert the block separators.
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> labels;
    std::vector<size_t> block_ends;
    for (const auto& block : maps.blocks) {
        for (size_t r = 0; r < block.matrix.rows(); ++r) {
            labels.push_back(Monomial(block.target.shape, block.target.exponents[r]).to_text());
            std::vector<std::string> row;
            row.reserve(block.matrix.cols());
            for (size_t c = 0; c < block.matrix.cols(); ++c)
                row.push_back(entry_token(block.matrix.at(r, c)));
            grid.push_back(std::move(row));
        }
        block_ends.push_back(labels.size());
    }
    size_t label_width = 0;
    for (const auto& l : labels) label_width = std::max(label_width, l.size());
    const std::vector<std::string> aligned = align_rows(grid);
    size_t grid_width = 0;
    for (const auto& line : aligned) grid_width = std::max(grid_width, line.size());

    std::vector<std::string> lines;
    size_t next_block = 0;
    for (size_t r = 0; r < aligned.size(); ++r) {
        if (next_block < block_ends.size() && r == block_ends[next_block] && r > 0) {
            lines.push_back(std::string(label_width + 2 + grid_width, '-'));
            ++next_block;
        }
        std::string label = labels[r];
        label += std::string(label_width - label.size(), ' ');
        lines.push_back(label + "  " + aligned[r]);
    }
    return join(lines, "\n");
}

std::string raising_csv(const RaisingMaps& maps) {
    std::vector<std::string> header;
    for (const auto& expo : maps.source.exponents)
        header.push_back(Monomial(maps.source.shape, expo).to_text());
    return matrix_csv(maps.stacked, header);
}

Json raising_to_json(const RaisingMaps& maps) {
    Json blocks = Json::array();
    for (const auto& block : maps.blocks) {
        blocks.push_back({{"generator", block.generator.to_string(maps.source.shape)},
                          {"weight", weight_json(block.target.weight)},
                          {"rows", block.matrix.rows()},
                          {"monomials", basis_texts(block.target)}});
    }
    Json entries = Json::array();
    for (size_t r = 0; r < maps.stacked.rows(); ++r) {
        Json row = Json::array();
        for (size_t c = 0; c < maps.stacked.cols(); ++c) {
            const Rational& v = maps.stacked.at(r, c);
            row.push_back(static_cast<long>(mpz_get_si(v.get_num().get_mpz_t())));
        }
        entries.push_back(std::move(row));
    }
    return {{"shape", maps.source.shape.dims()},
            {"degree", maps.source.degree},
            {"rows", maps.stacked.rows()},
            {"cols", maps.stacked.cols()},
            {"columns", basis_texts(maps.source)},
            {"blocks", std::move(blocks)},
            {"entries", std::move(entries)}};
}

std::string rref_paper(const RationalMatrix& r) {
    std::vector<std::vector<std::string>> grid;
    for (size_t i = 0; i < r.rows(); ++i) {
        bool zero_row = true;
        std::vector<std::string> row;
        row.reserve(r.cols());
        for (size_t c = 0; c < r.cols(); ++c) {
            if (sgn(r.at(i, c)) != 0) zero_row = false;
            row.push_back(entry_token(r.at(i, c)));
        }
        if (!zero_row) grid.push_back(std::move(row));
    }
    return join(align_rows(grid), "\n");
}

Json rref_to_json(const RrefResult& rr) {
    Json entries = Json::array();
    for (size_t r = 0; r < rr.matrix.rows(); ++r) {
        Json row = Json::array();
        for (size_t c = 0; c < rr.matrix.cols(); ++c) row.push_back(to_string(rr.matrix.at(r, c)));
        entries.push_back(std::move(row));
    }
    return {{"rows", rr.matrix.rows()},
            {"cols", rr.matrix.cols()},
            {"rank", rr.rank},
            {"pivot_columns", rr.pivot_columns},
            {"entries", std::move(entries)}};
}

Json report_to_json(const InvariantReport& report, bool include_timings) {
    Json invariants = Json::array();
    for (const auto& p : report.invariants) invariants.push_back(polynomial_to_json(p));
    Json j = {{"shape", report.shape.dims()},
              {"degree", report.degree},
              {"zero_weight_dim", report.zero_weight_dim},
              {"matrix_rows", report.matrix_rows},
              {"matrix_cols", report.matrix_cols},
              {"rank", report.rank},
              {"kernel_dim", report.kernel_dim},
              {"invariants", std::move(invariants)}};
    if (include_timings) j["timings_seconds"] = report.timings_seconds;
    return j;
}

std::string report_text(const InvariantReport& report) {
    std::ostringstream out;
    out << "shape: " << report.shape.to_string() << "\n";
    out << "degree: " << report.degree << "\n";
    out << "zero_weight_dim: " << report.zero_weight_dim << "\n";
    out << "matrix_rows: " << report.matrix_rows << "\n";
    out << "matrix_cols: " << report.matrix_cols << "\n";
    out << "rank: " << report.rank << "\n";
    out << "kernel_dim: " << report.kernel_dim << "\n";
    out << "invariants:";
    for (const auto& p : report.invariants) out << "\n" << polynomial_text(p);
    return out.str();
}

Json dim_check_to_json(const DimCheckReport& report) {
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        rows.push_back({{"d", row.d},
                        {"label", row.label},
                        {"formula", to_string(row.formula)},
                        {"enumerated", to_string(row.enumerated)},
                        {"ok", row.ok}});
    }
    return {{"all_ok", report.all_ok}, {"rows", std::move(rows)}};
}

Json conjecture_to_json(const ConjectureFit& fit) {
    Json counts = Json::array();
    for (const auto& [d, n] : fit.counts) counts.push_back({d, to_string(n)});
    Json interpolants = Json::array();
    for (const auto& ri : fit.interpolants) {
        std::vector<std::string> coeffs;
        for (const auto& c : ri.coefficients) coeffs.push_back(to_string(c));
        interpolants.push_back({{"residue", ri.residue},
                                {"degree", ri.coefficients.empty()
                                               ? 0
                                               : static_cast<long>(ri.coefficients.size()) - 1},
                                {"points_used", ri.points_used},
                                {"validated", ri.validated},
                                {"coefficients", std::move(coeffs)}});
    }
    return {{"shape", fit.shape.dims()},
            {"max_degree", fit.max_degree},
            {"lcm_degree", fit.lcm_degree},
            {"conjectured_degree", fit.conjectured_deg},
            {"modulus", fit.modulus},
            {"data_sufficient", fit.data_sufficient},
            {"all_validated", fit.all_validated},
            {"counts", std::move(counts)},
            {"interpolants", std::move(interpolants)}};
}

std::string conjecture_text(const ConjectureFit& fit) {
    std::ostringstream out;
    out << "shape: " << fit.shape.to_string() << "\n";
    out << "max_degree: " << fit.max_degree << "\n";
    out << "lcm_degree: " << fit.lcm_degree << "\n";
    out << "conjectured_degree: " << fit.conjectured_deg << "\n";
    out << "modulus: " << fit.modulus << "\n";
    out << "data_sufficient: " << (fit.data_sufficient ? "true" : "false") << "\n";
    out << "all_validated: " << (fit.all_validated ? "true" : "false");
    for (const auto& ri : fit.interpolants) {
        std::vector<std::string> coeffs;
        for (const auto& c : ri.coefficients) coeffs.push_back(to_string(c));
        out << "\nresidue " << ri.residue << " mod " << fit.modulus << ": coefficients "
            << join(coeffs, ", ") << " (points " << ri.points_used << ", validated "
            << (ri.validated ? "true" : "false") << ")";
    }
    return out.str();
}

Json cube_check_to_json(const std::vector<CubeCheckRow>& rows) {
    bool all_hold = true;
    Json out_rows = Json::array();
    for (const auto& row : rows) {
        all_hold = all_hold && row.holds && row.injective && row.commutes;
        out_rows.push_back({{"degree", row.degree},
                            {"lhs", row.lhs},
                            {"rhs", row.rhs},
                            {"holds", row.holds},
                            {"injective", row.injective},
                            {"commutes", row.commutes},
                            {"image_dims", row.image_dims}});
    }
    return {{"all_hold", all_hold}, {"rows", std::move(out_rows)}};
}

}  // namespace hyperinv
