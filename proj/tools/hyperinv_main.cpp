#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hyperinv/counting.hpp"
#include "hyperinv/enumerate.hpp"
#include "hyperinv/io.hpp"

namespace {

using namespace hyperinv;

struct CommonArgs {
    std::string shape_text = "2,2,2";
    long degree = -1;
    std::string degree_range;
    std::string weight_text;
    std::string format = "text";
    std::string backend = "gauss";
    bool rref_flag = false;
    bool check = false;
    bool timings = false;
    long column_cap = -1;
    unsigned long seed = kDefaultSeed;
    int trials = 20;
    std::string poly_file;
    std::string poly_out;
    std::string mode = "both";
    long max_degree = -1;
};

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    std::string msg = "unsupported format '" + format + "'; expected one of:";
    for (const char* a : allowed) msg += std::string(" ") + a;
    throw UsageError(msg);
}

RrefBackend parse_backend(const std::string& name) {
    if (name == "gauss") return RrefBackend::GaussJordan;
    if (name == "bareiss") return RrefBackend::Bareiss;
    throw UsageError("unknown backend '" + name + "'; expected gauss or bareiss");
}

size_t resolve_column_cap(long flag_value) {
    if (flag_value >= 0) return static_cast<size_t>(flag_value);
    const char* env = std::getenv("HYPERINV_COLUMN_CAP");
    if (env == nullptr || *env == '\0') return kDefaultColumnCap;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0)
        throw UsageError(std::string("invalid HYPERINV_COLUMN_CAP value: '") + env + "'");
    return static_cast<size_t>(v);
}

/// Degrees requested via --degree / --degree-range ("a..b"). `step` filters
/// the range to every step-th integer starting at its lower end.
std::vector<long> requested_degrees(const CommonArgs& args, long step = 1) {
    if (!args.degree_range.empty()) {
        const auto dots = args.degree_range.find("..");
        if (dots == std::string::npos)
            throw UsageError("bad degree range '" + args.degree_range + "'; expected a..b");
        long lo = 0, hi = 0;
        try {
            lo = std::stol(args.degree_range.substr(0, dots));
            hi = std::stol(args.degree_range.substr(dots + 2));
        } catch (const std::exception&) {
            throw UsageError("bad degree range '" + args.degree_range + "'; expected a..b");
        }
        if (lo < 0 || hi < lo)
            throw UsageError("bad degree range '" + args.degree_range + "'");
        std::vector<long> out;
        for (long d = lo; d <= hi; d += step) out.push_back(d);
        return out;
    }
    if (args.degree < 0) throw UsageError("provide --degree or --degree-range");
    return {args.degree};
}

void emit(const std::string& text) {
    if (!text.empty()) std::cout << text << "\n";
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_basis(const CommonArgs& args) {
    require_format(args.format, {"text", "json"});
    const Shape shape = Shape::parse(args.shape_text);
    if (args.degree < 0) throw UsageError("provide --degree");
    const WeightVector weight = args.weight_text.empty()
                                    ? WeightVector::zero(shape)
                                    : WeightVector::parse(args.weight_text, shape);
    const MonomialBasis basis = enumerate_weight_space(shape, args.degree, weight);
    if (args.format == "json") {
        emit(basis_to_json(basis));
    } else {
        std::string lines;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (i) lines += "\n";
            lines += basis.monomial(i).to_text();
        }
        emit(lines);
    }
    return 0;
}

int run_matrix(const CommonArgs& args) {
    require_format(args.format, {"text", "json", "csv", "paper"});
    const Shape shape = Shape::parse(args.shape_text);
    if (args.degree < 0) throw UsageError("provide --degree");
    const size_t cap = resolve_column_cap(args.column_cap);
    const Integer zero_dim = count_weight_space(shape, args.degree, WeightVector::zero(shape));
    if (zero_dim > static_cast<long>(cap))
        throw ResourceCapError("zero-weight dimension " + to_string(zero_dim) +
                               " exceeds the column cap " + std::to_string(cap));
    const RaisingMaps maps = raising_matrix(shape, args.degree);
    if (args.rref_flag) {
        const RrefResult rr = rref(maps.stacked, parse_backend(args.backend));
        if (args.format == "json")
            emit(rref_to_json(rr));
        else if (args.format == "csv")
            emit(matrix_csv(rr.matrix, {}));
        else if (args.format == "paper")
            emit(rref_paper(rr.matrix));
        else
            emit(matrix_text_plain(rr.matrix));
        return 0;
    }
    if (args.format == "json")
        emit(raising_to_json(maps));
    else if (args.format == "csv")
        emit(raising_csv(maps));
    else if (args.format == "paper")
        emit(raising_paper(maps));
    else
        emit(matrix_text_plain(maps.stacked));
    return 0;
}

int run_invariants(const CommonArgs& args) {
    require_format(args.format, {"text", "json"});
    const Shape shape = Shape::parse(args.shape_text);
    if (args.degree < 0) throw UsageError("provide --degree");
    InvariantOptions options;
    options.column_cap = resolve_column_cap(args.column_cap);
    options.backend = parse_backend(args.backend);
    const InvariantReport report = invariant_basis(shape, args.degree, options);
    if (!args.poly_out.empty()) {
        if (report.invariants.empty())
            throw UsageError("no invariant exists at this degree; nothing to write");
        std::ofstream out(args.poly_out);
        if (!out) throw UsageError("cannot write file: " + args.poly_out);
        out << polynomial_to_json(report.invariants.front()).dump(2) << "\n";
    }
    if (args.format == "json")
        emit(report_to_json(report, args.timings));
    else
        emit(report_text(report));
    return 0;
}

int run_dims(const CommonArgs& args) {
    require_format(args.format, {"text", "json"});
    const Shape shape = Shape::parse(args.shape_text);
    if (shape != Shape({2, 2, 2}))
        throw UsageError("dimension formulas are defined for shape 2,2,2 only");
    const std::vector<long> degrees = requested_degrees(args);

    bool all_ok = true;
    Json rows = Json::array();
    std::string text = "d";
    for (const auto& label : kDimFormulaCases) text += " " + label;
    if (args.check) text += " check";
    for (long d : degrees) {
        Json row = {{"d", d}};
        std::string line = std::to_string(d);
        bool row_ok = true;
        for (const auto& label : kDimFormulaCases) {
            const Integer value = dim_formula(d, label);
            row[label] = to_string(value);
            line += " " + to_string(value);
            if (args.check) {
                const Integer counted = count_weight_space(shape, d, case_weight(label));
                row_ok = row_ok && (counted == value);
                row["enumerated_" + label] = to_string(counted);
            }
        }
        if (args.check) {
            row["ok"] = row_ok;
            line += row_ok ? " ok" : " mismatch";
            all_ok = all_ok && row_ok;
        }
        rows.push_back(std::move(row));
        text += "\n" + line;
    }
    if (args.format == "json") {
        Json j = {{"checked", args.check}, {"rows", std::move(rows)}};
        if (args.check) j["all_ok"] = all_ok;
        emit(j);
    } else {
        emit(text);
    }
    return all_ok ? 0 : 1;
}

int run_altsum(const CommonArgs& args) {
    require_format(args.format, {"text", "json"});
    if (args.degree >= 0 && args.degree % 2 != 0)
        throw UsageError("the alternating sum is defined for even degrees only");
    std::vector<long> degrees = requested_degrees(args, 2);
    degrees.erase(std::remove_if(degrees.begin(), degrees.end(),
                                 [](long d) { return d % 2 != 0; }),
                  degrees.end());
    Json rows = Json::array();
    std::string text;
    for (long d : degrees) {
        const Integer value = alternating_sum_222(d);
        rows.push_back({{"d", d}, {"value", to_string(value)}});
        if (!text.empty()) text += "\n";
        text += std::to_string(d) + " " + to_string(value);
    }
    if (args.format == "json")
        emit(Json{{"rows", std::move(rows)}});
    else
        emit(text);
    return 0;
}

Polynomial read_polynomial_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw UsageError("malformed JSON in " + path + ": " + e.what());
    }
    return polynomial_from_json(j);
}

int run_verify(const CommonArgs& args) {
    require_format(args.format, {"text", "json"});
    if (args.mode != "lie" && args.mode != "group" && args.mode != "both")
        throw UsageError("unknown mode '" + args.mode + "'; expected lie, group, or both");
    const Polynomial p = read_polynomial_file(args.poly_file);

    bool ok = true;
    Json j;
    std::string text;
    if (args.mode != "group") {
        const LieVerification lie = verify_invariance_lie(p);
        ok = ok && lie.invariant;
        Json lj = {{"invariant", lie.invariant}};
        text += std::string("lie: ") + (lie.invariant ? "true" : "false");
        if (lie.witness) {
            lj["witness"] = lie.witness->to_string(p.shape());
            lj["residual"] = polynomial_text(*lie.residual);
            text += "\nlie witness: " + lie.witness->to_string(p.shape());
            text += "\nlie residual: " + polynomial_text(*lie.residual);
        }
        j["lie"] = std::move(lj);
    }
    if (args.mode != "lie") {
        const GroupVerification group = verify_invariance_group(p, args.trials, args.seed);
        ok = ok && group.invariant;
        Json gj = {{"invariant", group.invariant}, {"elements_checked", group.elements_checked}};
        if (!text.empty()) text += "\n";
        text += std::string("group: ") + (group.invariant ? "true" : "false") +
                " (elements_checked " + std::to_string(group.elements_checked) + ")";
        if (!group.witness.empty()) {
            gj["witness"] = group.witness;
            text += "\ngroup witness: " + group.witness;
        }
        j["group"] = std::move(gj);
    }
    j["invariant"] = ok;
    text += std::string("\ninvariant: ") + (ok ? "true" : "false");
    if (args.format == "json")
        emit(j);
    else
        emit(text);
    return ok ? 0 : 1;
}

int run_conjecture(const CommonArgs& args) {
    require_format(args.format, {"text", "json"});
    const Shape shape = Shape::parse(args.shape_text);
    if (args.max_degree < 0) throw UsageError("provide --max-degree");
    const ConjectureFit fit = conjecture_fit(shape, args.max_degree);
    if (args.format == "json")
        emit(conjecture_to_json(fit));
    else
        emit(conjecture_text(fit));
    return 0;
}

int run_subspace_check(const CommonArgs& args) {
    require_format(args.format, {"text", "json"});
    const Shape shape = Shape::parse(args.shape_text);
    if (shape != Shape({2, 2, 2}))
        throw UsageError("the lowering-map cube is defined for shape 2,2,2 only");
    const std::vector<long> degrees = requested_degrees(args);

    auto cube_weight = [&](int a, int b, int c) {
        WeightVector w = WeightVector::zero(shape);
        w.components[0][0] = a;
        w.components[1][0] = b;
        w.components[2][0] = c;
        return w;
    };

    std::vector<CubeCheckRow> rows;
    for (long d : degrees) {
        CubeCheckRow row;
        row.degree = d;

        // Injectivity of all twelve cube edges: every F map out of a weight
        // with a 2 in its direction has full column rank.
        row.injective = true;
        std::vector<WeightVector> vertices;
        for (int a : {0, 2})
            for (int b : {0, 2})
                for (int c : {0, 2}) vertices.push_back(cube_weight(a, b, c));
        for (const auto& w : vertices) {
            for (int dir = 1; dir <= 3; ++dir) {
                if (w.components[dir - 1][0] != 2) continue;
                const WeightMapMatrix f = lowering_matrix(shape, d, w, dir);
                row.injective = row.injective && (rank_of(f.matrix) == f.matrix.cols());
            }
        }

        // Commutativity of all six faces: lowering in two directions agrees
        // in either order.
        row.commutes = true;
        for (int da = 1; da <= 3; ++da) {
            for (int db = da + 1; db <= 3; ++db) {
                for (const auto& w : vertices) {
                    if (w.components[da - 1][0] != 2 || w.components[db - 1][0] != 2) continue;
                    const WeightMapMatrix first_a = lowering_matrix(shape, d, w, da);
                    const WeightMapMatrix then_b =
                        lowering_matrix(shape, d, first_a.target.weight, db);
                    const WeightMapMatrix first_b = lowering_matrix(shape, d, w, db);
                    const WeightMapMatrix then_a =
                        lowering_matrix(shape, d, first_b.target.weight, da);
                    row.commutes = row.commutes &&
                                   (then_b.matrix.multiply(first_a.matrix) ==
                                    then_a.matrix.multiply(first_b.matrix));
                }
            }
        }

        // Inclusion-exclusion over the images of the three bottom maps.
        std::vector<Subspace> images;
        for (int dir = 1; dir <= 3; ++dir) {
            WeightVector w = cube_weight(0, 0, 0);
            w.components[dir - 1][0] = 2;
            images.push_back(Subspace::from_columns(lowering_matrix(shape, d, w, dir).matrix));
            row.image_dims.push_back(images.back().dim());
        }
        const InclusionExclusionResult iec = inclusion_exclusion_check(images);
        row.lhs = iec.lhs;
        row.rhs = iec.rhs;
        row.holds = iec.holds;
        rows.push_back(std::move(row));
    }

    bool all_ok = true;
    std::string text;
    for (const auto& row : rows) {
        all_ok = all_ok && row.holds && row.injective && row.commutes;
        if (!text.empty()) text += "\n";
        text += "degree " + std::to_string(row.degree) + ": lhs " + std::to_string(row.lhs) +
                " rhs " + std::to_string(row.rhs) + " holds " + (row.holds ? "true" : "false") +
                " injective " + (row.injective ? "true" : "false") + " commutes " +
                (row.commutes ? "true" : "false");
    }
    if (args.format == "json")
        emit(cube_check_to_json(rows));
    else
        emit(text);
    return all_ok ? 0 : 1;
}

void add_format(CLI::App* sub, CommonArgs& args) {
    sub->add_option("--format", args.format, "Output format")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact SL-invariants of multidimensional arrays via the weight-space kernel"};
    app.require_subcommand(1);
    CommonArgs args;
    int rc = 0;

    CLI::App* basis = app.add_subcommand("basis", "Enumerate a weight-space monomial basis");
    basis->add_option("--shape", args.shape_text, "Array dimensions, e.g. 2,2,2")
        ->capture_default_str();
    basis->add_option("--degree", args.degree, "Polynomial degree");
    basis->add_option("--weight", args.weight_text,
                      "Weight: groups by ';', integers by ','; scalar form for 2x..x2 shapes "
                      "(default: zero weight)");
    add_format(basis, args);
    basis->callback([&]() { rc = run_basis(args); });

    CLI::App* matrix = app.add_subcommand("matrix", "Stacked raising-operator matrix");
    matrix->add_option("--shape", args.shape_text, "Array dimensions")->capture_default_str();
    matrix->add_option("--degree", args.degree, "Polynomial degree");
    matrix->add_flag("--rref", args.rref_flag, "Print the row canonical form instead");
    matrix->add_option("--backend", args.backend, "Elimination backend: gauss or bareiss")
        ->capture_default_str();
    matrix->add_option("--column-cap", args.column_cap,
                       "Refuse zero-weight dimensions above this cap");
    add_format(matrix, args);
    matrix->callback([&]() { rc = run_matrix(args); });

    CLI::App* invariants =
        app.add_subcommand("invariants", "Invariant polynomial basis at a degree");
    invariants->add_option("--shape", args.shape_text, "Array dimensions")->capture_default_str();
    invariants->add_option("--degree", args.degree, "Polynomial degree");
    invariants->add_option("--backend", args.backend, "Elimination backend: gauss or bareiss")
        ->capture_default_str();
    invariants->add_option("--column-cap", args.column_cap,
                           "Refuse zero-weight dimensions above this cap");
    invariants->add_option("--poly-out", args.poly_out,
                           "Write the first invariant as polynomial JSON to this file");
    invariants->add_flag("--timings", args.timings, "Include stage timings in JSON output");
    add_format(invariants, args);
    invariants->callback([&]() { rc = run_invariants(args); });

    CLI::App* dims = app.add_subcommand("dims", "Closed-form weight-space dimensions (2x2x2)");
    dims->add_option("--shape", args.shape_text, "Array dimensions (must be 2,2,2)")
        ->capture_default_str();
    dims->add_option("--degree", args.degree, "Single degree");
    dims->add_option("--degree-range", args.degree_range, "Inclusive range a..b");
    dims->add_flag("--check", args.check, "Cross-check formulas against enumeration");
    add_format(dims, args);
    dims->callback([&]() { rc = run_dims(args); });

    CLI::App* altsum =
        app.add_subcommand("altsum", "Alternating sum of cube weight-space dimensions (2x2x2)");
    altsum->add_option("--degree", args.degree, "Single even degree");
    altsum->add_option("--degree-range", args.degree_range,
                       "Inclusive range a..b (even degrees)");
    add_format(altsum, args);
    altsum->callback([&]() { rc = run_altsum(args); });

    CLI::App* verify = app.add_subcommand("verify", "Verify a polynomial is invariant");
    verify->add_option("--poly", args.poly_file, "Polynomial JSON file")->required();
    verify->add_option("--mode", args.mode, "lie, group, or both")->capture_default_str();
    verify->add_option("--trials", args.trials, "Random group elements per direction")
        ->capture_default_str();
    verify->add_option("--seed", args.seed, "Seed for the random trials")->capture_default_str();
    add_format(verify, args);
    verify->callback([&]() { rc = run_verify(args); });

    CLI::App* conjecture =
        app.add_subcommand("conjecture", "Fit zero-weight dimension counts by polynomials");
    conjecture->add_option("--shape", args.shape_text, "Array dimensions")->capture_default_str();
    conjecture->add_option("--max-degree", args.max_degree, "Largest degree to count");
    add_format(conjecture, args);
    conjecture->callback([&]() { rc = run_conjecture(args); });

    CLI::App* subspace =
        app.add_subcommand("subspace-check", "Lowering-map cube: injectivity, commutation, "
                                             "inclusion-exclusion (2x2x2)");
    subspace->add_option("--shape", args.shape_text, "Array dimensions (must be 2,2,2)")
        ->capture_default_str();
    subspace->add_option("--degree", args.degree, "Single degree");
    subspace->add_option("--degree-range", args.degree_range, "Inclusive range a..b");
    add_format(subspace, args);
    subspace->callback([&]() { rc = run_subspace_check(args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const hyperinv::ResourceCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const hyperinv::InsufficientDataError& e) {
        std::cerr << "error: insufficient data points: " << e.what() << "\n";
        return 2;
    } catch (const hyperinv::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return rc;
}
