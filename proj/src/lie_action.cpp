#include "hyperinv/lie_action.hpp"

#include <algorithm>

#include "hyperinv/enumerate.hpp"

namespace hyperinv {

namespace {

void validate_generator(const Generator& g, const Shape& shape) {
    if (g.direction < 1 || g.direction > shape.ndims())
        throw UsageError("generator direction out of range");
    int n = shape.dims()[g.direction - 1];
    if (g.root < 1 || g.root > n - 1) throw UsageError("generator root index out of range");
}

char kind_letter(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::H: return 'H';
        case GeneratorKind::E: return 'E';
        case GeneratorKind::F: return 'F';
    }
    return '?';
}

}  // namespace

std::string Generator::to_string(const Shape& shape) const {
    bool all_two = std::all_of(shape.dims().begin(), shape.dims().end(),
                               [](int n) { return n == 2; });
    std::string out(1, kind_letter(kind));
    if (all_two) {
        out += std::to_string(direction);
    } else {
        out += "(" + std::to_string(direction) + "," + std::to_string(root) + ")";
    }
    return out;
}

std::vector<long> killing_cartan_row(int n, int root1) {
    if (root1 < 1 || root1 > n - 1) throw UsageError("root index out of range");
    std::vector<long> row(n - 1, 0);
    int i = root1 - 1;
    row[i] = 2;
    if (i - 1 >= 0) row[i - 1] = -1;
    if (i + 1 <= n - 2) row[i + 1] = -1;
    return row;
}

WeightVector raised_weight(const Shape& shape, const WeightVector& w, int direction1, int root1) {
    if (!w.matches(shape)) throw UsageError("weight does not match shape");
    WeightVector out = w;
    std::vector<long> row = killing_cartan_row(shape.dims()[direction1 - 1], root1);
    for (size_t i = 0; i < row.size(); ++i) out.components[direction1 - 1][i] += row[i];
    return out;
}

WeightVector lowered_weight(const Shape& shape, const WeightVector& w, int direction1, int root1) {
    if (!w.matches(shape)) throw UsageError("weight does not match shape");
    WeightVector out = w;
    std::vector<long> row = killing_cartan_row(shape.dims()[direction1 - 1], root1);
    for (size_t i = 0; i < row.size(); ++i) out.components[direction1 - 1][i] -= row[i];
    return out;
}

Polynomial apply_generator(const Generator& g, const Monomial& m) {
    const Shape& shape = m.shape();
    validate_generator(g, shape);
    const int l = g.direction - 1;
    const long stride = shape.stride(l);
    const int n = shape.dims()[l];
    Polynomial out(shape);

    if (g.kind == GeneratorKind::H) {
        WeightVector w = weight_of(m);
        long eigen = w.components[l][g.root - 1];
        if (eigen != 0) out.add_term(m.exponents(), Rational(eigen));
        return out;
    }

    // E moves an exponent unit from 0-based slice `root` to `root - 1`;
    // F from `root - 1` to `root`. Coefficient = exponent of the source cell.
    const int src_coord = (g.kind == GeneratorKind::E) ? g.root : g.root - 1;
    const long delta = (g.kind == GeneratorKind::E) ? -stride : stride;
    std::vector<int> expo = m.exponents();
    for (long r = 0; r < shape.total_cells(); ++r) {
        if (static_cast<int>((r / stride) % n) != src_coord) continue;
        int e = expo[r];
        if (e == 0) continue;
        expo[r] -= 1;
        expo[r + delta] += 1;
        out.add_term(expo, Rational(e));
        expo[r + delta] -= 1;
        expo[r] += 1;
    }
    return out;
}

Polynomial apply_generator_poly(const Generator& g, const Polynomial& p) {
    Polynomial out(p.shape());
    for (const auto& [expo, coeff] : p.terms()) {
        Polynomial part = apply_generator(g, Monomial(p.shape(), expo));
        out = out + part.scaled(coeff);
    }
    return out;
}

std::vector<Generator> all_generators(const Shape& shape) {
    std::vector<Generator> out;
    for (GeneratorKind kind : {GeneratorKind::H, GeneratorKind::E, GeneratorKind::F}) {
        for (int l = 1; l <= shape.ndims(); ++l) {
            for (int i = 1; i <= shape.dims()[l - 1] - 1; ++i) {
                out.push_back(Generator{kind, l, i});
            }
        }
    }
    return out;
}

namespace {

/// Matrix of one generator from an explicit source basis to the basis of the
/// reached weight space.
WeightMapMatrix weight_map(const Shape& shape, long degree, const Generator& g,
                           const MonomialBasis& source) {
    WeightVector target_weight =
        (g.kind == GeneratorKind::E)
            ? raised_weight(shape, source.weight, g.direction, g.root)
            : lowered_weight(shape, source.weight, g.direction, g.root);
    MonomialBasis target = enumerate_weight_space(shape, degree, target_weight);
    RationalMatrix matrix(target.size(), source.size());
    for (size_t j = 0; j < source.size(); ++j) {
        Polynomial image = apply_generator(g, source.monomial(j));
        for (const auto& [expo, coeff] : image.terms()) {
            auto row = target.index_of(expo);
            if (!row) throw std::logic_error("generator image misses target weight space");
            matrix.at(*row, j) = coeff;
        }
    }
    return WeightMapMatrix{g, source, std::move(target), std::move(matrix)};
}

}  // namespace

RaisingMaps raising_matrix(const Shape& shape, long degree) {
    RaisingMaps maps{enumerate_weight_space(shape, degree, WeightVector::zero(shape)), {}, {}};
    size_t total_rows = 0;
    for (int l = 1; l <= shape.ndims(); ++l) {
        for (int i = 1; i <= shape.dims()[l - 1] - 1; ++i) {
            Generator g{GeneratorKind::E, l, i};
            maps.blocks.push_back(weight_map(shape, degree, g, maps.source));
            total_rows += maps.blocks.back().target.size();
        }
    }
    RationalMatrix stacked(total_rows, maps.source.size());
    size_t row0 = 0;
    for (const WeightMapMatrix& block : maps.blocks) {
        for (size_t r = 0; r < block.matrix.rows(); ++r)
            for (size_t c = 0; c < block.matrix.cols(); ++c)
                stacked.at(row0 + r, c) = block.matrix.at(r, c);
        row0 += block.matrix.rows();
    }
    maps.stacked = std::move(stacked);
    return maps;
}

WeightMapMatrix lowering_matrix(const Shape& shape, long degree, const WeightVector& from_weight,
                                int direction1) {
    if (shape.dims() != std::vector<int>{2, 2, 2})
        throw UsageError("lowering_matrix is defined for shape 2,2,2");
    if (!from_weight.matches(shape)) throw UsageError("weight does not match shape");
    for (const auto& comp : from_weight.components)
        if (comp[0] != 0 && comp[0] != 2)
            throw UsageError("weight must lie in the cube {0,2}^3");
    if (direction1 < 1 || direction1 > 3 || from_weight.components[direction1 - 1][0] != 2)
        throw UsageError("invalid weight pair: direction component must be 2");
    Generator g{GeneratorKind::F, direction1, 1};
    MonomialBasis source = enumerate_weight_space(shape, degree, from_weight);
    return weight_map(shape, degree, g, source);
}

}  // namespace hyperinv
