#pragma once

#include <string>
#include <vector>

#include "hyperinv/polynomial.hpp"

namespace hyperinv {

enum class GeneratorKind { H, E, F };

/// A Cartan (H), raising (E), or lowering (F) generator acting along one
/// direction of the array. Direction and root index are 1-based:
/// direction in 1..k, root in 1..n_l - 1.
struct Generator {
    GeneratorKind kind = GeneratorKind::H;
    int direction = 1;
    int root = 1;

    /// "E1" for shapes where every dimension is 2 (the root is always 1);
    /// "E(2,1)" in general.
    std::string to_string(const Shape& shape) const;

    bool operator==(const Generator& other) const {
        return kind == other.kind && direction == other.direction && root == other.root;
    }
};

/// Row `root` (1-based) of the (n-1)x(n-1) tridiagonal matrix with 2 on the
/// diagonal and -1 beside it. Raising operators shift weights by this row.
std::vector<long> killing_cartan_row(int n, int root1);

/// Weight reached from `w` by applying E (raised) or F (lowered) with the
/// given direction/root, both 1-based.
WeightVector raised_weight(const Shape& shape, const WeightVector& w, int direction1, int root1);
WeightVector lowered_weight(const Shape& shape, const WeightVector& w, int direction1, int root1);

/// Action of a single generator on a monomial via the derivation rule:
/// H scales by the eigenvalue; E moves one exponent unit from slice root+1
/// to slice root (1-based) with coefficient equal to the moved exponent;
/// F is the mirror image.
Polynomial apply_generator(const Generator& g, const Monomial& m);

/// Linear extension of apply_generator.
Polynomial apply_generator_poly(const Generator& g, const Polynomial& p);

/// All generators (H, E, F for every direction and root) of a shape.
std::vector<Generator> all_generators(const Shape& shape);

/// Matrix of one generator between two weight-space bases.
struct WeightMapMatrix {
    Generator generator;
    MonomialBasis source;
    MonomialBasis target;
    RationalMatrix matrix;  ///< |target| x |source|; column j expands g . source[j]
};

/// The stacked raising map on the zero weight space: one block per raising
/// generator, ordered by ascending direction, then ascending root.
struct RaisingMaps {
    MonomialBasis source;
    std::vector<WeightMapMatrix> blocks;
    RationalMatrix stacked;
};

RaisingMaps raising_matrix(const Shape& shape, long degree);

/// Matrix of F along `direction1` from a weight in the cube {0,2}^3 of a
/// 2x2x2 array to the weight lowered by 2 in that slot.
WeightMapMatrix lowering_matrix(const Shape& shape, long degree, const WeightVector& from_weight,
                                int direction1);

}  // namespace hyperinv
