#pragma once

#include <gmpxx.h>

#include <string>

#include "hyperinv/errors.hpp"

namespace hyperinv {

/// Arbitrary-precision integer. All counting results use this type; no
/// overflow regime exists by construction.
using Integer = mpz_class;

/// Exact rational number, always kept canonical: denominator > 0 and
/// gcd(|num|, den) = 1. Arithmetic is closed under +, -, *, /.
using Rational = mpq_class;

/// Build a canonical rational from an integer numerator/denominator pair.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw UsageError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw UsageError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parse "p" or "p/q" (optional leading '-') into a canonical rational.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw UsageError("empty rational literal");
    Rational r;
    if (r.set_str(text, 10) != 0) throw UsageError("bad rational literal: '" + text + "'");
    if (r.get_den() == 0) throw UsageError("rational with zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

/// Render as "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline std::string to_string(const Integer& n) { return n.get_str(); }

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer m;
    mpz_lcm(m.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return m;
}

/// Compare |a| and |b|; negative, zero, positive like strcmp.
inline int abs_compare(const Rational& a, const Rational& b) {
    Rational pa = abs(a), pb = abs(b);
    return cmp(pa, pb);
}

}  // namespace hyperinv
