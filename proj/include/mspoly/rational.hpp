#pragma once

#include <gmpxx.h>

#include <string>

#include "mspoly/errors.hpp"

namespace mspoly {

// Exact arbitrary-precision rational scalar. mpq_class keeps values in
// canonical form (positive denominator, reduced) as long as every entry
// point canonicalizes, which the helpers below do.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw ZeroDenominator("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const Integer& num, const Integer& den = 1) {
    if (den == 0) throw ZeroDenominator("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "7", "-3/4", "0".
inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
    if (q.get_den() == 0) throw ZeroDenominator("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

// q^e for integer e; negative e inverts (ZeroDenominator on 0).
inline Rational rational_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert && q == 0) throw ZeroDenominator("negative power of zero");
    Rational base = invert ? Rational(1) / q : q;
    Rational out(1);
    while (k) {
        if (k & 1) out *= base;
        base *= base;
        k >>= 1;
    }
    return out;
}

inline bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

} // namespace mspoly
