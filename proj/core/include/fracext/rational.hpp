#pragma once

#include <gmpxx.h>

#include <string>

namespace fracext {

// Exact rational scalar.  All arithmetic in the library is exact; doubles
// appear only in reporting layers and the spectral sanity gate.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// GMP's mpq layer requires canonical operands; every boundary that accepts a
// caller-supplied Rational normalizes through this.
inline Rational canonical(Rational r) {
    r.canonicalize();
    return r;
}

// Parses "a/b" or an exact decimal string such as "0.35078" (converted
// exactly, never through binary floating point).
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

// Decimal expansion with `digits` places, rounded half away from zero.
std::string to_decimal_string(const Rational& r, int digits);

double to_double(const Rational& r);

Integer floor(const Rational& r);
Integer ceil_div(const Integer& a, const Integer& b);

}  // namespace fracext
