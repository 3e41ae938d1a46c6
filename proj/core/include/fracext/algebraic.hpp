#pragma once

#include <string>
#include <utility>

#include "fracext/rational.hpp"

namespace fracext {

// Exact value of the form r + s*sqrt(D) with rational r, s and squarefree
// integer D >= 1.  D == 1 (or s == 0) means the value is rational.  Every
// threshold and closed form in the library is a value of this shape, so
// comparisons and root checks stay exact; no floating point is involved.
class AlgebraicValue {
  public:
    AlgebraicValue() = default;
    AlgebraicValue(Rational r) : r_(canonical(std::move(r))) {}

    // r + s*sqrt(d) for any rational d >= 0 (d is normalized to a squarefree
    // integer radicand; collapses to a rational when d is a perfect square).
    static AlgebraicValue make(const Rational& r, const Rational& s, const Rational& d);

    // Larger (plus) or smaller root of a*x^2 + b*x + c, a != 0.
    static AlgebraicValue quadratic_root(const Rational& a, const Rational& b, const Rational& c,
                                         bool plus_branch);

    bool is_rational() const { return s_ == 0 || d_ == 1; }
    Rational rational_value() const;
    const Rational& rational_part() const { return r_; }
    const Rational& surd_coefficient() const { return s_; }
    const Integer& radicand() const { return d_; }

    // Exact test that a*x^2 + b*x + c vanishes at this value.
    bool is_root_of(const Rational& a, const Rational& b, const Rational& c) const;

    // Rational bracket [lo, hi] containing the value, hi - lo <= width.
    std::pair<Rational, Rational> bracket(const Rational& width) const;

    int compare(const Rational& other) const;
    int compare(const AlgebraicValue& other) const;
    friend bool operator==(const AlgebraicValue& a, const AlgebraicValue& b) {
        return a.compare(b) == 0;
    }
    friend bool operator<(const AlgebraicValue& a, const AlgebraicValue& b) {
        return a.compare(b) < 0;
    }

    double to_double() const;
    std::string to_decimal_string(int digits) const;
    std::string to_text() const;  // exact form, e.g. "(-5 + sqrt(29))/4"

  private:
    Rational r_ = 0;
    Rational s_ = 0;
    Integer d_ = 1;
};

// Largest square-free divisor decomposition: n = square * squarefree.
Integer squarefree_part(Integer n, Integer& square_root_out);

}  // namespace fracext
