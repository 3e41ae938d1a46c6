#include "fracext/algebraic.hpp"

#include <sstream>

#include "fracext/errors.hpp"

namespace fracext {

Integer squarefree_part(Integer n, Integer& square_root_out) {
    if (n <= 0) throw precondition_error("squarefree_part: positive argument required");
    Integer sf = 1, sq = 1;
    for (Integer p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) sq *= p;
        if (e % 2) sf *= p;
    }
    sf *= n;
    square_root_out = sq;
    return sf;
}

AlgebraicValue AlgebraicValue::make(const Rational& r_in, const Rational& s_in,
                                    const Rational& d_in) {
    Rational r = canonical(r_in), s = canonical(s_in), d = canonical(d_in);
    if (d < 0) throw precondition_error("negative radicand");
    if (s == 0 || d == 0) return AlgebraicValue(r);
    // sqrt(num/den) = sqrt(num*den)/den
    Integer inner = d.get_num() * d.get_den();
    Integer sqroot;
    Integer sf = squarefree_part(inner, sqroot);
    Rational coeff = s * Rational(sqroot, d.get_den());
    coeff.canonicalize();
    if (sf == 1) return AlgebraicValue(r + coeff);
    AlgebraicValue v;
    v.r_ = r;
    v.s_ = coeff;
    v.d_ = sf;
    return v;
}

AlgebraicValue AlgebraicValue::quadratic_root(const Rational& a_in, const Rational& b_in,
                                              const Rational& c_in, bool plus_branch) {
    Rational a = canonical(a_in), b = canonical(b_in), c = canonical(c_in);
    if (a == 0) throw precondition_error("quadratic_root: leading coefficient is zero");
    Rational disc = b * b - 4 * a * c;
    if (disc < 0) throw precondition_error("quadratic_root: negative discriminant");
    Rational half = Rational(1, 2) / a;
    return make(-b * half, plus_branch ? half : -half, disc);
}

Rational AlgebraicValue::rational_value() const {
    if (!is_rational()) throw precondition_error("value is irrational: " + to_text());
    return r_ + (d_ == 1 ? s_ : Rational(0));
}

bool AlgebraicValue::is_root_of(const Rational& a_in, const Rational& b_in,
                                const Rational& c_in) const {
    Rational a = canonical(a_in), b = canonical(b_in), c = canonical(c_in);
    if (is_rational()) {
        Rational x = rational_value();
        return a * x * x + b * x + c == 0;
    }
    // a(r + s sqrt(D))^2 + b(r + s sqrt(D)) + c splits into rational and
    // sqrt(D) components; both must vanish.
    Rational rat_part = a * (r_ * r_ + s_ * s_ * Rational(d_)) + b * r_ + c;
    Rational surd_part = 2 * a * r_ * s_ + b * s_;
    return rat_part == 0 && surd_part == 0;
}

std::pair<Rational, Rational> AlgebraicValue::bracket(const Rational& width) const {
    if (is_rational()) {
        Rational x = rational_value();
        return {x, x};
    }
    // Integer-sqrt bounds for sqrt(D) at increasing precision.
    Integer scale = 1000;
    while (true) {
        Integer lo_int;
        mpz_sqrt(lo_int.get_mpz_t(), Integer(d_ * scale * scale).get_mpz_t());
        Rational lo_s(lo_int, scale), hi_s(lo_int + 1, scale);
        lo_s.canonicalize();
        hi_s.canonicalize();
        Rational lo, hi;
        if (s_ > 0) {
            lo = r_ + s_ * lo_s;
            hi = r_ + s_ * hi_s;
        } else {
            lo = r_ + s_ * hi_s;
            hi = r_ + s_ * lo_s;
        }
        if (hi - lo <= width) return {lo, hi};
        scale *= scale;
    }
}

int AlgebraicValue::compare(const Rational& other_in) const {
    Rational other = canonical(other_in);
    // sign of (r - other) + s*sqrt(D)
    Rational u = r_ - other;
    if (is_rational()) {
        Rational v = rational_value() - other;
        return v < 0 ? -1 : (v > 0 ? 1 : 0);
    }
    int su = sgn(u), sv = sgn(s_);
    if (su == 0) return sv;
    if (sv == 0) return su;
    if (su == sv) return su;
    // Opposite signs: the larger of |u| and |s|*sqrt(D) decides.
    Rational lhs = u * u, rhs = s_ * s_ * Rational(d_);
    if (lhs == rhs) return 0;
    return lhs > rhs ? su : sv;
}

int AlgebraicValue::compare(const AlgebraicValue& other) const {
    if (other.is_rational()) return compare(other.rational_value());
    if (is_rational()) return -other.compare(rational_value());
    if (d_ == other.d_) {
        // (r1-r2) + (s1-s2) sqrt(D)
        AlgebraicValue diff;
        diff.r_ = r_ - other.r_;
        diff.s_ = s_ - other.s_;
        diff.d_ = d_;
        if (diff.s_ == 0) return sgn(diff.r_);
        return diff.compare(Rational(0));
    }
    // Distinct squarefree radicands: values are never equal; separate by
    // interval refinement.
    Rational width(1, 1024);
    while (true) {
        auto [lo1, hi1] = bracket(width);
        auto [lo2, hi2] = other.bracket(width);
        if (hi1 < lo2) return -1;
        if (hi2 < lo1) return 1;
        width /= 1024;
    }
}

double AlgebraicValue::to_double() const {
    auto [lo, hi] = bracket(Rational(1, Integer("1000000000000")));
    return fracext::to_double((lo + hi) / 2);
}

std::string AlgebraicValue::to_decimal_string(int digits) const {
    Integer prec = 1;
    for (int i = 0; i < digits + 6; ++i) prec *= 10;
    auto [lo, hi] = bracket(Rational(1, prec));
    return fracext::to_decimal_string((lo + hi) / 2, digits);
}

std::string AlgebraicValue::to_text() const {
    if (is_rational()) return rational_value().get_str();
    std::ostringstream os;
    os << r_.get_str() << " + " << s_.get_str() << "*sqrt(" << d_.get_str() << ")";
    return os.str();
}

}  // namespace fracext
