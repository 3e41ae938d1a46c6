#include "fracext/rational.hpp"

#include "fracext/errors.hpp"

namespace fracext {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw precondition_error("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Rational r;
        if (r.set_str(text, 10) != 0) throw precondition_error("bad rational literal: " + text);
        if (r.get_den() == 0) throw precondition_error("zero denominator: " + text);
        r.canonicalize();
        return r;
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        Rational r;
        if (r.set_str(text, 10) != 0) throw precondition_error("bad rational literal: " + text);
        r.canonicalize();
        return r;
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac_len = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
        throw precondition_error("bad rational literal: " + text);
    Integer num;
    if (num.set_str(digits, 10) != 0) throw precondition_error("bad rational literal: " + text);
    Integer den = 1;
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_decimal_string(const Rational& r, int digits) {
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Rational scaled = r * scale;
    Integer num = scaled.get_num(), den = scaled.get_den();
    Integer q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    rem = abs(rem);
    if (2 * rem >= den) q += (r >= 0 ? 1 : -1);
    bool neg = q < 0;
    Integer qa = abs(q);
    std::string s = qa.get_str();
    if ((int)s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    if (neg) s.insert(0, "-");
    return s;
}

double to_double(const Rational& r) { return r.get_d(); }

Integer floor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace fracext
