#include <doctest.h>

#include "fracext/algebraic.hpp"
#include "fracext/errors.hpp"

using namespace fracext;

TEST_CASE("rational collapse of perfect-square discriminants") {
    // x^2 + (3/2)x - 1 has root 1/2: discriminant 25/4
    AlgebraicValue v = AlgebraicValue::quadratic_root(1, Rational(3, 2), -1, true);
    CHECK(v.is_rational());
    CHECK(v.rational_value() == Rational(1, 2));
}

TEST_CASE("surd representation and root check") {
    // golden-ratio-like root of x^2 + x - 1
    AlgebraicValue v = AlgebraicValue::quadratic_root(1, 1, -1, true);
    CHECK_FALSE(v.is_rational());
    CHECK(v.is_root_of(1, 1, -1));
    CHECK_FALSE(v.is_root_of(1, 1, 1));
    CHECK(v.compare(Rational(0)) > 0);
    CHECK(v.compare(Rational(1)) < 0);
    auto [lo, hi] = v.bracket(Rational(1, 1'000'000));
    CHECK(hi - lo <= Rational(1, 1'000'000));
    CHECK(v.compare(lo) >= 0);
    CHECK(v.compare(hi) <= 0);
    // 0.61803...
    CHECK(v.to_decimal_string(5) == "0.61803");
}

TEST_CASE("comparisons across radicands") {
    AlgebraicValue sqrt2 = AlgebraicValue::make(0, 1, 2);
    AlgebraicValue sqrt3 = AlgebraicValue::make(0, 1, 3);
    CHECK(sqrt2.compare(sqrt3) < 0);
    CHECK(sqrt3.compare(sqrt2) > 0);
    CHECK(sqrt2.compare(sqrt2) == 0);
    // sqrt(8) normalizes to 2 sqrt(2)
    AlgebraicValue sqrt8 = AlgebraicValue::make(0, 1, 8);
    CHECK(sqrt8.radicand() == 2);
    CHECK(sqrt8.surd_coefficient() == 2);
    AlgebraicValue two_sqrt2 = AlgebraicValue::make(0, 2, 2);
    CHECK(sqrt8 == two_sqrt2);
    // negative branch ordering
    AlgebraicValue neg = AlgebraicValue::make(1, -1, 2);  // 1 - sqrt(2) < 0
    CHECK(neg.compare(Rational(0)) < 0);
}

TEST_CASE("squarefree part") {
    Integer root;
    CHECK(squarefree_part(12, root) == 3);
    CHECK(root == 2);
    CHECK(squarefree_part(49, root) == 1);
    CHECK(root == 7);
    CHECK(squarefree_part(1, root) == 1);
}
