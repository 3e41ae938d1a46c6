#include <doctest.h>

#include "fracext/closed_forms.hpp"
#include "fracext/errors.hpp"

using namespace fracext;

TEST_CASE("base formula") {
    CHECK(g_base(2, 3).value.rational_value() == 1);
    CHECK(g_base(7, 3).value.rational_value() == 1);  // d=3 for any k >= 2
    CHECK(g_base(3, 5).value.rational_value() == Rational(2, 3));  // (k-1)/(d'k)
    // (3,8): positive root of 2e^2 + 5e - 2
    GValue g38 = g_base(3, 8);
    CHECK(g38.value.is_root_of(2, 5, -2));
    CHECK(g38.value.to_decimal_string(5) == "0.35078");
    CHECK(g38.provenance == Provenance::proved);
    CHECK_THROWS_AS(g_base(Rational(5, 2), 4), precondition_error);
}

TEST_CASE("new exact values") {
    CHECK(g_new(Rational(5, 2), 4).value.rational_value() == Rational(1, 2));
    GValue g256 = g_new(Rational(5, 2), 6);
    CHECK(g256.value.is_root_of(1, Rational(5, 2), -1));
    CHECK(g256.value.compare(Rational(35, 100)) > 0);
    CHECK(g256.value.compare(Rational(3508, 10000)) < 0);
    GValue g24 = g_new(2, 4);
    CHECK(g24.value.is_root_of(1, 1, -1));  // (sqrt(5)-1)/2
    CHECK_THROWS_AS(g_new(Rational(9, 4), 6), precondition_error);
}

TEST_CASE("conjectured values") {
    CHECK(g_conjectured(Rational(7, 3), 5).value.rational_value() == Rational(3, 7));
    GValue g946 = g_conjectured(Rational(9, 4), 6);
    Rational k(9, 4);
    CHECK(g946.value.is_root_of(k - 1, k * (k - 1), -1));
    CHECK(g946.value.to_decimal_string(5) == "0.31223");
    CHECK(g_conjectured(Rational(5, 2), 7).value.rational_value() == Rational(2, 7));
    CHECK(g_conjectured(Rational(7, 3), 7).value.rational_value() == Rational(9, 37));
}

TEST_CASE("discontinuity points and gaps") {
    auto d4 = discontinuity_report(4);
    REQUIRE(d4.size() == 1);
    CHECK(d4[0].k == 3);
    auto d6 = discontinuity_report(6);
    REQUIRE(d6.size() == 2);
    CHECK(d6[0].k == 3);
    CHECK(d6[1].k == Rational(5, 2));
    auto d8 = discontinuity_report(8);
    REQUIRE(d8.size() == 3);
    CHECK(d8[2].k == Rational(7, 3));

    // exact one-sided inequality at k = 3 for d in {4,5,6,7}
    for (int d : {4, 5, 6, 7}) {
        auto rep = discontinuity_report(d);
        REQUIRE(rep[0].left.has_value());
        REQUIRE(rep[0].right.has_value());
        CHECK_FALSE(rep[0].left->value == rep[0].right->value);
    }
    // and at k = 5/2 for d in {6,7}
    for (int d : {6, 7}) {
        auto rep = discontinuity_report(d);
        REQUIRE(rep[1].left.has_value());
        REQUIRE(rep[1].right.has_value());
        CHECK_FALSE(rep[1].left->value == rep[1].right->value);
    }
}

TEST_CASE("best known dispatch") {
    CHECK(g_best_known(3, 5)->provenance == Provenance::proved);
    CHECK(g_best_known(Rational(5, 2), 4)->provenance == Provenance::proved);
    CHECK(g_best_known(Rational(5, 2), 6)->provenance == Provenance::proved);
    CHECK(g_best_known(Rational(9, 4), 6)->provenance == Provenance::conjectured);
    CHECK(g_best_known(Rational(9, 4), 8)->provenance == Provenance::upper_bound_only);
    CHECK_FALSE(g_best_known(Rational(5, 2), 8).has_value());  // outside every window
    CHECK_FALSE(g_best_known(Rational(3, 2), 5).has_value());
}

TEST_CASE("csv emitter") {
    std::string csv = g_values_csv({Rational(5, 2), Rational(9, 4)}, {4, 5, 6, 7});
    CHECK(csv.find("k,d,value_5dp,provenance,source") == 0);
    CHECK(csv.find("conjectured") != std::string::npos);
    CHECK(csv.find("proved") != std::string::npos);
}
