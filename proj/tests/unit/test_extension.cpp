#include <doctest.h>

#include "fracext/errors.hpp"
#include "fracext/extension.hpp"

using namespace fracext;

TEST_CASE("instance masses") {
    {
        auto inst = build_extension_instance(5, 2, 6, Rational(1, 2));
        // |f_e(a) ∩ C_i| = 1/(p + q eps) = 1/6
        int star_d = 0;
        for (const auto& c : inst.classes)
            if (c.with_special && c.star_element > 0) {
                CHECK(c.mass == Rational(1, 6));
                ++star_d;
            }
        CHECK(star_d == 5);
        CHECK(inst.total_mass() == Rational(3));
    }
    {
        auto inst = build_extension_instance(5, 2, 5, Rational(2, 5));
        Rational d_star, e_empty;
        for (const auto& c : inst.classes) {
            if (c.with_special && c.star_element > 0) d_star = c.mass;
            if (!c.with_special && c.star_element == 0) e_empty = c.mass;
        }
        CHECK(d_star == Rational(1, 5));
        CHECK(e_empty == Rational(2, 5));
        CHECK(inst.total_mass() == Rational(5, 2) + Rational(2, 5));
    }
    {
        auto inst = build_extension_instance(5, 2, 7, Rational(2, 7));
        CHECK(inst.total_mass() == Rational(5, 2) + Rational(2, 7));
        Rational d_star;
        for (const auto& c : inst.classes)
            if (c.with_special && c.star_element > 0) d_star = c.mass;
        CHECK(d_star == (1 - Rational(2, 7)) / 5);
    }
}

TEST_CASE("full LP decides (5,2,5) at and below the threshold") {
    ExtensionSolveOptions full;
    full.force_full_lp = true;
    {
        auto inst = build_extension_instance(5, 2, 5, Rational(2, 5));
        auto res = solve_extension(inst, full);
        CHECK(res.extendable);
        CHECK(res.optimum == inst.total_mass());
    }
    {
        auto inst = build_extension_instance(5, 2, 5, Rational(2, 5) - Rational(1, 100));
        auto res = solve_extension(inst, full);
        CHECK_FALSE(res.extendable);
        CHECK(res.optimum > inst.total_mass());
    }
}

TEST_CASE("fast paths agree with the full program") {
    ExtensionSolveOptions fast, full;
    full.force_full_lp = true;
    for (auto [p, q, d, lo, hi] :
         {std::tuple{5, 2, 4, Rational(49, 100), Rational(51, 100)},
          std::tuple{5, 2, 5, Rational(39, 100), Rational(41, 100)},
          std::tuple{5, 2, 6, Rational(34, 100), Rational(36, 100)},
          std::tuple{5, 2, 7, Rational(28, 100), Rational(29, 100)},
          std::tuple{7, 3, 5, Rational(42, 100), Rational(43, 100)}}) {
        for (const Rational& eps : {lo, hi}) {
            auto inst = build_extension_instance(p, q, d, eps);
            auto a = solve_extension(inst, fast);
            auto b = solve_extension(inst, full);
            CAPTURE(p);
            CAPTURE(d);
            CHECK(a.extendable == b.extendable);
        }
    }
}

TEST_CASE("threshold brackets: exact rational answers") {
    Rational tol(1, 1'000'000);
    {
        auto bracket = minimal_extension_epsilon(5, 2, 5, tol);
        CHECK(bracket.lo <= Rational(2, 5));
        CHECK(Rational(2, 5) <= bracket.hi);
        CHECK(bracket.hi - bracket.lo <= tol);
    }
    {
        auto bracket = minimal_extension_epsilon(5, 2, 7, tol);
        CHECK(bracket.lo <= Rational(2, 7));
        CHECK(Rational(2, 7) <= bracket.hi);
    }
    {
        auto bracket = minimal_extension_epsilon(7, 3, 7, tol);
        CHECK(bracket.lo <= Rational(9, 37));
        CHECK(Rational(9, 37) <= bracket.hi);
    }
}

TEST_CASE("relaxation alone pins the d=5 threshold from below") {
    ExtensionSolveOptions no_full;
    no_full.allow_construction_path = false;
    no_full.column_budget = 0;  // full LP unavailable
    auto inst = build_extension_instance(5, 2, 5, Rational(39, 100));
    auto res = solve_extension(inst, no_full);
    CHECK_FALSE(res.extendable);
    CHECK(res.method == "relaxation");
}

TEST_CASE("construction path certifies the upper side") {
    ExtensionSolveOptions no_full;
    no_full.allow_relaxation_path = false;
    no_full.column_budget = 0;
    auto inst = build_extension_instance(9, 4, 6, Rational(32, 100));
    auto res = solve_extension(inst, no_full);
    CHECK(res.extendable);
    CHECK(res.method == "construction");
}

TEST_CASE("rejects bad parameters") {
    CHECK_THROWS_AS(build_extension_instance(5, 2, 3, Rational(1, 2)), precondition_error);
    CHECK_THROWS_AS(build_extension_instance(5, 2, 7, Rational(3, 2)), precondition_error);
    CHECK_THROWS_AS(build_extension_instance(3, 2, 5, Rational(1, 2)), precondition_error);
}
