#include <doctest.h>

#include "fracext/errors.hpp"
#include "fracext/partitions.hpp"

using namespace fracext;

TEST_CASE("canonical precoloring") {
    Precoloring pre = canonical_precoloring(5, 2);
    CHECK(pre.sets.size() == 10);
    // X = {1,3} gives [0,1/2) ∪ [1,3/2)
    SubsetLabel x13 = label_from_elements({1, 3});
    for (size_t i = 0; i < pre.sets.size(); ++i)
        if (pre.labels[i] == x13)
            CHECK(pre.sets[i] ==
                  unite(IntervalSet(0, Rational(1, 2)), IntervalSet(1, Rational(3, 2))));
    for (const auto& s : pre.sets) CHECK(s.measure() == 1);
    // coverage multiplicity C(4,1) = 4 everywhere on [0,5/2)
    for (int i = 0; i < 10; ++i) {
        Rational x = Rational(i, 4);
        int covered = 0;
        for (const auto& s : pre.sets) covered += s.contains_point(x);
        CHECK(covered == 4);
    }
    CHECK(canonical_precoloring(4, 2).sets.size() == 6);
}

TEST_CASE("pseudorandom partition for a single set") {
    Precoloring pre;
    pre.sets.push_back(IntervalSet(0, 1));
    pre.span = 1;
    Rational eps(1, 2);
    PseudoRandomPartition part = build_pseudorandom(pre, 5, 2, eps);
    for (int i = 0; i < 5; ++i) {
        CHECK(intersect(part.f_o[i], pre.sets[0]).measure() == Rational(1, 5));
        CHECK(part.f_e[i].measure() == Rational(1, 2));
        CHECK(intersect(part.f_e[i], pre.sets[0]).measure() == Rational(1, 6));
    }
    CHECK(part.y.measure() == eps);
    CHECK(verify_pseudorandom(part, pre).ok());
}

TEST_CASE("pseudorandom partition across a full canonical precoloring") {
    // all intersection constraints simultaneously (p' = 5 precoloring used
    // on a (4,2) instance with eps = 1/2: span 2.5 = 4/2 + 1/2)
    Precoloring pre = canonical_precoloring(5, 2);
    PseudoRandomPartition part = build_pseudorandom(pre, 4, 2, Rational(1, 2));
    CHECK(verify_pseudorandom(part, pre).ok());
    // derived sums: sum_i |f_e(i) ∩ C_a| = k/(k+eps), |Y ∩ C_a| = eps/(k+eps)
    Rational k(2);
    Rational span = k + Rational(1, 2);
    for (const auto& c : pre.sets) {
        Rational total = 0;
        for (const auto& fe : part.f_e) total += intersect(fe, c).measure();
        CHECK(total == k / span);
        CHECK(intersect(part.y, c).measure() == Rational(1, 2) / span);
    }
}

TEST_CASE("verifier reports injected faults") {
    Precoloring pre;
    pre.sets.push_back(IntervalSet(0, 1));
    pre.span = 1;
    PseudoRandomPartition part = build_pseudorandom(pre, 5, 2, Rational(1, 2));

    PseudoRandomPartition shrunk = part;
    shrunk.f_e[0] = carve(shrunk.f_e[0], shrunk.f_e[0].measure() - Rational(1, 1000));
    CHECK_FALSE(verify_pseudorandom(shrunk, pre).ok());

    PseudoRandomPartition overlapping = part;
    overlapping.f_o[0] = unite(overlapping.f_o[0], overlapping.f_o[1]);
    auto report = verify_pseudorandom(overlapping, pre);
    CHECK_FALSE(report.ok());
    bool mentions_overlap = false;
    for (const auto& v : report.violations)
        if (v.find("overlaps") != std::string::npos) mentions_overlap = true;
    CHECK(mentions_overlap);
}

TEST_CASE("restrict_fo variants") {
    Precoloring pre;
    pre.sets.push_back(IntervalSet(0, 1));
    pre.span = 1;

    // d = 1 mod 4 rule: measure 1/q with 1/p inside C_i
    PseudoRandomPartition part = build_pseudorandom(pre, 5, 2, Rational(2, 5));
    auto f1 = restrict_fo(part, pre.sets[0], RestrictVariant::D1);
    for (int j = 0; j < 5; ++j) {
        CHECK(f1[j].measure() == Rational(1, 2));
        CHECK(intersect(f1[j], pre.sets[0]).measure() == Rational(1, 5));
        CHECK(f1[j].subset_of(part.f_o[j]));
    }
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) CHECK(f1[i].disjoint_with(f1[j]));

    // d = 3 mod 4 rule: intersection (1-eps)/p
    PseudoRandomPartition part3 = build_pseudorandom(pre, 5, 2, Rational(2, 7));
    auto f3 = restrict_fo(part3, pre.sets[0], RestrictVariant::D3);
    for (int j = 0; j < 5; ++j)
        CHECK(intersect(f3[j], pre.sets[0]).measure() == Rational(1, 7));

    // eps = 0 boundary: the full f_o ∩ C_i mass is used
    PseudoRandomPartition part0 = build_pseudorandom(pre, 5, 2, Rational(0));
    auto f0 = restrict_fo(part0, pre.sets[0], RestrictVariant::D1);
    for (int j = 0; j < 5; ++j)
        CHECK(intersect(f0[j], pre.sets[0]).measure() ==
              intersect(part0.f_o[j], pre.sets[0]).measure());
}

TEST_CASE("span mismatch rejected") {
    Precoloring pre;
    pre.sets.push_back(IntervalSet(0, 1));
    pre.sets.push_back(IntervalSet(2, 3));  // escapes [0, 2.5+0)
    pre.span = 3;
    CHECK_THROWS_AS(build_pseudorandom(pre, 5, 2, Rational(1, 4)), precondition_error);
}

TEST_CASE("partition json") {
    Precoloring pre;
    pre.sets.push_back(IntervalSet(0, 1));
    pre.span = 1;
    PseudoRandomPartition part = build_pseudorandom(pre, 4, 2, Rational(1, 2));
    std::string json = partition_to_json(part);
    CHECK(json.find("f_o") != std::string::npos);
    CHECK(json.find("f_e") != std::string::npos);
    CHECK(json.find("\"Y\"") != std::string::npos);
}
