#include <doctest.h>

#include <random>

#include "fracext/errors.hpp"
#include "fracext/intervals.hpp"

using namespace fracext;

namespace {

IntervalSet iv(long a1, long a2, long b1, long b2) {
    return IntervalSet(Rational(a1, a2), Rational(b1, b2));
}

// random soup of intervals with denominators up to 8 inside [0,4)
IntervalSet random_set(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(0, 32), den(1, 8), cnt(0, 4);
    std::vector<IntervalSet::Interval> soup;
    int n = cnt(rng);
    for (int i = 0; i < n; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        a.canonicalize();
        b.canonicalize();
        if (a > b) std::swap(a, b);
        soup.push_back({a, b});
    }
    return IntervalSet::from_intervals(std::move(soup));
}

}  // namespace

TEST_CASE("measure basics") {
    CHECK(unite(iv(0, 1, 1, 1), iv(2, 1, 3, 1)).measure() == 2);
    CHECK(IntervalSet().measure() == 0);
    CHECK(iv(1, 3, 1, 2).measure() == Rational(1, 6));
}

TEST_CASE("set algebra examples") {
    CHECK(intersect(iv(0, 1, 1, 1), iv(1, 2, 2, 1)) == iv(1, 2, 1, 1));
    CHECK(subtract(iv(0, 1, 1, 1), iv(0, 1, 1, 1)).empty());
    CHECK(unite(iv(0, 1, 1, 2), iv(1, 2, 1, 1)) == iv(0, 1, 1, 1));  // adjacency merge
}

TEST_CASE("carve leftmost-first") {
    IntervalSet s = unite(iv(0, 1, 1, 1), iv(2, 1, 3, 1));
    IntervalSet got = carve(s, Rational(3, 2));
    CHECK(got == unite(iv(0, 1, 1, 1), iv(2, 1, 5, 2)));
    CHECK(carve(s, 0).empty());
    CHECK(carve(s, s.measure()) == s);
    CHECK_THROWS_AS(carve(s, Rational(5, 2)), deficit_error);
}

TEST_CASE("equipartition") {
    auto halves = equipartition(iv(0, 1, 1, 1), 2);
    CHECK(halves[0] == iv(0, 1, 1, 2));
    CHECK(halves[1] == iv(1, 2, 1, 1));
    auto thirds = equipartition(iv(0, 1, 1, 1), 3);
    for (const auto& t : thirds) CHECK(t.measure() == Rational(1, 3));
    auto empties = equipartition(IntervalSet(), 4);
    CHECK(empties.size() == 4);
    for (const auto& e : empties) CHECK(e.empty());
}

TEST_CASE("canonical form and serialization round trip") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        IntervalSet s = random_set(rng);
        // canonicality: rebuilding from own intervals is the identity
        CHECK(IntervalSet::from_intervals(s.intervals()) == s);
        CHECK(IntervalSet::from_text(s.to_text()) == s);
        for (size_t i = 0; i < s.intervals().size(); ++i) {
            CHECK(s.intervals()[i].first < s.intervals()[i].second);
            if (i) CHECK(s.intervals()[i - 1].second < s.intervals()[i].first);
        }
    }
}

TEST_CASE("boolean algebra laws on random triples") {
    std::mt19937 rng(99);
    IntervalSet span = iv(0, 1, 4, 1);
    for (int trial = 0; trial < 200; ++trial) {
        IntervalSet a = random_set(rng), b = random_set(rng), c = random_set(rng);
        // De Morgan within the span
        CHECK(subtract(span, unite(a, b)) == intersect(subtract(span, a), subtract(span, b)));
        CHECK(subtract(span, intersect(a, b)) == unite(subtract(span, a), subtract(span, b)));
        // associativity and distributivity
        CHECK(unite(a, unite(b, c)) == unite(unite(a, b), c));
        CHECK(intersect(a, intersect(b, c)) == intersect(intersect(a, b), c));
        CHECK(intersect(a, unite(b, c)) == unite(intersect(a, b), intersect(a, c)));
        // inclusion-exclusion of measures
        CHECK(unite(a, b).measure() + intersect(a, b).measure() == a.measure() + b.measure());
    }
}

TEST_CASE("carve monotone and additive") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        IntervalSet s = random_set(rng);
        Rational m = s.measure();
        if (m == 0) continue;
        Rational m1 = m / 3, m2 = m * 2 / 3;
        CHECK(carve(s, m1).subset_of(carve(s, m2)));
        CHECK(carve(s, m1).measure() == m1);
        // disjoint-union additivity
        IntervalSet left = carve(s, m1);
        IntervalSet rest = subtract(s, left);
        CHECK(left.disjoint_with(rest));
        CHECK(left.measure() + rest.measure() == m);
    }
}
