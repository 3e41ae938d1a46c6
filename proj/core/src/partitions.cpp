#include "fracext/partitions.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "fracext/errors.hpp"

namespace fracext {

namespace {
constexpr long kAtomGuardrail = 100'000;
}

IntervalSet PseudoRandomPartition::f_o_union(SubsetLabel a) const {
    IntervalSet out;
    for (int e : label_elements(a)) out = unite(out, f_o[e - 1]);
    return out;
}

IntervalSet PseudoRandomPartition::f_e_union(SubsetLabel a) const {
    IntervalSet out;
    for (int e : label_elements(a)) out = unite(out, f_e[e - 1]);
    return out;
}

Precoloring canonical_precoloring(int p_prime, int q) {
    if (q < 1 || p_prime < 2 * q)
        throw precondition_error("canonical_precoloring: p' >= 2q required");
    Precoloring pre;
    pre.span = Rational(p_prime, q);
    pre.span.canonicalize();
    for (SubsetLabel x : all_subsets(p_prime, q)) {
        std::vector<IntervalSet::Interval> soup;
        for (int i : label_elements(x)) soup.push_back({rat(i - 1, q), rat(i, q)});
        pre.sets.push_back(IntervalSet::from_intervals(std::move(soup)));
        pre.labels.push_back(x);
    }
    return pre;
}

PseudoRandomPartition build_pseudorandom(const Precoloring& pre, int p, int q,
                                         const Rational& eps_in) {
    Rational eps = canonical(eps_in);
    if (p < 2 * q || q < 1) throw precondition_error("build_pseudorandom: p >= 2q required");
    if (eps < 0) throw precondition_error("build_pseudorandom: eps >= 0 required");
    PseudoRandomPartition part;
    part.p = p;
    part.q = q;
    part.k = rat(p, q);
    part.eps = eps;
    Rational span = part.span();

    for (const auto& c : pre.sets) {
        if (!c.subset_of(IntervalSet(0, span)))
            throw precondition_error("precolor set exceeds the span [0," + to_string(span) + ")");
    }

    // Refine [0, span) at every endpoint of every precolor set.  The
    // resulting elementary cells refine the atom algebra of the C_a, so
    // splitting each cell proportionally forces every intersection equality
    // at once.
    std::vector<Rational> cuts{Rational(0), span};
    for (const auto& c : pre.sets)
        for (const auto& [a, b] : c.intervals()) {
            cuts.push_back(a);
            cuts.push_back(b);
        }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    if ((long)cuts.size() > kAtomGuardrail)
        throw budget_exceeded_error("atom partition too fine", kAtomGuardrail);

    std::vector<std::vector<IntervalSet::Interval>> fo_soup(p), fe_soup(p);
    std::vector<IntervalSet::Interval> y_soup;
    Rational used_fraction = eps == 0 ? Rational(1) : part.k / span;
    for (size_t ci = 0; ci + 1 < cuts.size(); ++ci) {
        const Rational& lo = cuts[ci];
        const Rational& hi = cuts[ci + 1];
        Rational w = hi - lo;
        for (int i = 0; i < p; ++i)
            fo_soup[i].push_back({lo + w * i / p, lo + w * (i + 1) / p});
        Rational used_hi = lo + w * used_fraction;
        Rational uw = used_hi - lo;
        for (int i = 0; i < p; ++i)
            fe_soup[i].push_back({lo + uw * i / p, lo + uw * (i + 1) / p});
        if (used_hi < hi) y_soup.push_back({used_hi, hi});
    }
    for (int i = 0; i < p; ++i) {
        part.f_o.push_back(IntervalSet::from_intervals(std::move(fo_soup[i])));
        part.f_e.push_back(IntervalSet::from_intervals(std::move(fe_soup[i])));
    }
    part.y = IntervalSet::from_intervals(std::move(y_soup));
    return part;
}

std::vector<IntervalSet> restrict_fo(const PseudoRandomPartition& part, const IntervalSet& c_i,
                                     RestrictVariant variant) {
    Rational target_in;
    if (variant == RestrictVariant::D1) {
        target_in = rat(1, part.p);
    } else {
        if (part.eps > 1)
            throw precondition_error("restrict_fo: d=3 mod 4 variant requires eps <= 1");
        target_in = (1 - part.eps) / part.p;
    }
    Rational target_out = rat(1, part.q) - target_in;
    std::vector<IntervalSet> out;
    for (int j = 0; j < part.p; ++j) {
        IntervalSet inside = intersect(part.f_o[j], c_i);
        IntervalSet outside = subtract(part.f_o[j], c_i);
        if (outside.measure() < target_out)
            throw deficit_error(
                "restrict_fo: f_o(" + std::to_string(j + 1) + ")\\C_i has measure " +
                    to_string(outside.measure()) + " < " + to_string(target_out),
                "restrict-fo-outside-mass");
        out.push_back(unite(carve(inside, target_in), carve(outside, target_out)));
    }
    return out;
}

PartitionReport verify_pseudorandom(const PseudoRandomPartition& part, const Precoloring& pre) {
    PartitionReport report;
    auto fail = [&](const std::string& msg) { report.violations.push_back(msg); };
    int p = part.p;
    Rational span = part.span();
    Rational fo_measure = span / p;
    Rational fe_measure = rat(1, part.q);
    Rational fe_cap = Rational(1) / (p + part.q * part.eps);

    for (int i = 0; i < p; ++i) {
        if (part.f_o[i].measure() != fo_measure)
            fail("|f_o(" + std::to_string(i + 1) + ")| = " + to_string(part.f_o[i].measure()) +
                 ", expected " + to_string(fo_measure));
        if (part.f_e[i].measure() != fe_measure)
            fail("|f_e(" + std::to_string(i + 1) + ")| = " + to_string(part.f_e[i].measure()) +
                 ", expected " + to_string(fe_measure));
        for (int j = i + 1; j < p; ++j) {
            if (!part.f_o[i].disjoint_with(part.f_o[j]))
                fail("f_o(" + std::to_string(i + 1) + ") overlaps f_o(" + std::to_string(j + 1) +
                     ")");
            if (!part.f_e[i].disjoint_with(part.f_e[j]))
                fail("f_e(" + std::to_string(i + 1) + ") overlaps f_e(" + std::to_string(j + 1) +
                     ")");
        }
    }
    IntervalSet fe_all;
    for (const auto& s : part.f_e) fe_all = unite(fe_all, s);
    if (part.y != subtract(IntervalSet(0, span), fe_all))
        fail("Y is not the complement of f_e([p])");
    if (part.y.measure() != part.eps)
        fail("|Y| = " + to_string(part.y.measure()) + ", expected " + to_string(part.eps));

    for (size_t a = 0; a < pre.sets.size(); ++a) {
        for (int i = 0; i < p; ++i) {
            Rational mo = intersect(part.f_o[i], pre.sets[a]).measure();
            if (mo != Rational(1, p))
                fail("|f_o(" + std::to_string(i + 1) + ") ∩ C_" + std::to_string(a + 1) +
                     "| = " + to_string(mo) + ", expected 1/" + std::to_string(p));
            Rational me = intersect(part.f_e[i], pre.sets[a]).measure();
            if (me != fe_cap)
                fail("|f_e(" + std::to_string(i + 1) + ") ∩ C_" + std::to_string(a + 1) +
                     "| = " + to_string(me) + ", expected " + to_string(fe_cap));
        }
    }
    return report;
}

std::string partition_to_json(const PseudoRandomPartition& part) {
    nlohmann::json j;
    j["p"] = part.p;
    j["q"] = part.q;
    j["k"] = to_string(part.k);
    j["eps"] = to_string(part.eps);
    for (const auto& s : part.f_o) j["f_o"].push_back(s.to_text());
    for (const auto& s : part.f_e) j["f_e"].push_back(s.to_text());
    j["Y"] = part.y.to_text();
    return j.dump(2);
}

}  // namespace fracext
