// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "fracext/certificates.hpp"
#include "fracext/chromatic.hpp"
#include "fracext/closed_forms.hpp"
#include "fracext/coloring.hpp"
#include "fracext/errors.hpp"
#include "fracext/extension.hpp"
#include "fracext/spectral.hpp"
#include "fracext/table.hpp"

using namespace fracext;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
    void finish(double seconds) {
        printf("%-12s %s  (%.1fs)\n", name.c_str(), pass ? "PASS" : "FAIL", seconds);
        for (const auto& n : notes) printf("    %s\n", n.c_str());
        if (!pass) ++failures;
        fflush(stdout);
    }
};

template <typename Fn>
void run(const std::string& name, Fn&& body) {
    Criterion c{name};
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    c.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
}

std::string row_name(int p, int q, int d) {
    return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(d) + ")";
}

// rational epsilon at or just above / clearly below a case threshold
Rational eps_above(CaseTag tag, const Rational& k, int d) {
    return minimal_epsilon(tag, k, d).bracket(rat(1, 1'000'000'000)).second;
}
Rational eps_below(CaseTag tag, const Rational& k, int d) {
    return minimal_epsilon(tag, k, d).bracket(rat(1, 1'000'000)).first - rat(1, 1000);
}

}  // namespace

int main() {
    // 1 & 2. Table reproduction at the nine desk-scale rows, and the exact
    // closed-form/bracket agreement on the rows that have a formula.
    std::vector<TableRowResult> table_results;
    run("criterion-1", [&](Criterion& c) {
        std::vector<TableRowSpec> rows;
        for (auto [p, q, d] :
             {std::tuple{5, 2, 5}, {5, 2, 7}, {5, 2, 8}, {7, 3, 5}, {7, 3, 6}, {7, 3, 7},
              {9, 4, 5}, {9, 4, 6}, {11, 5, 5}}) {
            auto spec = find_table_row(p, q, d);
            c.require(spec.has_value(), row_name(p, q, d) + " missing from the table");
            if (spec) rows.push_back(*spec);
        }
        TableRunConfig config;
        auto t0 = std::chrono::steady_clock::now();
        table_results = run_table(rows, config);
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        for (const auto& r : table_results)
            c.require(r.status == "PASS",
                      row_name(r.spec.p, r.spec.q, r.spec.d) + " status " + r.status + " " +
                          r.error);
        c.require(dt <= 1800, "table runtime exceeded 30 minutes");
        c.note("table runtime " + std::to_string((int)dt) + "s");
    });

    run("criterion-2", [&](Criterion& c) {
        int checked = 0;
        for (const auto& r : table_results) {
            if (!r.closed_form || !r.bracket) continue;
            ++checked;
            c.require(r.closed_form_in_bracket,
                      row_name(r.spec.p, r.spec.q, r.spec.d) + " closed form escapes the bracket");
        }
        // every row except (5,2,8) has an applicable lemma/conjecture formula
        c.require(checked == 8,
                  "expected 8 rows with applicable formulas, saw " + std::to_string(checked));
    });

    // 3. Constructive colorings on universal graphs: success at (a hair
    // above) the threshold, deficit failure at threshold - 1/1000.
    run("criterion-3", [](Criterion& c) {
        struct Case {
            CaseTag tag;
            int d;
        };
        std::vector<Case> cases = {{CaseTag::D0, 4}, {CaseTag::D0, 8},      {CaseTag::D1, 5},
                                   {CaseTag::D2, 6}, {CaseTag::D3, 7},      {CaseTag::D6_HIGH, 6},
                                   {CaseTag::D7_HIGH, 7}};
        int exercised = 0;
        for (auto [p, q] : {std::pair{5, 2}, {7, 3}, {9, 4}}) {
            Rational k = rat(p, q);
            Precoloring pre = canonical_precoloring(p, q);
            for (auto [tag, d] : cases) {
                if (!applicability(tag, k, d)) continue;
                ++exercised;
                std::string label = case_to_string(tag) + " " + row_name(p, q, d);
                Graph u = build_universal(p, q, d, 1);
                FractionalColoring col =
                    extend_universal(tag, u, p, q, d, 1, eps_above(tag, k, d), pre);
                std::vector<std::pair<int, IntervalSet>> precolored;
                for (int s : u.special()) precolored.push_back({s, pre.sets[u.vertex(s).ray - 1]});
                auto report = verify_coloring(u, col, precolored);
                c.require(report.ok(), label + " at threshold: " + report.summary());
                bool deficit = false;
                try {
                    extend_universal(tag, u, p, q, d, 1, eps_below(tag, k, d), pre);
                } catch (const deficit_error&) {
                    deficit = true;
                }
                c.require(deficit, label + " below threshold: expected a carve deficit");
            }
        }
        c.note(std::to_string(exercised) + " applicable (case, p, q) pairs exercised");
        c.require(exercised == 15, "expected 15 applicable pairs");
    });

    // 4. The pseudorandom partition satisfies every equality exactly.
    run("criterion-4", [](Criterion& c) {
        for (auto [pp, q] : {std::pair{5, 2}, {6, 2}, {7, 3}}) {
            Precoloring pre = canonical_precoloring(pp, q);
            for (const Rational& eps : {rat(1, 10), rat(1, 4), rat(1, 2)}) {
                auto part = build_pseudorandom(pre, pp, q, eps);
                auto report = verify_pseudorandom(part, pre);
                c.require(report.ok(), "(" + std::to_string(pp) + "," + std::to_string(q) +
                                           ") eps=" + to_string(eps) + ": " +
                                           (report.ok() ? "" : report.violations.front()));
            }
        }
    });

    // 5. Certificates.
    run("criterion-5", [](Criterion& c) {
        c.require(expansion_ratio(5, 2) == Rational(3, 2), "expansion(5,2) != 3/2");
        c.require(expansion_ratio(7, 3) >= Rational(4, 3), "expansion(7,3) < 4/3");
        c.require(expansion_ratio(9, 4) >= Rational(5, 4), "expansion(9,4) < 5/4");
        for (auto [p, q] : {std::pair{5, 2}, {6, 2}, {7, 3}}) {
            double lambda = second_eigenvalue(p, q);
            double want = (double)q / (p - q);
            c.require(std::abs(lambda - want) <= 1e-9,
                      "second eigenvalue off at (" + std::to_string(p) + "," + std::to_string(q) +
                          ")");
        }
        auto clique = certify_fractional_clique_d6(5, 2);
        c.require(clique.weight == Rational(5, 2) && clique.mwis == 1,
                  "fractional clique at (5,2) not certified");
        auto t0 = std::chrono::steady_clock::now();
        auto dual = dual_certificate_d6(10, 4, 11);
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.require(dual.feasible, "dual certificate (10,4,11) infeasible");
        c.require(dual.objective >= Rational(5, 2) + Rational(4, 11),
                  "dual objective below 5/2 + 4/11");
        c.require(dt <= 1200, "dual certificate exceeded 20 minutes");
    });

    // 6. Structural facts.
    run("criterion-6", [](Criterion& c) {
        for (int p = 4; p <= 9; ++p)
            for (int q = 2; 2 * q <= p; ++q)
                c.require(frac_chromatic_kneser(p, q) == rat(p, q),
                          "fractional chromatic number off at (" + std::to_string(p) + "," +
                              std::to_string(q) + ")");
        for (int p = 5; p <= 12; ++p)
            for (int q = 2; 2 * q < p; ++q) {
                int expected = 2 * ((q + p - 2 * q - 1) / (p - 2 * q)) + 1;
                auto og = odd_girth(kneser(p, q));
                c.require(og.has_value() && *og == expected,
                          "odd girth off at (" + std::to_string(p) + "," + std::to_string(q) +
                              ")");
            }
        for (int d = 4; d <= 8; ++d)
            for (auto [p, q] : {std::pair{5, 2}, {7, 3}}) {
                int formula = std::min((q + p - 2 * q - 1) / (p - 2 * q) - 1, d / 2 - 1);
                c.require(layer_independence_bound(p, q, d) == formula,
                          "m" + row_name(p, q, d) + " off");
            }
        for (int d : {4, 5, 6, 7}) {
            Graph u = build_universal(5, 2, d, 1);
            const auto& spec = u.special();
            for (size_t i = 0; i < spec.size(); ++i)
                for (size_t j = i + 1; j < spec.size(); ++j)
                    c.require(graph_distance(u, spec[i], spec[j]) >= d,
                              "special vertices too close in U(5,2," + std::to_string(d) + ")");
        }
    });

    // 7. Discontinuity witnesses: exact inequality of one-sided values.
    run("criterion-7", [](Criterion& c) {
        for (int d : {4, 5, 6, 7}) {
            auto rep = discontinuity_report(d);
            bool have = !rep.empty() && rep[0].k == 3 && rep[0].left && rep[0].right;
            c.require(have, "missing one-sided values at k=3, d=" + std::to_string(d));
            if (have)
                c.require(!(rep[0].left->value == rep[0].right->value),
                          "no gap at k=3, d=" + std::to_string(d));
        }
        for (int d : {6, 7}) {
            auto rep = discontinuity_report(d);
            bool have = rep.size() >= 2 && rep[1].k == Rational(5, 2) && rep[1].left &&
                        rep[1].right;
            c.require(have, "missing one-sided values at k=5/2, d=" + std::to_string(d));
            if (have)
                c.require(!(rep[1].left->value == rep[1].right->value),
                          "no gap at k=5/2, d=" + std::to_string(d));
        }
    });

    printf("%s\n", failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT");
    return failures == 0 ? 0 : 1;
}
