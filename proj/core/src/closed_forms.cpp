#include "fracext/closed_forms.hpp"

#include <sstream>

#include "fracext/coloring.hpp"
#include "fracext/errors.hpp"

namespace fracext {

namespace {

// Formula evaluators without domain checks, used both for values and for
// one-sided limits at the discontinuity points.

AlgebraicValue base_formula(const Rational& k, int d) {
    int dp = d / 4;
    switch (d % 4) {
        case 0:
            return AlgebraicValue::quadratic_root(dp, Rational(dp) * k - 1, -(k - 1), true);
        case 1:
            return AlgebraicValue((k - 1) / (dp * k));
        case 2:
            return AlgebraicValue::quadratic_root(dp, Rational(dp) * k, -(k - 1), true);
        default:
            return AlgebraicValue((k - 1) / (dp * k + k - 1));
    }
}

AlgebraicValue new_formula(const Rational& k, int d) {
    if (d == 4) return AlgebraicValue::quadratic_root(1, k - 1, -1, true);
    return AlgebraicValue::quadratic_root(1, k, -1, true);  // d == 6
}

AlgebraicValue conjectured_formula(const Rational& k, int d) {
    if (d == 5) return AlgebraicValue(1 / k);
    if (d == 6) return AlgebraicValue::quadratic_root(k - 1, k * (k - 1), -1, true);
    if (k < Rational(5, 2)) return AlgebraicValue(1 / (k * k - k + 1));  // d == 7 low
    return AlgebraicValue(1 / (k + 1));                                  // d == 7 high
}

}  // namespace

std::string provenance_to_string(Provenance p) {
    switch (p) {
        case Provenance::proved: return "proved";
        case Provenance::conjectured: return "conjectured";
        case Provenance::upper_bound_only: return "upper_bound_only";
    }
    return "?";
}

GValue g_base(const Rational& k_in, int d) {
    Rational k = canonical(k_in);
    if (d < 3) throw precondition_error("g_base: d >= 3 required");
    if (!(k == 2 || k >= 3) && d != 3)
        throw precondition_error("g_base: requires k = 2 or k >= 3 (any k >= 2 when d = 3)");
    if (k < 2) throw precondition_error("g_base: k >= 2 required");
    return {base_formula(k, d), Provenance::proved, "distance-extension formula"};
}

GValue g_new(const Rational& k_in, int d) {
    Rational k = canonical(k_in);
    if (d == 4 && k >= 2 && k < 3)
        return {new_formula(k, 4), Provenance::proved, "exact value for d=4"};
    if (d == 6 && (k == 2 || (k >= Rational(5, 2) && k < 3)))
        return {new_formula(k, 6), Provenance::proved, "exact value for d=6, k>=5/2"};
    throw precondition_error("g_new: outside the proved region");
}

GValue g_conjectured(const Rational& k_in, int d) {
    Rational k = canonical(k_in);
    if (k < 2 || k >= 3) throw precondition_error("g_conjectured: k in [2,3) required");
    if (d == 5) return {conjectured_formula(k, 5), Provenance::conjectured, "conjecture for d=5"};
    if (d == 6 && k < Rational(5, 2))
        return {conjectured_formula(k, 6), Provenance::conjectured, "conjecture for d=6, k<5/2"};
    if (d == 7) return {conjectured_formula(k, 7), Provenance::conjectured, "conjecture for d=7"};
    throw precondition_error("g_conjectured: outside the conjectured region");
}

std::optional<GValue> g_best_known(const Rational& k_in, int d) {
    Rational k = canonical(k_in);
    if (k < 2 || d < 3) return std::nullopt;
    if (k == 2 || k >= 3 || d == 3) return g_base(k, d);
    if (d == 4) return g_new(k, d);
    if (d == 5) return g_conjectured(k, d);
    if (d == 6) return k >= Rational(5, 2) ? g_new(k, d) : g_conjectured(k, d);
    if (d == 7) return g_conjectured(k, d);
    // d >= 8 inside (2,3): constructive upper bound where a case applies
    for (CaseTag tag : {CaseTag::D0, CaseTag::D1, CaseTag::D2, CaseTag::D3})
        if (applicability(tag, k, d))
            return GValue{minimal_epsilon(tag, k, d), Provenance::upper_bound_only,
                          "constructive upper bound"};
    return std::nullopt;
}

std::vector<DiscontinuityPoint> discontinuity_report(int d) {
    if (d < 4) throw precondition_error("discontinuity_report: d >= 4 required");
    std::vector<DiscontinuityPoint> out;
    auto case_for_residue = [&]() {
        switch (d % 4) {
            case 0: return CaseTag::D0;
            case 1: return CaseTag::D1;
            case 2: return CaseTag::D2;
            default: return CaseTag::D3;
        }
    }();
    int dp = d / 4;
    Rational window_end = 2 + ((d % 4 <= 1) ? Rational(1, 2 * dp - 1) : Rational(1, 2 * dp));

    for (int m = 1; m <= d / 2 - 1; ++m) {
        DiscontinuityPoint pt;
        pt.k = 2 + Rational(1, m);
        if (pt.k == 3) {
            if (d == 4)
                pt.left = GValue{new_formula(pt.k, 4), Provenance::proved, "d=4 value"};
            else if (d == 5)
                pt.left = GValue{conjectured_formula(pt.k, 5), Provenance::conjectured,
                                 "d=5 conjecture"};
            else if (d == 6)
                pt.left = GValue{new_formula(pt.k, 6), Provenance::proved, "d=6 value"};
            else if (d == 7)
                pt.left = GValue{AlgebraicValue(1 / (pt.k + 1)), Provenance::conjectured,
                                 "d=7 conjecture"};
            else if (window_end == 3)
                pt.left = GValue{case_threshold_formula(case_for_residue, pt.k, d),
                                 Provenance::upper_bound_only, "constructive upper bound"};
            pt.right = g_base(3, d);
        } else if (pt.k == Rational(5, 2) && d == 6) {
            pt.left =
                GValue{conjectured_formula(pt.k, 6), Provenance::conjectured, "d=6 conjecture"};
            pt.right = g_new(pt.k, 6);
        } else if (pt.k == Rational(5, 2) && d == 7) {
            pt.left = GValue{AlgebraicValue(1 / (pt.k * pt.k - pt.k + 1)), Provenance::conjectured,
                             "d=7 conjecture (low side)"};
            pt.right = GValue{AlgebraicValue(1 / (pt.k + 1)), Provenance::conjectured,
                              "d=7 conjecture (high side)"};
        } else {
            // constructive bound formulas on either side where the lemma
            // windows touch this point; unknown regions stay empty
            if (applicability(case_for_residue, pt.k, d))
                pt.right = GValue{minimal_epsilon(case_for_residue, pt.k, d),
                                  Provenance::upper_bound_only, "constructive upper bound"};
            if (window_end == pt.k)
                pt.left = GValue{case_threshold_formula(case_for_residue, pt.k, d),
                                 Provenance::upper_bound_only,
                                 "constructive upper bound (left limit)"};
        }
        out.push_back(std::move(pt));
    }
    return out;
}

std::string g_values_csv(const std::vector<Rational>& ks, const std::vector<int>& ds) {
    std::ostringstream os;
    os << "k,d,value_5dp,provenance,source\n";
    for (int d : ds)
        for (const auto& k : ks) {
            auto gv = g_best_known(k, d);
            if (!gv) continue;
            os << to_string(k) << ',' << d << ',' << gv->value.to_decimal_string(5) << ','
               << provenance_to_string(gv->provenance) << ',' << gv->source << '\n';
        }
    return os.str();
}

}  // namespace fracext
