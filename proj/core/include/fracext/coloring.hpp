#pragma once

#include <string>
#include <vector>

#include "fracext/algebraic.hpp"
#include "fracext/graphs.hpp"
#include "fracext/partitions.hpp"

namespace fracext {

// The six constructive extension procedures.  D0..D3 are the staged
// colorings for d = 0,1,2,3 mod 4; D6_HIGH and D7_HIGH are the dedicated
// short-ray constructions for d = 6 and d = 7 with larger k.
enum class CaseTag { D0, D1, D2, D3, D6_HIGH, D7_HIGH };

CaseTag case_from_string(const std::string& name);
std::string case_to_string(CaseTag tag);

// Vertex id -> color set; every set lies in [0, span).
struct FractionalColoring {
    std::vector<IntervalSet> colors;
    Rational span;
};

bool applicability(CaseTag tag, const Rational& k, int d);

// Smallest positive epsilon for which the case's defining inequality holds
// with equality; rational where the condition is linear, a quadratic surd
// otherwise.
AlgebraicValue minimal_epsilon(CaseTag tag, const Rational& k, int d);

// The same formula without the applicability gate (used for one-sided limits
// at window endpoints).
AlgebraicValue case_threshold_formula(CaseTag tag, const Rational& k, int d);

// Colors one ray (levels 0..P) whose special vertex carries c_i.  Vertex
// ids refer to `ray`, which must be a build_ray output for (p,q).
FractionalColoring color_ray(CaseTag tag, const Graph& ray, int p, int q, int d,
                             const Rational& eps, const IntervalSet& c_i,
                             const PseudoRandomPartition& part);

// Colors the whole universal graph (a build_universal(p,q,d,n) output),
// assigning pre.sets[r-1] to the special vertex of ray r.
FractionalColoring extend_universal(CaseTag tag, const Graph& universal, int p, int q, int d,
                                    int n, const Rational& eps, const Precoloring& pre);

struct ColoringViolation {
    std::string kind;  // "span", "overlap", "measure", "precolor"
    int u = -1, v = -1;
    std::string detail;
};

struct ColoringReport {
    std::vector<ColoringViolation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

// precolored: (vertex id, required exact set) pairs.
ColoringReport verify_coloring(const Graph& g, const FractionalColoring& coloring,
                               const std::vector<std::pair<int, IntervalSet>>& precolored,
                               bool strict = false);

// Trims every vertex to measure exactly one by removing rightmost mass.
FractionalColoring normalize_to_unit(const FractionalColoring& coloring);

std::string coloring_to_json(const FractionalColoring& coloring, int p, int q, int d, int n,
                             const Rational& eps, CaseTag tag);

}  // namespace fracext
