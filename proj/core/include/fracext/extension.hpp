#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fracext/graphs.hpp"
#include "fracext/rational.hpp"

namespace fracext {

// One (s-flag, footprint) class of the per-ray extension program: sets with
// the given exact base footprint (an element star or empty) that contain the
// special vertex iff with_special, carrying the stated color mass.
struct BoundaryClass {
    bool with_special = false;
    int star_element = 0;  // 1..p, or 0 for the empty footprint
    Rational mass;
};

struct ExtensionInstance {
    int p = 0, q = 0, d = 0;
    Rational k, eps;
    std::shared_ptr<const Graph> ray;  // R_{p,q,P} with X = [q]
    int special = -1;
    std::vector<int> base;      // vertex ids at level P
    std::vector<int> interior;  // V': everything except the base and s
    std::vector<BoundaryClass> classes;

    Rational total_mass() const;  // = k + eps
};

// The ray extension program of the numerical procedure: base color masses
// per class from the pseudorandom partition measures (even d), or from the
// per-ray base palettes (odd d).
ExtensionInstance build_extension_instance(int p, int q, int d, const Rational& eps);

struct ExtensionSolveOptions {
    long long column_budget = 200'000;    // enumerated variables per instance
    long long mwis_budget = 30'000'000;   // pricing branch-and-bound nodes
    bool allow_construction_path = true;  // certify "extendable" by a verified coloring
    bool allow_relaxation_path = true;    // certify "not extendable" by the orbit relaxation
    bool force_full_lp = false;           // tests: always solve the full program
};

struct ExtensionSolveResult {
    bool extendable = false;
    // Exact optimum when method == "full-lp"; k+eps (exact, by exhibited
    // solution) for "construction"; a certified lower bound > k+eps for
    // "relaxation".
    Rational optimum;
    std::string method;
};

ExtensionSolveResult solve_extension(const ExtensionInstance& inst,
                                     const ExtensionSolveOptions& opts = {});

struct ThresholdBracket {
    Rational lo, hi;  // not extendable at lo (or lo = 0), extendable at hi
};

// Caches the ray and the enumerated column pool across bisection probes.
class ExtensionSolver {
  public:
    ExtensionSolver(int p, int q, int d, ExtensionSolveOptions opts = {});
    ExtensionSolveResult decide(const Rational& eps);
    ThresholdBracket threshold(const Rational& tol);

  private:
    int p_, q_, d_;
    ExtensionSolveOptions opts_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

ThresholdBracket minimal_extension_epsilon(int p, int q, int d, const Rational& tol,
                                           const ExtensionSolveOptions& opts = {});

}  // namespace fracext
