#pragma once

#include <string>
#include <vector>

#include "fracext/rational.hpp"

namespace fracext {

enum class Sense { LE, GE, EQ };
enum class Direction { Minimize, Maximize };

// Sparse exact-rational linear program over nonnegative variables.
struct LinearProgram {
    struct Row {
        std::vector<std::pair<int, Rational>> coeffs;
        Sense sense = Sense::GE;
        Rational rhs;
        std::string name;
    };

    Direction direction = Direction::Minimize;
    std::vector<Rational> objective;
    std::vector<std::string> var_names;
    std::vector<Row> rows;

    int var_count() const { return (int)objective.size(); }
    int add_var(const Rational& obj_coeff, std::string name = "");
    void add_row(std::vector<std::pair<int, Rational>> coeffs, Sense sense, Rational rhs,
                 std::string name = "");

    // Human-readable LP text format for cross-checking with external solvers.
    std::string to_lp_format() const;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded };

struct SimplexResult {
    SolveStatus status = SolveStatus::Infeasible;
    Rational objective;
    std::vector<Rational> primal;  // per variable
    std::vector<Rational> dual;    // per row, for the original direction
    long long pivots = 0;
};

// Exact two-phase primal simplex with Bland's rule.  On Optimal the result
// carries an exactly verified primal/dual pair (equal objectives, feasible
// both sides); verification failure throws std::logic_error.
SimplexResult simplex_solve(const LinearProgram& lp);

}  // namespace fracext
