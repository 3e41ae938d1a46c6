#include "fracext/simplex.hpp"

#include <sstream>
#include <stdexcept>

#include "fracext/errors.hpp"

namespace fracext {

int LinearProgram::add_var(const Rational& obj_coeff, std::string name) {
    objective.push_back(canonical(obj_coeff));
    var_names.push_back(name.empty() ? "x" + std::to_string(objective.size() - 1)
                                     : std::move(name));
    return (int)objective.size() - 1;
}

void LinearProgram::add_row(std::vector<std::pair<int, Rational>> coeffs, Sense sense,
                            Rational rhs, std::string name) {
    for (auto& [j, c] : coeffs) {
        if (j < 0 || j >= var_count()) throw precondition_error("row references unknown variable");
        c.canonicalize();
    }
    rhs.canonicalize();
    rows.push_back({std::move(coeffs), sense, std::move(rhs), std::move(name)});
}

std::string LinearProgram::to_lp_format() const {
    std::ostringstream os;
    os << (direction == Direction::Minimize ? "Minimize" : "Maximize") << "\n obj:";
    for (int j = 0; j < var_count(); ++j)
        if (objective[j] != 0)
            os << (objective[j] > 0 ? " + " : " - ") << Rational(abs(objective[j])).get_str() << ' '
               << var_names[j];
    os << "\nSubject To\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        os << ' ' << (rows[i].name.empty() ? "r" + std::to_string(i) : rows[i].name) << ':';
        for (const auto& [j, c] : rows[i].coeffs)
            os << (c > 0 ? " + " : " - ") << Rational(abs(c)).get_str() << ' ' << var_names[j];
        os << (rows[i].sense == Sense::LE ? " <= " : rows[i].sense == Sense::GE ? " >= " : " = ")
           << rows[i].rhs.get_str() << '\n';
    }
    os << "Bounds\n";
    for (int j = 0; j < var_count(); ++j) os << ' ' << var_names[j] << " >= 0\n";
    os << "End\n";
    return os.str();
}

namespace {

struct Tableau {
    int m, n_struct, n_slack, n_total;  // columns: struct | slack | artificial
    std::vector<std::vector<Rational>> t;  // m rows x (n_total + 1), last col rhs
    std::vector<Rational> cost;            // current phase costs, size n_total
    std::vector<Rational> obj_row;         // reduced costs c_j - z_j, size n_total + 1
    std::vector<int> basis;                // basic column per row
    long long pivots = 0;

    int art_col(int row) const { return n_struct + n_slack + row; }

    void compute_obj_row() {
        obj_row.assign(n_total + 1, Rational(0));
        for (int j = 0; j <= n_total; ++j) {
            Rational z = 0;
            for (int i = 0; i < m; ++i)
                if (cost[basis[i]] != 0 && t[i][j] != 0) z += cost[basis[i]] * t[i][j];
            obj_row[j] = (j < n_total ? cost[j] : Rational(0)) - z;
        }
    }

    void pivot(int row, int col) {
        ++pivots;
        Rational inv = 1 / t[row][col];
        if (inv != 1)
            for (auto& v : t[row])
                if (v != 0) v *= inv;
        t[row][col] = 1;
        for (int i = 0; i < m; ++i) {
            if (i == row) continue;
            Rational f = t[i][col];
            if (f == 0) continue;
            for (int j = 0; j <= n_total; ++j)
                if (t[row][j] != 0) t[i][j] -= f * t[row][j];
            t[i][col] = 0;
        }
        Rational f = obj_row[col];
        if (f != 0) {
            for (int j = 0; j <= n_total; ++j)
                if (t[row][j] != 0) obj_row[j] -= f * t[row][j];
            obj_row[col] = 0;
        }
        basis[row] = col;
    }

    // Bland's rule; `allowed` masks columns that may enter.
    // Returns Optimal or Unbounded.
    SolveStatus run(const std::vector<char>& allowed) {
        while (true) {
            int enter = -1;
            for (int j = 0; j < n_total; ++j)
                if (allowed[j] && obj_row[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return SolveStatus::Optimal;
            int leave = -1;
            Rational best_ratio;
            for (int i = 0; i < m; ++i) {
                if (t[i][enter] <= 0) continue;
                Rational ratio = t[i][n_total] / t[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return SolveStatus::Unbounded;
            pivot(leave, enter);
        }
    }
};

}  // namespace

SimplexResult simplex_solve(const LinearProgram& lp) {
    int n = lp.var_count();
    int m = (int)lp.rows.size();
    bool maximize = lp.direction == Direction::Maximize;

    // Normalized rows: rhs >= 0; remember per-row flips for dual signs.
    std::vector<int> flip(m, 1);
    std::vector<Sense> sense(m);
    int n_slack = 0;
    for (int i = 0; i < m; ++i) {
        sense[i] = lp.rows[i].sense;
        if (lp.rows[i].rhs < 0) {
            flip[i] = -1;
            sense[i] = lp.rows[i].sense == Sense::LE   ? Sense::GE
                       : lp.rows[i].sense == Sense::GE ? Sense::LE
                                                       : Sense::EQ;
        }
        if (sense[i] != Sense::EQ) ++n_slack;
    }

    Tableau tab;
    tab.m = m;
    tab.n_struct = n;
    tab.n_slack = n_slack;
    tab.n_total = n + n_slack + m;
    tab.t.assign(m, std::vector<Rational>(tab.n_total + 1, Rational(0)));
    tab.basis.resize(m);

    int slack_at = n;
    std::vector<int> slack_col(m, -1);
    for (int i = 0; i < m; ++i) {
        for (const auto& [j, c] : lp.rows[i].coeffs) tab.t[i][j] += Rational(flip[i]) * c;
        tab.t[i][tab.n_total] = Rational(flip[i]) * lp.rows[i].rhs;
        if (sense[i] == Sense::LE) {
            slack_col[i] = slack_at;
            tab.t[i][slack_at++] = 1;
        } else if (sense[i] == Sense::GE) {
            slack_col[i] = slack_at;
            tab.t[i][slack_at++] = -1;
        }
        tab.t[i][tab.art_col(i)] = 1;
        tab.basis[i] = tab.art_col(i);
    }

    SimplexResult result;

    // Phase 1: minimize the sum of artificials.
    tab.cost.assign(tab.n_total, Rational(0));
    for (int i = 0; i < m; ++i) tab.cost[tab.art_col(i)] = 1;
    tab.compute_obj_row();
    std::vector<char> allowed(tab.n_total, 1);
    if (tab.run(allowed) == SolveStatus::Unbounded)
        throw std::logic_error("phase 1 cannot be unbounded");
    Rational infeas = 0;
    for (int i = 0; i < m; ++i)
        if (tab.basis[i] >= tab.n_struct + tab.n_slack) infeas += tab.t[i][tab.n_total];
    if (infeas != 0) {
        result.status = SolveStatus::Infeasible;
        result.pivots = tab.pivots;
        return result;
    }

    // Drive basic artificials out (degenerate pivots; rows with no
    // non-artificial entry are redundant and stay pinned at zero).
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < tab.n_struct + tab.n_slack) continue;
        for (int j = 0; j < tab.n_struct + tab.n_slack; ++j)
            if (tab.t[i][j] != 0) {
                tab.pivot(i, j);
                break;
            }
    }

    // Phase 2: artificials may not re-enter.
    tab.cost.assign(tab.n_total, Rational(0));
    for (int j = 0; j < n; ++j) tab.cost[j] = maximize ? -lp.objective[j] : lp.objective[j];
    tab.compute_obj_row();
    for (int i = 0; i < m; ++i) allowed[tab.art_col(i)] = 0;
    SolveStatus status = tab.run(allowed);
    result.pivots = tab.pivots;
    if (status == SolveStatus::Unbounded) {
        result.status = SolveStatus::Unbounded;
        return result;
    }

    result.status = SolveStatus::Optimal;
    result.primal.assign(n, Rational(0));
    for (int i = 0; i < m; ++i)
        if (tab.basis[i] < n) result.primal[tab.basis[i]] = tab.t[i][tab.n_total];
    Rational opt = 0;
    for (int j = 0; j < n; ++j)
        if (result.primal[j] != 0) opt += lp.objective[j] * result.primal[j];
    result.objective = opt;

    // Duals from the artificial columns' reduced costs: y_i = -r(a_i) for
    // the normalized min problem, mapped back through flips and direction.
    result.dual.assign(m, Rational(0));
    for (int i = 0; i < m; ++i) {
        Rational y = -tab.obj_row[tab.art_col(i)];
        if (flip[i] < 0) y = -y;
        if (maximize) y = -y;
        result.dual[i] = y;
    }

    // Exact verification: primal feasibility, dual feasibility, equal
    // objectives (strong duality witnessed exactly).
    for (int i = 0; i < m; ++i) {
        Rational lhs = 0;
        for (const auto& [j, c] : lp.rows[i].coeffs) lhs += c * result.primal[j];
        bool ok = lp.rows[i].sense == Sense::LE   ? lhs <= lp.rows[i].rhs
                  : lp.rows[i].sense == Sense::GE ? lhs >= lp.rows[i].rhs
                                                  : lhs == lp.rows[i].rhs;
        if (!ok) throw std::logic_error("simplex: primal infeasible at optimum");
    }
    // reduced costs of structural columns and dual sign conditions
    std::vector<Rational> ydota(n, Rational(0));
    for (int i = 0; i < m; ++i)
        for (const auto& [j, c] : lp.rows[i].coeffs) ydota[j] += result.dual[i] * c;
    for (int j = 0; j < n; ++j) {
        bool ok = maximize ? ydota[j] >= lp.objective[j] : ydota[j] <= lp.objective[j];
        if (!ok) throw std::logic_error("simplex: dual infeasible at optimum");
    }
    for (int i = 0; i < m; ++i) {
        if (lp.rows[i].sense == Sense::EQ) continue;
        bool nonneg = (lp.rows[i].sense == Sense::GE) != maximize;
        bool ok = nonneg ? result.dual[i] >= 0 : result.dual[i] <= 0;
        if (!ok) throw std::logic_error("simplex: dual sign violation");
    }
    Rational dual_obj = 0;
    for (int i = 0; i < m; ++i)
        if (result.dual[i] != 0) dual_obj += result.dual[i] * lp.rows[i].rhs;
    if (dual_obj != result.objective)
        throw std::logic_error("simplex: strong duality equation fails");
    return result;
}

}  // namespace fracext
