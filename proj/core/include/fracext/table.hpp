#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracext/closed_forms.hpp"
#include "fracext/extension.hpp"

namespace fracext {

struct TableRowSpec {
    int p, q, d;
    std::string paper_value;  // printed value, or "--"
    Rational allowance;       // |computed - printed| tolerance
};

// Reference rows (the published table restricted to desk scale).
std::vector<TableRowSpec> default_table_rows();
std::optional<TableRowSpec> find_table_row(int p, int q, int d);

struct TableRowResult {
    TableRowSpec spec;
    std::string status;  // "PASS", "FAIL", "NOTE" (no printed value), "ERROR"
    std::optional<ThresholdBracket> bracket;
    std::optional<GValue> closed_form;
    bool closed_form_in_bracket = false;
    std::string error;
    double seconds = 0;
};

struct TableRunConfig {
    Rational tol = rat(1, 1'000'000);
    int jobs = 0;  // 0 = hardware concurrency
    ExtensionSolveOptions solve;
};

std::vector<TableRowResult> run_table(const std::vector<TableRowSpec>& rows,
                                      const TableRunConfig& config);

std::string table_to_csv(const std::vector<TableRowResult>& results);
std::string table_to_json(const std::vector<TableRowResult>& results);
std::string table_to_text(const std::vector<TableRowResult>& results);

// CSV rows "p,q,d,eps_lo,eps_hi,closed_form,source" for threshold exports.
std::string threshold_csv_row(int p, int q, int d, const ThresholdBracket& bracket);

}  // namespace fracext
