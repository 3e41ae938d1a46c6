#include "fracext/table.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "fracext/errors.hpp"

namespace fracext {

std::vector<TableRowSpec> default_table_rows() {
    Rational tight = rat(5, 1'000'000);  // 5e-6
    Rational wide = rat(5, 100'000);     // 5e-5 for the one 4-decimal print
    return {
        {5, 2, 5, "0.4", tight},       {5, 2, 6, "--", tight},
        {5, 2, 7, "0.28571", tight},   {5, 2, 8, "0.23892", tight},
        {7, 3, 5, "0.42857", tight},   {7, 3, 6, "0.2863", wide},
        {7, 3, 7, "0.24324", tight},   {8, 3, 5, "0.375", tight},
        {9, 4, 5, "0.44444", tight},   {9, 4, 6, "0.31223", tight},
        {9, 4, 7, "0.26229", tight},   {10, 4, 5, "0.4", tight},
        {11, 4, 5, "0.36364", tight},  {11, 5, 5, "0.45454", tight},
        {11, 5, 6, "0.32945", tight},  {11, 5, 7, "0.27472", tight},
    };
}

std::optional<TableRowSpec> find_table_row(int p, int q, int d) {
    for (const auto& row : default_table_rows())
        if (row.p == p && row.q == q && row.d == d) return row;
    return std::nullopt;
}

namespace {

TableRowResult run_row(const TableRowSpec& spec, const TableRunConfig& config) {
    TableRowResult out;
    out.spec = spec;
    auto start = std::chrono::steady_clock::now();
    try {
        ExtensionSolver solver(spec.p, spec.q, spec.d, config.solve);
        out.bracket = solver.threshold(config.tol);
        Rational mid = (out.bracket->lo + out.bracket->hi) / 2;
        out.closed_form = g_best_known(rat(spec.p, spec.q), spec.d);
        if (out.closed_form) {
            const AlgebraicValue& v = out.closed_form->value;
            out.closed_form_in_bracket =
                v.compare(out.bracket->lo) >= 0 && v.compare(out.bracket->hi) <= 0;
        }
        if (spec.paper_value == "--") {
            out.status = "NOTE";
        } else {
            Rational printed = parse_rational(spec.paper_value);
            Rational delta = mid - printed;
            if (delta < 0) delta = -delta;
            out.status = delta <= spec.allowance ? "PASS" : "FAIL";
        }
    } catch (const budget_exceeded_error& e) {
        out.status = "ERROR";
        out.error = e.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace

std::vector<TableRowResult> run_table(const std::vector<TableRowSpec>& rows,
                                      const TableRunConfig& config) {
    std::vector<TableRowResult> results(rows.size());
    int jobs = config.jobs > 0 ? config.jobs : (int)std::thread::hardware_concurrency();
    jobs = std::max(1, std::min<int>(jobs, (int)rows.size()));
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= rows.size()) return;
            results[i] = run_row(rows[i], config);
        }
    };
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    return results;
}

std::string threshold_csv_row(int p, int q, int d, const ThresholdBracket& bracket) {
    std::ostringstream os;
    auto gv = g_best_known(rat(p, q), d);
    os << p << ',' << q << ',' << d << ',' << to_decimal_string(bracket.lo, 7) << ','
       << to_decimal_string(bracket.hi, 7) << ','
       << (gv ? gv->value.to_decimal_string(5) : std::string("")) << ','
       << (gv ? provenance_to_string(gv->provenance) : std::string("unknown"));
    return os.str();
}

std::string table_to_csv(const std::vector<TableRowResult>& results) {
    std::ostringstream os;
    os << "p,q,d,computed,paper,closed_form,provenance,closed_form_in_bracket,status\n";
    for (const auto& r : results) {
        os << r.spec.p << ',' << r.spec.q << ',' << r.spec.d << ',';
        if (r.bracket) os << to_decimal_string((r.bracket->lo + r.bracket->hi) / 2, 5);
        os << ',' << r.spec.paper_value << ',';
        if (r.closed_form) os << r.closed_form->value.to_decimal_string(5);
        os << ',' << (r.closed_form ? provenance_to_string(r.closed_form->provenance) : "")
           << ',' << (r.closed_form ? (r.closed_form_in_bracket ? "yes" : "no") : "") << ','
           << r.status << '\n';
    }
    return os.str();
}

std::string table_to_json(const std::vector<TableRowResult>& results) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json row;
        row["p"] = r.spec.p;
        row["q"] = r.spec.q;
        row["d"] = r.spec.d;
        row["paper"] = r.spec.paper_value;
        row["status"] = r.status;
        if (r.bracket) {
            row["eps_lo"] = to_string(r.bracket->lo);
            row["eps_hi"] = to_string(r.bracket->hi);
            row["computed"] = to_decimal_string((r.bracket->lo + r.bracket->hi) / 2, 5);
        }
        if (r.closed_form) {
            row["closed_form"] = r.closed_form->value.to_decimal_string(5);
            row["provenance"] = provenance_to_string(r.closed_form->provenance);
            row["closed_form_in_bracket"] = r.closed_form_in_bracket;
        }
        if (!r.error.empty()) row["error"] = r.error;
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"rows", rows}}.dump(2);
}

std::string table_to_text(const std::vector<TableRowResult>& results) {
    std::ostringstream os;
    os << "  p  q  d   computed      paper  closed-form  in-bracket  status\n";
    for (const auto& r : results) {
        char buf[160];
        std::string computed =
            r.bracket ? to_decimal_string((r.bracket->lo + r.bracket->hi) / 2, 5) : "-";
        std::string cf = r.closed_form ? r.closed_form->value.to_decimal_string(5) : "-";
        std::string inb = r.closed_form ? (r.closed_form_in_bracket ? "yes" : "NO") : "-";
        snprintf(buf, sizeof(buf), "%3d %2d %2d %10s %10s %12s %11s  %s\n", r.spec.p,
                 r.spec.q, r.spec.d, computed.c_str(), r.spec.paper_value.c_str(), cf.c_str(),
                 inb.c_str(), r.status.c_str());
        os << buf;
        if (!r.error.empty()) os << "      error: " << r.error << '\n';
    }
    return os.str();
}

}  // namespace fracext
