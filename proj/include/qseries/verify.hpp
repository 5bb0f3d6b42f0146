#pragma once

// Executable vanishing-coefficient and coefficient-equality theorems.
//
// Every case reduces to a Claim checked exactly by `check`. Fixed cases are
// catalogued by suite name; the classical theorem families are run over
// parameter grids that enumerate valid tuples only, with the rejected
// tuples logged alongside the reports.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qseries/report.hpp"

namespace qseries::verify {

// Expands both sides at `order` and compares exactly. The failure index is
// the exponent of the offending left coefficient, except for equals_series
// where it is the index into the difference series.
VerificationReport check(const std::string& case_id, const Claim& claim, Exponent order);

// A named case whose report is produced on demand for a given order.
struct Case {
    std::string id;
    std::function<VerificationReport(Exponent)> run;
};

// Runs cases, optionally in parallel; reports come back in case order.
// Exceptions thrown by a case turn into a failed report.
std::vector<VerificationReport> run_cases(const std::vector<Case>& cases, Exponent order, bool parallel);

// --- theorem families -------------------------------------------------------

struct AndrewsBressoudParams {
    int k = 0, r = 0;
    Exponent residue = 0; // r (k - r + 1) / 2 mod k
};
AndrewsBressoudParams andrews_bressoud_params(int k, int r);
VerificationReport andrews_bressoud_case(int k, int r, Exponent order);

struct AlladiGordonParams {
    int m = 0, k = 0, s = 0;
    int r_star = 0, r = 0, r_prime = 0;
    Exponent residue = 0; // r r' mod k
};
AlladiGordonParams alladi_gordon_params(int m, int k, int s, bool companion);
VerificationReport alladi_gordon_case(int m, int k, int s, Exponent order);
VerificationReport alladi_gordon_companion(int m, int k, int s, Exponent order);

struct McLaughlinParams {
    int k = 0, m = 0, s = 0, t = 0;
    int r = 0;   // s m + t
    int low = 0; // r - t k
    Exponent residue = 0; // -r s mod k
};
McLaughlinParams mclaughlin_params(int k, int m, int s, int t, bool companion);
VerificationReport mclaughlin_case(int k, int m, int s, int t, Exponent order);
VerificationReport mclaughlin_companion(int k, int m, int s, int t, Exponent order);

struct GridRun {
    std::vector<VerificationReport> reports;
    std::vector<std::string> skipped; // "tuple: reason"
};

GridRun andrews_bressoud_grid(int k_max, Exponent order, bool parallel = false);
GridRun alladi_gordon_grid(int k_max, Exponent order, bool companion, bool parallel = false);
GridRun mclaughlin_grid(int km_max, Exponent order, bool companion, bool parallel = false);

// --- fixed catalog ----------------------------------------------------------

// Named product series used by the fixed cases ("a", "b", ..., "alpha").
struct NamedSeries {
    std::string name;
    std::string expr;
};
const std::vector<NamedSeries>& named_series();
ProductExpr series_expr(const std::string& name);

std::vector<VerificationReport> richmond_szekeres_suite(Exponent order, bool parallel = false);
std::vector<VerificationReport> catalog_suite(Exponent order, bool parallel = false);

std::vector<std::string> suite_names();

// Cases of a suite; throws std::invalid_argument for an unknown name.
std::vector<Case> suite_cases(const std::string& name, std::vector<std::string>* skipped = nullptr);

// --- serialization ----------------------------------------------------------

nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);
std::string render_jsonl(const std::vector<VerificationReport>& reports);
std::string render_table(const std::vector<VerificationReport>& reports);
std::string render_csv(const std::vector<VerificationReport>& reports);

} // namespace qseries::verify
