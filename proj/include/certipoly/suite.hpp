// SPDX-License-Identifier: Apache-2.0
//
// Certification suites. A suite is a set of named steps; running it runs the
// dependency closure of those steps in a fixed order and collects one record
// per step. A step whose dependency did not certify is not run and is
// reported indeterminate.

#pragma once

#include "certipoly/claims.hpp"
#include "certipoly/data.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace certipoly {

struct SuiteConfig {
    std::string suite = "all";
    Rational target_root_width = Rational(1, 1000000) * Rational(1, 1000000);
    PrecisionBudget precision;
    std::filesystem::path data_dir = "data";
    std::filesystem::path report_path;  // empty: no report file
    bool emit_json = false;
    /// Throws InvalidInput for an unknown suite, a nonpositive width or an
    /// invalid precision budget.
    void validate() const;
};

struct StepRecord {
    std::string id;
    std::string anchor;
    Verdict verdict = Verdict::indeterminate;
    std::string detail;
    std::map<std::string, std::string> inputs;  // data file -> SHA-256
    Json claims = Json::array();
    std::vector<std::pair<std::string, std::string>> decimals;
    Json enclosures = Json::object();  // name -> ["lo", "hi"]
    std::vector<std::string> lines;
    long ms = 0;
};

struct Report {
    std::string suite;
    Verdict verdict = Verdict::indeterminate;
    std::vector<StepRecord> steps;
    const StepRecord* find(const std::string& id) const;
};

/// Expensive intermediate results reused across runs whose inputs match.
struct SuiteCache {
    std::optional<std::tuple<Polynomial, BivariatePolynomial, Polynomial>> resultant;  // (p, q, Res_t(p, q))
};

const std::vector<std::string>& suite_names();
/// Step ids run for a suite, dependencies included, in execution order.
std::vector<std::string> suite_step_ids(const std::string& suite);

Report run_suite(const SuiteConfig& config, const DataSet& data, SuiteCache* cache = nullptr);
/// Loads config.data_dir first; DataError propagates.
Report run_suite(const SuiteConfig& config);

/// {suite, verdict, steps: [{id, anchor, verdict, detail, inputs, certificate, decimals, enclosures, ms}]}.
/// Without timing the "ms" fields are omitted, so equal runs give equal JSON.
Json report_json(const Report& r, bool timing = true);
std::string report_text(const Report& r);
/// Text (or JSON with config.emit_json) to `out`; with a report path, the
/// same content is also written there.
void emit_report(const Report& r, const SuiteConfig& config, std::ostream& out);

/// 0 certified, 1 falsified, 2 indeterminate.
int exit_code(Verdict v);
inline constexpr int kExitUsage = 3;

struct RecheckSummary {
    int checked = 0;
    std::vector<std::string> failures;  // "step/index: detail"
};
/// Re-checks every claim of a JSON report from the report alone.
RecheckSummary recheck_report(const Json& report);

}  // namespace certipoly
