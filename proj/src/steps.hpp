// SPDX-License-Identifier: Apache-2.0
//
// Internal step registry shared by the suite runner and the step modules.

#pragma once

#include "certipoly/root_isolation.hpp"
#include "certipoly/suite.hpp"

#include <functional>

namespace certipoly::detail {

struct Context {
    const DataSet& d;
    const SuiteConfig& config;
    PrecisionBudget prec;
    SuiteCache& cache;

    std::optional<Interval> x0, x1, lambda_max;
    std::optional<Interval> t1, t2, p4_root, k0;
    std::optional<Polynomial> resultant;
    std::optional<Rational> content_resultant;
};

class StepOutput : public Evidence {
public:
    /// Records a certified enclosure with its 10-digit preview.
    void enclosure(const std::string& name, const Interval& iv);
    /// Informational: whether a published decimal lies in the 10-digit
    /// decimal enclosure of `iv`. Never affects the verdict.
    void published(const std::string& name, const Interval& iv, const Rational& value);

    std::vector<std::pair<std::string, std::string>> decimals;
    Json enclosures = Json::object();
};

struct StepDef {
    std::string id;
    std::string suite;
    std::vector<std::string> deps;
    std::vector<std::string> inputs;
    std::function<void(Context&, StepOutput&)> run;
};

inline constexpr int kPreviewDigits = 10;

std::vector<StepDef> theorem1_steps();
std::vector<StepDef> theorem2_steps();
std::vector<StepDef> conjecture_steps();

/// Sign list step body shared by the three discrimination checks.
void check_sign_list(StepOutput& out, const Polynomial& f, const SignList& expected, int expected_real);

}  // namespace certipoly::detail
