// SPDX-License-Identifier: Apache-2.0

#include "steps.hpp"

#include "certipoly/poly_io.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <set>
#include <sstream>

namespace certipoly {

namespace detail {

void StepOutput::enclosure(const std::string& name, const Interval& iv)
{
    enclosures[name] = to_json(iv);
    decimals.emplace_back(name, to_decimal(iv.midpoint(), kPreviewDigits));
}

void StepOutput::published(const std::string& name, const Interval& iv, const Rational& value)
{
    Json c = claim::published_decimal(name, iv, kPreviewDigits, value);
    const bool holds = c.at("holds").get<bool>();
    add(std::move(c));
    const Interval grid = decimal_enclosure(iv, kPreviewDigits);
    line(name + " in [" + to_decimal(grid.lo(), kPreviewDigits + 1) + ", " + to_decimal(grid.hi(), kPreviewDigits + 1) +
         "]; published " + to_decimal(value, kPreviewDigits) + (holds ? " lies inside" : " lies outside"));
}

void check_sign_list(StepOutput& out, const Polynomial& f, const SignList& expected, int expected_real)
{
    const SignList revised = revise_sign_list(sign_list(discriminant_sequence(f)));
    const bool same = revised.signs == expected.signs;
    out.line(format_sign_list(revised));
    out.require(same, claim::sign_list(f, expected, same), "revised sign list differs from the expected list");
    const int v = sign_changes(revised);
    const int real = nonvanishing(revised) - 2 * v;
    out.line("sign changes " + std::to_string(v) + ", distinct real roots " + std::to_string(real));
    if (real != expected_real)
        out.fail(std::to_string(real) + " distinct real roots, expected " + std::to_string(expected_real));
}

const std::vector<StepDef>& registry()
{
    static const std::vector<StepDef> all = [] {
        std::vector<StepDef> v = theorem1_steps();
        for (auto& s : theorem2_steps())
            v.push_back(std::move(s));
        for (auto& s : conjecture_steps())
            v.push_back(std::move(s));
        return v;
    }();
    return all;
}

const StepDef& step_def(const std::string& id)
{
    for (const auto& s : registry())
        if (s.id == id)
            return s;
    throw InvalidInput("unknown step " + id);
}

}  // namespace detail

using detail::registry;

void SuiteConfig::validate() const
{
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw InvalidInput("unknown suite " + suite);
    if (target_root_width <= 0)
        throw InvalidInput("target root width must be positive");
    precision.validate();
}

const StepRecord* Report::find(const std::string& id) const
{
    for (const auto& s : steps)
        if (s.id == id)
            return &s;
    return nullptr;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"theorem1", "theorem2", "conjecture", "all"};
    return names;
}

std::vector<std::string> suite_step_ids(const std::string& suite)
{
    std::set<std::string> wanted;
    std::vector<std::string> stack;
    for (const auto& s : registry())
        if (suite == "all" || s.suite == suite)
            stack.push_back(s.id);
    while (!stack.empty()) {
        const std::string id = stack.back();
        stack.pop_back();
        if (!wanted.insert(id).second)
            continue;
        for (const auto& dep : detail::step_def(id).deps)
            stack.push_back(dep);
    }
    std::vector<std::string> out;
    for (const auto& s : registry())
        if (wanted.count(s.id))
            out.push_back(s.id);
    return out;
}

Report run_suite(const SuiteConfig& config, const DataSet& data, SuiteCache* cache)
{
    config.validate();
    SuiteCache local;
    detail::Context ctx{data, config, config.precision, cache ? *cache : local, {}, {}, {}, {}, {}, {}, {}, {}, {}};
    Report report;
    report.suite = config.suite;
    report.verdict = Verdict::certified;
    std::map<std::string, Verdict> done;
    for (const auto& id : suite_step_ids(config.suite)) {
        const detail::StepDef& def = detail::step_def(id);
        StepRecord rec;
        rec.id = id;
        const auto anchor = data.anchors.find(id);
        rec.anchor = anchor == data.anchors.end() ? "" : anchor->second;
        for (const auto& file : def.inputs) {
            const auto digest = data.digests.find(file);
            rec.inputs[file] = digest == data.digests.end() ? "" : digest->second;
        }
        const auto blocked = std::find_if(def.deps.begin(), def.deps.end(),
                                          [&](const std::string& dep) { return done.at(dep) != Verdict::certified; });
        if (blocked != def.deps.end()) {
            rec.verdict = Verdict::indeterminate;
            rec.detail = "dependency " + *blocked + " not certified";
        } else {
            detail::StepOutput out;
            const auto start = std::chrono::steady_clock::now();
            try {
                def.run(ctx, out);
            } catch (const EvidenceStop&) {
            } catch (const Error& e) {
                out.verdict = Verdict::falsified;
                out.detail = e.what();
            }
            rec.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                         .count();
            rec.verdict = out.verdict;
            rec.detail = out.detail;
            rec.claims = std::move(out.claims);
            rec.decimals = std::move(out.decimals);
            rec.enclosures = std::move(out.enclosures);
            rec.lines = std::move(out.lines);
        }
        done[id] = rec.verdict;
        report.verdict = worst(report.verdict, rec.verdict);
        report.steps.push_back(std::move(rec));
    }
    return report;
}

Report run_suite(const SuiteConfig& config)
{
    config.validate();
    return run_suite(config, load_data_set(config.data_dir));
}

Json report_json(const Report& r, bool timing)
{
    Json j;
    j["suite"] = r.suite;
    j["verdict"] = to_string(r.verdict);
    j["steps"] = Json::array();
    for (const auto& s : r.steps) {
        Json step;
        step["id"] = s.id;
        step["anchor"] = s.anchor;
        step["verdict"] = to_string(s.verdict);
        if (!s.detail.empty())
            step["detail"] = s.detail;
        step["inputs"] = s.inputs;
        step["certificate"] = {{"claims", s.claims}, {"lines", s.lines}};
        Json dec = Json::object();
        for (const auto& [name, value] : s.decimals)
            dec[name] = value;
        step["decimals"] = dec;
        step["enclosures"] = s.enclosures;
        if (timing)
            step["ms"] = s.ms;
        j["steps"].push_back(std::move(step));
    }
    return j;
}

std::string report_text(const Report& r)
{
    std::ostringstream os;
    os << "suite " << r.suite << ": " << to_string(r.verdict) << "\n";
    for (const auto& s : r.steps) {
        os << "\n[" << to_string(s.verdict) << "] " << s.id << "  (" << s.ms << " ms)\n";
        if (!s.anchor.empty())
            os << "  at: " << s.anchor << "\n";
        if (!s.detail.empty())
            os << "  detail: " << s.detail << "\n";
        for (const auto& l : s.lines)
            os << "  " << l << "\n";
        for (const auto& [name, value] : s.decimals)
            os << "  " << name << " ~ " << value << "\n";
        os << "  claims: " << s.claims.size() << "\n";
    }
    return os.str();
}

void emit_report(const Report& r, const SuiteConfig& config, std::ostream& out)
{
    const std::string body = config.emit_json ? report_json(r).dump(2) + "\n" : report_text(r);
    out << body;
    if (!config.report_path.empty())
        write_text_file(config.report_path, body);
}

int exit_code(Verdict v)
{
    switch (v) {
    case Verdict::certified:
        return 0;
    case Verdict::falsified:
        return 1;
    case Verdict::indeterminate:
        return 2;
    }
    return 2;
}

RecheckSummary recheck_report(const Json& report)
{
    RecheckSummary out;
    for (const auto& step : report.at("steps")) {
        const std::string id = step.at("id").get<std::string>();
        if (!step.contains("certificate"))
            continue;
        const Json& claims = step.at("certificate").at("claims");
        for (std::size_t i = 0; i < claims.size(); ++i) {
            ++out.checked;
            const ClaimCheck c = recheck_claim(claims[i]);
            if (!c.ok)
                out.failures.push_back(id + "/" + std::to_string(i) + ": " + c.detail);
        }
    }
    return out;
}

}  // namespace certipoly
