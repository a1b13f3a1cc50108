// SPDX-License-Identifier: Apache-2.0

#include "certipoly/data.hpp"
#include "certipoly/discrimination.hpp"
#include "certipoly/poly_io.hpp"
#include "certipoly/resultant.hpp"
#include "certipoly/root_isolation.hpp"
#include "certipoly/suite.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace certipoly;

namespace {

Rational parse_number(const std::string& s)
{
    return s.find('.') != std::string::npos ? parse_decimal(s) : parse_rational(s);
}

int cmd_verify(const std::string& suite, const std::string& width, long bits, long max_bits, const std::string& data,
               const std::string& report, bool json)
{
    SuiteConfig config;
    config.suite = suite;
    if (!width.empty())
        config.target_root_width = parse_number(width);
    config.precision.working_bits = std::min(bits, max_bits);
    config.precision.max_bits = max_bits;
    config.data_dir = data;
    config.report_path = report;
    config.emit_json = json;
    config.validate();
    const Report r = run_suite(config);
    emit_report(r, config, std::cout);
    for (const auto& s : r.steps)
        if (s.verdict != Verdict::certified)
            std::cerr << "step " << s.id << ": " << to_string(s.verdict) << (s.detail.empty() ? "" : ": ")
                      << s.detail << "\n";
    return exit_code(r.verdict);
}

int cmd_signlist(const std::string& path)
{
    const Polynomial f = load_polynomial(path);
    const SignList s = revise_sign_list(sign_list(discriminant_sequence(f)));
    const int v = sign_changes(s);
    std::cout << format_sign_list(s) << "\n";
    std::cout << "sign changes: " << v << "\n";
    std::cout << "distinct real roots: " << nonvanishing(s) - 2 * v << "\n";
    return 0;
}

int cmd_isolate(const std::string& path, const std::vector<std::string>& range, const std::string& width)
{
    const Polynomial f = load_polynomial(path);
    std::optional<std::pair<Rational, Rational>> r;
    if (range.size() == 2)
        r = std::make_pair(parse_number(range[0]), parse_number(range[1]));
    const Rational w = width.empty() ? Rational(0) : parse_number(width);
    for (auto iv : isolate_real_roots(f, r)) {
        if (w > 0)
            iv = refine_root(f, iv, w);
        std::cout << "[" << to_string(iv.lo) << ", " << to_string(iv.hi) << "]  ~ "
                  << to_decimal(iv.as_interval().midpoint(), 10) << "\n";
    }
    return 0;
}

int cmd_resultant(const std::string& p_path, const std::string& q_path)
{
    const Polynomial p = load_polynomial(p_path);
    const BivariatePolynomial q = load_bivariate(q_path);
    std::cout << format_polynomial(resultant_in_t(p, q)) << "\n";
    return 0;
}

int cmd_recheck(const std::string& path)
{
    const RecheckSummary s = recheck_report(Json::parse(read_text_file(path)));
    for (const auto& f : s.failures)
        std::cout << "FAIL " << f << "\n";
    std::cout << s.checked << " claims checked, " << s.failures.size() << " failed\n";
    return s.failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact certification of polynomial inequality constants"};
    app.require_subcommand(1);

    std::string suite, width, data = "data", report;
    long bits = PrecisionBudget{}.working_bits, max_bits = PrecisionBudget{}.max_bits;
    bool json = false;
    auto* verify = app.add_subcommand("verify", "Run a certification suite");
    verify->add_option("suite", suite, "theorem1, theorem2, conjecture or all")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--width", width, "Target root interval width (rational or decimal)");
    verify->add_option("--bits", bits, "Initial working precision in bits");
    verify->add_option("--max-bits", max_bits, "Precision ceiling in bits");
    verify->add_option("--data", data, "Data directory");
    verify->add_option("--report", report, "Also write the report to this file");
    verify->add_flag("--json", json, "Emit JSON instead of text");

    std::string poly_file;
    auto* signlist = app.add_subcommand("signlist", "Revised sign list of a polynomial's discriminant sequence");
    signlist->add_option("poly-file", poly_file)->required()->check(CLI::ExistingFile);

    std::vector<std::string> range;
    std::string iso_width;
    auto* isolate = app.add_subcommand("isolate", "Isolate the real roots of a polynomial");
    isolate->add_option("poly-file", poly_file)->required()->check(CLI::ExistingFile);
    isolate->add_option("--range", range, "Open search interval LO HI")->expected(2);
    isolate->add_option("--width", iso_width, "Refine each interval to this width");

    std::string t_file, bi_file;
    auto* resultant = app.add_subcommand("resultant", "Res_t(p, q) for p in t and q in (t, k)");
    resultant->add_option("poly-t-file", t_file)->required()->check(CLI::ExistingFile);
    resultant->add_option("bipoly-file", bi_file)->required()->check(CLI::ExistingFile);

    std::string report_file;
    auto* recheck = app.add_subcommand("recheck", "Re-check every claim of a JSON report");
    recheck->add_option("report", report_file)->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*verify)
            return cmd_verify(suite, width, bits, max_bits, data, report, json);
        if (*signlist)
            return cmd_signlist(poly_file);
        if (*isolate)
            return cmd_isolate(poly_file, range, iso_width);
        if (*resultant)
            return cmd_resultant(t_file, bi_file);
        return cmd_recheck(report_file);
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
