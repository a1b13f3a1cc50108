// Acceptance run: one PASS/FAIL line per criterion, pinned tolerances.
//
// Exit status is 0 when every criterion passes or is listed in
// --expect-fail; a listed criterion that passes is reported too.

#include "certipoly/data.hpp"
#include "certipoly/discrimination.hpp"
#include "certipoly/poly_io.hpp"
#include "certipoly/resultant.hpp"
#include "certipoly/root_isolation.hpp"
#include "certipoly/suite.hpp"
#include "certipoly/theorems.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

using namespace certipoly;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << s << " s";
    return os.str();
}

std::string show(const Interval& iv)
{
    return "[" + to_decimal(iv.lo(), 13) + ", " + to_decimal(iv.hi(), 13) + "]";
}

/// Distance from v to the interval (0 when inside).
Rational distance(const Interval& iv, const Rational& v)
{
    if (v < iv.lo())
        return iv.lo() - v;
    if (v > iv.hi())
        return v - iv.hi();
    return 0;
}

Outcome sign_list_check(const Polynomial& f, const std::vector<int>& expected, int changes, int real, double limit)
{
    const auto t0 = Clock::now();
    const SignList s = revise_sign_list(sign_list(discriminant_sequence(f)));
    const double t = seconds_since(t0);
    const int v = sign_changes(s);
    const int l = nonvanishing(s) - 2 * v;
    const bool pass = s.signs == expected && v == changes && l == real && t < limit;
    return {pass, format_sign_list(s) + "; changes " + std::to_string(v) + ", real " + std::to_string(l) + "; " +
                      fmt_seconds(t)};
}

Interval enclosure(const Report& r, const std::string& step, const std::string& name)
{
    const StepRecord* s = r.find(step);
    if (!s || !s->enclosures.contains(name))
        throw InvalidInput("report has no enclosure " + step + "/" + name);
    return interval_from_json(s->enclosures.at(name));
}

bool step_certified(const Report& r, const std::string& id)
{
    const StepRecord* s = r.find(id);
    return s && s->verdict == Verdict::certified;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance criteria"};
    std::string data_dir = "data", unit_tests, expect_fail;
    app.add_option("--data", data_dir)->required();
    app.add_option("--unit-tests", unit_tests, "unit test binary for the property suites")->required();
    app.add_option("--expect-fail", expect_fail, "comma-separated criterion numbers");
    CLI11_PARSE(app, argc, argv);

    std::set<int> expected_failures;
    {
        std::stringstream ss(expect_fail);
        for (std::string item; std::getline(ss, item, ',');)
            if (!item.empty())
                expected_failures.insert(std::stoi(item));
    }

    const DataSet d = load_data_set(data_dir);

    std::cout << "running the full suite..." << std::endl;
    SuiteConfig config;
    config.suite = "all";
    config.data_dir = data_dir;
    const auto suite_t0 = Clock::now();
    const Report report = run_suite(config, d);
    const double suite_seconds = seconds_since(suite_t0);
    std::cout << "suite all: " << to_string(report.verdict) << " in " << fmt_seconds(suite_seconds) << "\n\n";

    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;

    criteria.emplace_back("sign list of p (degree 18)", [&] {
        return sign_list_check(d.p, {1, 1, -1, 1, 1, -1, -1, -1, 1, 1, -1, -1, -1, 1, 1, -1, 1, -1}, 9, 0, 5.0);
    });
    criteria.emplace_back("sign list of p2 (degree 20)",
                          [&] { return sign_list_check(d.p2, d.signs_p2.signs, 8, 4, 5.0); });
    criteria.emplace_back("sign list of p5 (degree 40)",
                          [&] { return sign_list_check(d.p5, d.signs_p5.signs, 16, 8, 60.0); });

    criteria.emplace_back("p5 root placement", [&] {
        const auto t0 = Clock::now();
        std::vector<std::pair<Rational, Rational>> targets{{2, Rational(5, 2)}, {Rational(5, 2), 3}, {4, 8},
                                                           {1024, 2048}};
        for (std::size_t i = 0, n = targets.size(); i < n; ++i)
            targets.emplace_back(-targets[i].second, -targets[i].first);
        std::sort(targets.begin(), targets.end());
        const auto roots = isolate_real_roots(d.p5);
        bool pass = roots.size() == targets.size();
        for (std::size_t i = 0; pass && i < roots.size(); ++i) {
            IsolatingInterval r = roots[i];
            while (!(targets[i].first <= r.lo && r.hi <= targets[i].second) && r.width() > Rational(1, 1 << 30))
                r = refine_root(d.p5, r, r.width() / 2);
            pass = targets[i].first <= r.lo && r.hi <= targets[i].second;
        }
        const int inside = count_roots_in(d.p5, Rational(1, 2), Rational(9, 13));
        pass = pass && inside == 0;
        const double t = seconds_since(t0);
        return Outcome{pass && t < 60, std::to_string(roots.size()) + " roots, each inside its interval; " +
                                           std::to_string(inside) + " in (1/2, 9/13); " + fmt_seconds(t)};
    });

    criteria.emplace_back("refined roots match the published decimals", [&] {
        struct Item {
            const char* step;
            const char* name;
            const char* value;
            const char* tol;
        };
        const Item items[] = {
            {"x0_isolation", "x0", "4.113537611", "0.000000001"},
            {"monotone_chain", "x4", "3.016763142", "0.00000001"},
            {"monotone_chain", "x1", "3.067873979", "0.000000001"},
            {"t_roots", "t1", "0.5194285605", "0.000000001"},
            {"t_roots", "t2", "0.8281776966", "0.000000001"},
            {"k0", "k0", "0.6898369707", "0.000000001"},
        };
        bool pass = true;
        std::string detail;
        for (const auto& it : items) {
            const Interval iv = enclosure(report, it.step, it.name);
            const Rational tol = parse_decimal(it.tol);
            const bool ok = iv.width() <= 2 * tol && distance(iv, parse_decimal(it.value)) <= tol;
            pass = pass && ok;
            detail += std::string(it.name) + (ok ? " ok" : " MISS") + "; ";
        }
        return Outcome{pass, detail};
    });

    criteria.emplace_back("lambda_max interval of width <= 1e-8 containing 5.977930729", [&] {
        const Interval iv = enclosure(report, "lambda_max", "lambda_max");
        const Rational published = parse_decimal("5.977930729");
        const bool narrow = iv.width() <= Rational(1, 100000000);
        const bool inside = iv.contains(published);
        return Outcome{narrow && inside, "certified " + show(iv) + (narrow ? ", width ok" : ", too wide") +
                                             (inside ? ", contains" : ", excludes") + " 5.977930729 (off by " +
                                             to_decimal(distance(iv, published), 3) + ")"};
    });

    criteria.emplace_back("radical identity A^2 - 3*15360^2 (1-t^2)(1-t)^10 t^12 = p2 (t+1)(2t-1)^3", [&] {
        const auto t0 = Clock::now();
        const auto a = as_polynomial(d.hprime_numerator->args.at(0));
        if (!a)
            return Outcome{false, "polynomial part of the numerator not found"};
        const Polynomial t = Polynomial::x();
        const Polynomial one{1};
        const Polynomial radical = Rational(3 * 15360 * 15360) * (one - t * t) * pow(one - t, 10) * pow(t, 12);
        const Polynomial rhs = d.p2 * (t + one) * pow(Rational(2) * t - one, 3);
        const bool pass = (*a) * (*a) - radical == rhs;
        const double s = seconds_since(t0);
        return Outcome{pass && s < 5, std::string(pass ? "exact" : "differs") + "; " + fmt_seconds(s)};
    });

    criteria.emplace_back("p3 re-derived from the radical system", [&] {
        const auto t0 = Clock::now();
        const ReducedElimination e = eliminate_boundary_radicals();
        const auto normalize = [](const BivariatePolynomial& f) {
            const Rational lc = f.coefficients_in_t().back().leading();
            BivariatePolynomial g = f;
            g *= Rational(1) / lc;
            return g;
        };
        const bool pass = normalize(e.reduced) == normalize(d.p3);
        const double s = seconds_since(t0);
        return Outcome{pass && s < 30, std::string(pass ? "coefficient-for-coefficient match" : "mismatch") +
                                           ", deg_t " + std::to_string(e.reduced.degree_t()) + ", deg_k " +
                                           std::to_string(e.reduced.degree_k()) + "; " + fmt_seconds(s)};
    });

    criteria.emplace_back("Res_t(p2, p3) = m * p4 * p5 exactly", [&] {
        const auto t0 = Clock::now();
        const Polynomial r = resultant_in_t(d.p2, d.p3);
        const Polynomial claimed = Rational(d.m) * d.p4 * d.p5;
        const bool pass = r == claimed;
        const FactorizationVerdict v = verify_factorization(r, {d.p4, d.p5}, Rational(d.m));
        std::string detail = "deg " + std::to_string(r.degree()) + ", m has " +
                             std::to_string(to_string(d.m).size()) + " digits; " +
                             (pass ? "equal" : "not equal: " + v.detail);
        if (!pass) {
            // Informational: the relation with the eliminated t-content restored.
            const Rational content_res = resultant_univariate(d.p2, eliminate_boundary_radicals().t_content);
            detail += "; Res_t(p2, p3) * Res(p2, t-content) = m * p4 * p5 ";
            detail += (r * content_res == claimed) ? "holds" : "fails";
        }
        return Outcome{pass && seconds_since(t0) < 600, detail + "; " + fmt_seconds(seconds_since(t0))};
    });

    criteria.emplace_back("fourth derivative of g is 4x p(x) / den", [&] {
        const auto t0 = Clock::now();
        const LogSqrtExpression g4 = to_logsqrt(derivative_expr(d.g, 4));
        const auto num = as_polynomial(mul(d.g4_numerator_factor, poly_expr(d.p)));
        const auto den = as_polynomial(d.g4_denominator);
        bool pass = num && den && g4.log_terms.empty() && g4.sqrt_terms.empty() &&
                    g4.rational_part == RationalFunction(*num, *den);
        pass = pass && num && *as_polynomial(d.g4_numerator_factor) == Polynomial{0, 4};
        const double s = seconds_since(t0);
        return Outcome{pass && s < 10, std::string(pass ? "exact" : "differs") + "; " + fmt_seconds(s)};
    });

    criteria.emplace_back("g'''(3) = 3 exactly and g'''(4) < 0", [&] {
        const auto t0 = Clock::now();
        const Expr g3 = derivative_expr(d.g, 3);
        const bool exact = check_specialization(d.g, 3, Rational(3), constant(Rational(3)));
        const PrecisionBudget p;
        const Interval at3 = eval_expr(g3, Interval(Rational(3)), p);
        const SignCertificate at4 = certify_sign(g3, Rational(4), p);
        const bool neg = at4.sign && *at4.sign == -1;
        const double s = seconds_since(t0);
        return Outcome{exact && at3.contains(Rational(3)) && neg && s < 5,
                       std::string(exact ? "g'''(3) = 3" : "g'''(3) != 3") + ", g'''(4) in " + show(at4.value) +
                           "; " + fmt_seconds(s)};
    });

    criteria.emplace_back("conjecture certified", [&] {
        const Interval lambda = enclosure(report, "lambda_max", "lambda_max");
        const Interval k0 = enclosure(report, "k0", "k0");
        const bool ordered = Rational(5) < lambda.lo() && k0.lo() > 0 && Rational(1, 3) < k0.lo() * k0.lo();
        const bool pass = ordered && step_certified(report, "conjecture_lambda") &&
                          step_certified(report, "conjecture_k") && report.verdict == Verdict::certified &&
                          suite_seconds < 900;
        return Outcome{pass, "5 < " + to_decimal(lambda.lo(), 10) + ", sqrt(3)/3 < " + to_decimal(k0.lo(), 10) +
                                 "; overall " + to_string(report.verdict) + "; verify all " +
                                 fmt_seconds(suite_seconds)};
    });

    criteria.emplace_back("equality cases within 1e-8 relative", [&] {
        const Rational tol(1, 100000000);
        const Interval g1 = enclosure(report, "equality_theorem1", "relative_gap");
        const Interval g2 = enclosure(report, "equality_theorem2", "relative_gap");
        const auto within = [&](const Interval& g) { return -tol <= g.lo() && g.hi() <= tol; };
        return Outcome{within(g1) && within(g2), "gaps " + show(g1) + " and " + show(g2)};
    });

    criteria.emplace_back("property suites", [&] {
        const auto t0 = Clock::now();
        const std::string cmd = "\"" + unit_tests + "\" --test-suite=property,mutation --minimal";
        const int rc = std::system(cmd.c_str());
        return Outcome{rc == 0, "unit_tests property+mutation exit " + std::to_string(rc) + "; " +
                                    fmt_seconds(seconds_since(t0))};
    });

    int passed = 0;
    std::vector<int> unexpected;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int n = static_cast<int>(i) + 1;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        passed += o.pass;
        const bool expected = expected_failures.count(n) > 0;
        if (!o.pass && !expected)
            unexpected.push_back(n);
        std::cout << "C" << std::setw(2) << std::setfill('0') << n << std::setfill(' ') << " "
                  << (o.pass ? "PASS" : "FAIL") << (expected && !o.pass ? " (expected)" : "") << "  "
                  << criteria[i].first << ": " << o.detail << std::endl;
    }
    std::cout << "\n" << passed << "/" << criteria.size() << " criteria passed";
    if (!unexpected.empty()) {
        std::cout << "; unexpected failures:";
        for (int n : unexpected)
            std::cout << " C" << n;
    }
    std::cout << std::endl;
    return unexpected.empty() ? 0 : 1;
}
