// SPDX-License-Identifier: Apache-2.0

#include "steps.hpp"

#include "certipoly/logsqrt.hpp"
#include "certipoly/theorems.hpp"

namespace certipoly::detail {

namespace {

/// No root of f in (lo, hi] and a nonzero sign at `at`, so f keeps that
/// sign on [at, hi] whenever lo <= at.
int constant_sign(StepOutput& out, const Polynomial& f, const Rational& lo, const Rational& hi, const Rational& at,
                  const std::string& name)
{
    const int n = sturm_chain(f).count(lo, hi);
    out.require(n == 0, claim::root_count(f, lo, hi, n), name + " has a root in the interval");
    const int s = f.sign_at(at);
    out.require(s != 0, claim::poly_sign(f, at, s), name + " vanishes at the sample point");
    return s;
}

Polynomial polynomial_of(StepOutput& out, const Expr& e, const std::string& name)
{
    const auto p = as_polynomial(e);
    if (!p)
        out.fail(name + " is not a polynomial");
    return *p;
}

void p_rederivation(Context& ctx, StepOutput& out)
{
    const DataSet& d = ctx.d;
    const Expr expected = div(mul(d.g4_numerator_factor, poly_expr(d.p)), d.g4_denominator);
    const bool ok = logsqrt_equal(differentiate_logsqrt(to_logsqrt(d.g), 4), to_logsqrt(expected));
    out.require(ok, claim::derivative(d.g, 4, expected, ok), "fourth derivative of g differs from 4x p(x) / denominator");
    out.line("g''''(x) = 4x p(x) / ((x^3-5x^2+15)^3 (x^2+3)^3 (x^2-3)^3), p of degree " +
             std::to_string(d.p.degree()));
}

void sign_list_p(Context& ctx, StepOutput& out) { check_sign_list(out, ctx.d.p, ctx.d.signs_p, ctx.d.p_real_roots); }

void p_positive(Context& ctx, StepOutput& out)
{
    const Polynomial& p = ctx.d.p;
    const Rational b = cauchy_bound(p);
    constant_sign(out, p, -b, b, ctx.d.t1.left_endpoint, "p");
    if (p.sign_at(ctx.d.t1.left_endpoint) < 0)
        out.fail("p is negative");
    out.line("p(x) > 0 for all real x");
}

void x0_isolation(Context& ctx, StepOutput& out)
{
    const Polynomial& c = ctx.d.c;
    const auto roots = isolate_real_roots(c);
    if (roots.empty())
        out.fail("x^3-5x^2+15 has no real root");
    const IsolatingInterval x0 = refine_root(c, roots.back(), ctx.config.target_root_width);
    out.require(sturm_chain(c).count(x0.lo, x0.hi) == 1, claim::root_count(c, x0.lo, x0.hi, 1),
                "x0 interval does not isolate a root");
    const Rational b = cauchy_bound(c);
    const int above = sturm_chain(c).count(x0.hi, b);
    out.require(above == 0, claim::root_count(c, x0.hi, b, above), "x0 is not the largest root");
    const Rational left = ctx.d.t1.left_endpoint;
    out.require(claim::rational_order("left endpoint below x0", left, x0.lo, true), "x0 is not right of 3");
    if (constant_sign(out, c, left, x0.lo, left, "c on (3, x0)") > 0)
        out.fail("c is positive on (3, x0)");
    out.line("c(x) < 0 on [3, x0)");
    ctx.x0 = x0.as_interval();
    out.enclosure("x0", *ctx.x0);
    out.published("x0", *ctx.x0, ctx.d.t1.x0);
}

void g4_negative(Context& ctx, StepOutput& out)
{
    const DataSet& d = ctx.d;
    const Interval x0 = *ctx.x0;
    const Rational left = d.t1.left_endpoint;
    const Polynomial num = polynomial_of(out, mul(d.g4_numerator_factor, poly_expr(d.p)), "numerator");
    const Polynomial den = polynomial_of(out, d.g4_denominator, "denominator");
    const Rational mid = (left + x0.lo()) / 2;
    const int sn = constant_sign(out, num, left, x0.hi(), mid, "numerator");
    const int sd = constant_sign(out, den, left, x0.lo(), mid, "denominator");
    // Across (x0.lo, x0.hi] the denominator vanishes only at x0 itself.
    const int at_x0 = sturm_chain(den).count(x0.lo(), x0.hi());
    out.require(at_x0 == 1, claim::root_count(den, x0.lo(), x0.hi(), at_x0),
                "denominator has another root next to x0");
    if (sn * sd > 0)
        out.fail("g'''' is positive on (3, x0)");
    out.line("g''''(x) < 0 on (3, x0): g''' strictly decreasing");
}

void g3_signs(Context& ctx, StepOutput& out)
{
    const DataSet& d = ctx.d;
    const Expr g3 = derivative_expr(d.g, 3);
    const SignCertificate at_left = certify_sign(g3, d.t1.left_endpoint, ctx.prec);
    out.expect_sign(at_left, +1, "g'''(3)");
    out.require(at_left.exact && at_left.value == Interval(d.t1.g3_at_left),
                claim::expr_enclosure(g3, Interval(d.t1.left_endpoint), at_left.bits_used, at_left.value),
                "g'''(3) is not exactly " + to_string(d.t1.g3_at_left));
    const bool same = check_specialization(d.g, 3, d.t1.g3_probe, d.g3_at_4);
    out.require(same, claim::specialization(d.g, 3, d.t1.g3_probe, d.g3_at_4, same),
                "g'''(4) differs from the closed form");
    const SignCertificate at_probe = certify_sign(d.g3_at_4, Interval(Rational(0)), ctx.prec);
    out.expect_sign(at_probe, -1, "g'''(4)");
    out.line("g'''(3) = " + to_string(d.t1.g3_at_left) + " exactly");
    out.line("g'''(4) = " + to_string(d.g3_at_4) + " in [" + to_decimal(at_probe.value.lo(), kPreviewDigits) + ", " +
             to_decimal(at_probe.value.hi(), kPreviewDigits) + "]");
}

void monotone_chain(Context& ctx, StepOutput& out)
{
    const Rational last = std::min(ctx.config.target_root_width, ctx.d.t1.x1_eval_width);
    MonotoneChainCertificate chain =
        certify_monotone_chain(ctx.d, *ctx.x0, ctx.config.target_root_width, last, ctx.prec);
    for (auto& c : chain.claims)
        out.add(std::move(c));
    if (chain.verdict == Verdict::falsified)
        out.fail(chain.detail);
    if (chain.verdict == Verdict::indeterminate)
        out.undecided(chain.detail);
    static const char* kNames[] = {"x4", "x3", "x2", "x1"};
    for (std::size_t i = 0; i < chain.roots.size(); ++i)
        out.enclosure(kNames[i], chain.roots[i]);
    out.published("x4", chain.roots[0], ctx.d.t1.x4);
    out.published("x1", chain.roots[3], ctx.d.t1.x1);
    ctx.x1 = chain.roots[3];
    out.line("each of g''', g'', g', g has exactly one root on (3, x0)");
}

void fprime_identity(Context& ctx, StepOutput& out)
{
    const DataSet& d = ctx.d;
    const Interval x0 = *ctx.x0;
    const Rational left = d.t1.left_endpoint;
    const Rational mid = (left + x0.lo()) / 2;

    const bool ok = check_log_quotient_derivative(d.f, d.fprime_factor, d.g);
    out.require(ok, claim::log_quotient_derivative(d.f, d.fprime_factor, d.g, ok),
                "f' ln(base)^2 differs from factor * g");

    // 0 < base < 1 on (3, x0]: base = n/m with n, m > 0 and m - n > 0.
    const LogSqrtExpression base = to_logsqrt(d.power_base);
    if (!base.log_terms.empty() || !base.sqrt_terms.empty())
        out.fail("base is not rational");
    const Polynomial& n = base.rational_part.num();
    const Polynomial& m = base.rational_part.den();
    if (constant_sign(out, n, left, x0.hi(), mid, "base numerator") < 0 ||
        constant_sign(out, m, left, x0.hi(), mid, "base denominator") < 0 ||
        constant_sign(out, m - n, left, x0.hi(), mid, "1 - base") < 0)
        out.fail("base is not inside (0, 1)");
    out.line("0 < base < 1 on (3, x0]: ln(base) < 0");

    // factor < 0 on (3, x0): the denominator's only root near x0 is x0.
    const LogSqrtExpression factor = to_logsqrt(d.fprime_factor);
    const Polynomial& fn = factor.rational_part.num();
    const Polynomial& fd = factor.rational_part.den();
    const int s = constant_sign(out, fn, left, x0.hi(), mid, "factor numerator") *
                  constant_sign(out, fd, left, x0.lo(), mid, "factor denominator");
    const int at_x0 = sturm_chain(fd).count(x0.lo(), x0.hi());
    out.require(at_x0 == 1, claim::root_count(fd, x0.lo(), x0.hi(), at_x0), "factor has another pole next to x0");
    if (s > 0)
        out.fail("factor is positive on (3, x0)");
    out.line("f' = factor * g / ln(base)^2 with factor < 0: f decreases on (3, x1) and increases on (x1, x0)");
}

void lambda_max(Context& ctx, StepOutput& out)
{
    const DataSet& d = ctx.d;
    const Interval x1 = *ctx.x1;
    const Expr fprime = div(mul(d.fprime_factor, d.g), int_pow(ln(d.power_base), 2));
    const Rational m = x1.midpoint();
    // Mean-value form: f(x1) in f(m) + f'(X)(X - m).
    PrecisionBudget p = ctx.prec;
    Interval lambda;
    for (;;) {
        const Interval fm = eval_expr(d.f, Interval(m), p);
        const Interval slope = eval_expr(fprime, x1, p);
        lambda = round_outward(fm + slope * (x1 - Interval(m)), p.working_bits);
        if (lambda.width() <= d.t1.lambda_max_width) {
            out.add(claim::expr_enclosure(d.f, Interval(m), p.working_bits, fm));
            out.add(claim::expr_enclosure(fprime, x1, p.working_bits, slope));
            break;
        }
        const auto next = p.grown();
        if (!next)
            out.undecided("f(x1) enclosure wider than " + to_decimal(d.t1.lambda_max_width, 3) + " at " +
                          std::to_string(p.working_bits) + " bits");
        p = *next;
    }
    out.add(claim::rational_order("lambda_max enclosure width", lambda.width(), d.t1.lambda_max_width, false));
    ctx.lambda_max = lambda;
    out.enclosure("lambda_max", lambda);
    out.published("lambda_max", lambda, d.t1.lambda_max);
    out.line("lambda_max = min f = f(x1)");
}

void power_inequality(Context& ctx, StepOutput& out)
{
    const Rational lambda = ctx.d.conjecture.lambda;
    if (lambda > ctx.lambda_max->lo()) {
        out.require(claim::rational_order("lambda <= lambda_max lower bound", lambda, ctx.lambda_max->lo(), false),
                    "lambda exceeds the certified lower bound of lambda_max");
    }
    PowerInequalityResult r = verify_power_inequality(ctx.d, *ctx.x0, *ctx.lambda_max, lambda,
                                                      ctx.d.t1.subdivision_limit, ctx.prec);
    for (auto& c : r.claims)
        out.add(std::move(c));
    if (r.verdict == Verdict::falsified)
        out.fail(r.detail);
    if (r.verdict == Verdict::indeterminate)
        out.undecided(r.detail);
    out.line("base^" + to_string(lambda) + " >= rhs on [3, oo): x = 3 identity, rhs <= 0 from x0, chain on (3, x0), " +
             std::to_string(r.boxes) + " subdivision boxes");
}

void equality_theorem1(Context& ctx, StepOutput& out)
{
    const Rational tol = ctx.d.t1.equality_tolerance;
    const Interval gap = equality_gap(EqualityCase::theorem1, *ctx.x1, *ctx.lambda_max, ctx.prec);
    const bool ok = -tol <= gap.lo() && gap.hi() <= tol;
    Json c = claim::triangle_equality(EqualityCase::theorem1, *ctx.x1, *ctx.lambda_max, ctx.prec.working_bits, tol, ok);
    if (!ok && gap.width() > tol) {
        out.add(c);
        out.undecided("relative gap enclosure wider than the tolerance");
    }
    out.require(ok, c, "sides of the equality differ by more than " + to_decimal(tol, 3));
    out.enclosure("relative_gap", gap);
    out.line("a:b:c = 2(x1^2-3):(x1^2+3):(x1^2+3) attains equality at lambda = f(x1)");
}

}  // namespace

std::vector<StepDef> theorem1_steps()
{
    return {
        {"p_rederivation", "theorem1", {}, {"g.expr", "g4_numerator_factor.expr", "g4_denominator.expr", "p.poly"},
         p_rederivation},
        {"sign_list_p", "theorem1", {}, {"p.poly", "signlist_p.txt", "constants.json"}, sign_list_p},
        {"p_positive", "theorem1", {"sign_list_p"}, {"p.poly", "constants.json"}, p_positive},
        {"x0_isolation", "theorem1", {}, {"c.poly", "constants.json"}, x0_isolation},
        {"g4_negative",
         "theorem1",
         {"p_rederivation", "p_positive", "x0_isolation"},
         {"g4_numerator_factor.expr", "g4_denominator.expr", "p.poly"},
         g4_negative},
        {"g3_signs", "theorem1", {}, {"g.expr", "g3_at_4.expr", "constants.json"}, g3_signs},
        {"monotone_chain", "theorem1", {"g4_negative", "g3_signs"}, {"g.expr", "constants.json"}, monotone_chain},
        {"fprime_identity",
         "theorem1",
         {"x0_isolation"},
         {"f.expr", "fprime_factor.expr", "g.expr", "power_base.expr"},
         fprime_identity},
        {"lambda_max",
         "theorem1",
         {"monotone_chain", "fprime_identity"},
         {"f.expr", "fprime_factor.expr", "g.expr", "power_base.expr", "constants.json"},
         lambda_max},
        {"power_inequality",
         "theorem1",
         {"lambda_max"},
         {"power_base.expr", "power_rhs.expr", "c.poly", "constants.json"},
         power_inequality},
        {"equality_theorem1", "theorem1", {"lambda_max"}, {"constants.json"}, equality_theorem1},
    };
}

}  // namespace certipoly::detail
