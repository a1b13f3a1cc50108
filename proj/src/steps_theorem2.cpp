// SPDX-License-Identifier: Apache-2.0

#include "steps.hpp"

#include "certipoly/resultant.hpp"
#include "certipoly/theorems.hpp"

#include <algorithm>

namespace certipoly::detail {

namespace {

Interval range_of(const std::pair<Rational, Rational>& r) { return {r.first, r.second}; }

void sign_list_p2(Context& ctx, StepOutput& out)
{
    check_sign_list(out, ctx.d.p2, ctx.d.signs_p2, ctx.d.t2.p2_real_roots);
}

void t_roots(Context& ctx, StepOutput& out)
{
    const DataSet& d = ctx.d;
    const auto [lo, hi] = d.t2.t_range;
    const int n = sturm_chain(d.p2).count(lo, hi);
    out.require(n == 2, claim::root_count(d.p2, lo, hi, n), "p2 does not have exactly two roots in (1/2, 1]");
    const auto roots = isolate_real_roots(d.p2, d.t2.t_range);
    if (roots.size() != 2)
        out.fail("p2 does not have exactly two roots in (1/2, 1)");
    const Rational width = std::min(ctx.config.target_root_width, d.t2.t1_eval_width);
    const Interval t1 = refine_root(d.p2, roots[0], width).as_interval();
    const Interval t2 = refine_root(d.p2, roots[1], width).as_interval();
    out.add(claim::root_count(d.p2, t1.lo(), t1.hi(), 1));
    out.add(claim::root_count(d.p2, t2.lo(), t2.hi(), 1));
    out.require(claim::interval_subset("t1 inside (1/2, 3/5)", t1, range_of(d.t2.t1_range)),
                "t1 is outside (1/2, 3/5)");
    ctx.t1 = t1;
    ctx.t2 = t2;
    out.enclosure("t1", t1);
    out.enclosure("t2", t2);
    out.published("t1", t1, d.t2.t1);
    out.published("t2", t2, d.t2.t2);
}

Expr p2_times_cofactor(const DataSet& d) { return mul(poly_expr(d.p2, "t"), d.rationalized_cofactor); }

void rationalize(Context& ctx, StepOutput& out)
{
    const DataSet& d = ctx.d;
    const Expr rhs = p2_times_cofactor(d);
    const bool ok = check_rationalization(d.hprime_numerator, rhs);
    out.require(ok, claim::rationalization(d.hprime_numerator, rhs, ok),
                "A^2 - B^2 U differs from p2(t) (t+1)(2t-1)^3");
    out.line("A^2 - B^2 U = p2(t) (t+1)(2t-1)^3");
}

void hprime_form(Context& ctx, StepOutput& out)
{
    const DataSet& d = ctx.d;
    const Polynomial radicand{1, 0, -1};
    const bool ok = check_radical_derivative(d.h, d.hprime_numerator, d.hprime_denominator, radicand);
    out.require(ok, claim::radical_derivative(d.h, d.hprime_numerator, d.hprime_denominator, radicand, ok),
                "h' sqrt(1-t^2) * denominator differs from the numerator");
    const auto den = as_polynomial(d.hprime_denominator);
    if (!den)
        out.fail("denominator is not a polynomial");
    const auto [lo, hi] = d.t2.t_range;
    // The only root in (1/2, 1] is t = 1, so the denominator keeps one sign on (1/2, 1).
    const int n = sturm_chain(*den).count(lo, hi);
    out.require(n == 1, claim::root_count(*den, lo, hi, n), "denominator vanishes inside (1/2, 1)");
    out.require(den->sign_at(hi) == 0, claim::poly_sign(*den, hi, den->sign_at(hi)), "denominator is nonzero at 1");
    const Rational mid = (lo + hi) / 2;
    out.require(den->sign_at(mid) > 0, claim::poly_sign(*den, mid, den->sign_at(mid)),
                "denominator is negative on (1/2, 1)");
    out.line("sign h'(t) = sign of the numerator on (1/2, 1)");
}

void extraneous_root(Context& ctx, StepOutput& out)
{
    const SignCertificate c = certify_sign(ctx.d.hprime_numerator, *ctx.t2, ctx.prec);
    out.add(claim::expr_sign(c));
    if (!c.sign)
        out.undecided("numerator sign over t2 undecided: " + c.note);
    if (*c.sign == 0)
        out.fail("numerator vanishes at t2");
    out.line("numerator is nonzero on the t2 interval: t2 is extraneous");
}

void t1_minimum(Context& ctx, StepOutput& out)
{
    const DataSet& d = ctx.d;
    const Interval t1 = *ctx.t1;
    out.expect_sign(certify_sign(d.hprime_numerator, t1.lo(), ctx.prec), -1, "numerator below t1");
    out.expect_sign(certify_sign(d.hprime_numerator, t1.hi(), ctx.prec), +1, "numerator above t1");
    // Zeros of the numerator in (1/2, 1) are roots of p2 (t+1)(2t-1)^3 there.
    const auto cof = as_polynomial(d.rationalized_cofactor);
    if (!cof)
        out.fail("cofactor is not a polynomial");
    const auto [lo, hi] = d.t2.t_range;
    const int n = sturm_chain(*cof).count(lo, hi);
    out.require(n == 0, claim::root_count(*cof, lo, hi, n), "cofactor vanishes inside (1/2, 1]");
    out.line("h decreases on (1/2, t1) and increases on (t1, 1): min h = h(t1)");
}

void p3_rederivation(Context& ctx, StepOutput& out)
{
    const ReducedElimination e = eliminate_boundary_radicals();
    const BivariatePolynomial& p3 = ctx.d.p3;
    if (p3.is_zero() || e.reduced.degree_t() != p3.degree_t())
        out.fail("eliminant and p3 differ in t-degree");
    const std::size_t top = static_cast<std::size_t>(p3.degree_t());
    const Rational scale = e.reduced.coeff_t(top).leading() / p3.coeff_t(top).leading();
    const bool ok = e.reduced == p3 * scale;
    out.require(ok, claim::elimination(p3, e.t_content, scale, ok), "eliminant differs from p3");
    out.line("eliminant = " + to_string(scale) + " * p3(t, k) after dividing out " + to_string(e.t_content, "t"));
}

void resultant_step(Context& ctx, StepOutput& out)
{
    const DataSet& d = ctx.d;
    auto& cached = ctx.cache.resultant;
    if (!cached || std::get<0>(*cached) != d.p2 || std::get<1>(*cached) != d.p3)
        cached.emplace(d.p2, d.p3, resultant_in_t(d.p2, d.p3));
    const Polynomial& r = std::get<2>(*cached);
    out.add(claim::resultant(d.p2, d.p3, r));
    const Polynomial content = eliminate_boundary_radicals().t_content;
    const Rational rc = resultant_univariate(d.p2, content);
    out.add(claim::resultant_value(d.p2, content, rc));
    ctx.resultant = r;
    ctx.content_resultant = rc;
    out.line("Res_t(p2, p3) has degree " + std::to_string(r.degree()) + " in k");
}

void factorization(Context& ctx, StepOutput& out)
{
    const DataSet& d = ctx.d;
    const std::vector<Polynomial> factors{d.p4, d.p5};
    const Rational m(d.m);
    const Polynomial full = *ctx.resultant * *ctx.content_resultant;
    const FactorizationVerdict v = verify_factorization(full, factors, m);
    out.require(v.holds, claim::factorization(full, factors, m, v.holds),
                "Res_t(p2, eliminant before content removal) != m p4 p5: " + v.detail);
    // Recorded for comparison: the reduced eliminant alone carries a different constant.
    const FactorizationVerdict reduced = verify_factorization(*ctx.resultant, factors, m);
    out.add(claim::factorization(*ctx.resultant, factors, m, reduced.holds));
    out.line("Res_t(p2, p3) * Res(p2, content) = m p4(k) p5(k)");
    out.line(std::string("Res_t(p2, p3) = m p4(k) p5(k): ") + (reduced.holds ? "holds" : "does not hold"));
}

void sign_list_p5(Context& ctx, StepOutput& out)
{
    check_sign_list(out, ctx.d.p5, ctx.d.signs_p5, ctx.d.t2.p5_real_roots);
}

void p5_placement(Context& ctx, StepOutput& out)
{
    const DataSet& d = ctx.d;
    auto targets = d.t2.p5_intervals;
    std::sort(targets.begin(), targets.end());
    auto roots = isolate_real_roots(d.p5);
    if (roots.size() != targets.size())
        out.fail("p5 has " + std::to_string(roots.size()) + " real roots, expected " + std::to_string(targets.size()));
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const Interval target = range_of(targets[i]);
        IsolatingInterval r = roots[i];
        // Shrink until the isolating interval sits inside its target.
        while (!target.contains(r.as_interval()) && r.width() > target.width() / 1024)
            r = refine_root(d.p5, r, r.width() / 2);
        out.add(claim::root_count(d.p5, r.lo, r.hi, 1));
        out.require(claim::interval_subset("p5 root " + std::to_string(i + 1), r.as_interval(), target),
                    "p5 root near " + to_decimal(r.lo, 6) + " is outside [" + to_string(target.lo()) + ", " +
                        to_string(target.hi()) + "]");
    }
    const auto [lo, hi] = d.t2.k_range;
    const int n = sturm_chain(d.p5).count(lo, hi);
    out.require(n == 0 && d.p5.sign_at(hi) != 0, claim::root_count(d.p5, lo, hi, n), "p5 has a root in (1/2, 9/13)");
    out.line("p5 has no root in (1/2, 9/13)");
}

void p4_root(Context& ctx, StepOutput& out)
{
    const DataSet& d = ctx.d;
    const auto [lo, hi] = d.t2.k_range;
    const int n = sturm_chain(d.p4).count(lo, hi);
    out.require(n == 1 && d.p4.sign_at(hi) != 0, claim::root_count(d.p4, lo, hi, n),
                "p4 does not have exactly one root in (1/2, 9/13)");
    const auto roots = isolate_real_roots(d.p4, d.t2.k_range);
    if (roots.size() != 1)
        out.fail("p4 does not have exactly one root in (1/2, 9/13)");
    const IsolatingInterval r = refine_root(d.p4, roots[0], ctx.config.target_root_width);
    out.add(claim::root_count(d.p4, r.lo, r.hi, 1));
    ctx.p4_root = r.as_interval();
    out.enclosure("p4_root", *ctx.p4_root);
}

void k0_step(Context& ctx, StepOutput& out)
{
    const DataSet& d = ctx.d;
    const Interval h_t1 = eval_expr(d.h, *ctx.t1, ctx.prec);
    out.add(claim::expr_enclosure(d.h, *ctx.t1, ctx.prec.working_bits, h_t1));
    out.require(claim::interval_subset("h(t1) inside (1/2, 9/13)", h_t1, range_of(d.t2.k_range)),
                "h(t1) is outside (1/2, 9/13)");
    // h(t1) is a root of m p4 p5 in (1/2, 9/13); p5 has none there and p4 exactly one.
    if (!h_t1.intersects(*ctx.p4_root))
        out.fail("h(t1) misses the root of p4");
    const Interval k0 = intersect(h_t1, *ctx.p4_root);
    out.require(claim::interval_subset("k0 inside the p4 root interval", k0, *ctx.p4_root), "k0 enclosure is empty");
    ctx.k0 = k0;
    out.enclosure("k0", k0);
    out.published("k0", k0, d.t2.k0);
    out.line("k0 = h(t1) = the root of p4 in (1/2, 9/13)");
}

void equality_theorem2(Context& ctx, StepOutput& out)
{
    const Rational tol = ctx.d.t2.equality_tolerance;
    const Interval gap = equality_gap(EqualityCase::theorem2, *ctx.t1, *ctx.k0, ctx.prec);
    const bool ok = -tol <= gap.lo() && gap.hi() <= tol;
    Json c = claim::triangle_equality(EqualityCase::theorem2, *ctx.t1, *ctx.k0, ctx.prec.working_bits, tol, ok);
    if (!ok && gap.width() > tol) {
        out.add(c);
        out.undecided("relative gap enclosure wider than the tolerance");
    }
    out.require(ok, c, "sides of the equality differ by more than " + to_decimal(tol, 3));
    out.enclosure("relative_gap", gap);
    out.line("a:b:c = 2t1:1:1 attains equality at k = k0");
}

void conjecture_lambda(Context& ctx, StepOutput& out)
{
    const Rational lambda = ctx.d.conjecture.lambda;
    out.require(claim::rational_order("lambda < lambda_max lower bound", lambda, ctx.lambda_max->lo(), true),
                to_string(lambda) + " is not below the certified lambda_max");
    out.line("sqrt(3) p >= 10r - r(2r/R)^" + to_string(lambda) + " for every triangle");
}

void conjecture_k(Context& ctx, StepOutput& out)
{
    const Rational lo = ctx.k0->lo();
    const Rational k2 = ctx.d.conjecture.k_squared;
    out.require(claim::rational_order("0 < k0 lower bound", Rational(0), lo, true), "k0 lower bound is not positive");
    out.require(claim::rational_order("k^2 < (k0 lower bound)^2", k2, lo * lo, true),
                "sqrt(" + to_string(k2) + ") is not below the certified k0");
    out.line("p >= 3 sqrt(3) r + sqrt(" + to_string(k2) + ") [1 - (2r/R)^5] r for every triangle");
}

}  // namespace

std::vector<StepDef> theorem2_steps()
{
    return {
        {"sign_list_p2", "theorem2", {}, {"p2.poly", "signlist_p2.txt", "constants.json"}, sign_list_p2},
        {"t_roots", "theorem2", {"sign_list_p2"}, {"p2.poly", "constants.json"}, t_roots},
        {"rationalize", "theorem2", {}, {"hprime_numerator.expr", "rationalized_cofactor.expr", "p2.poly"}, rationalize},
        {"hprime_form",
         "theorem2",
         {"rationalize"},
         {"h.expr", "hprime_numerator.expr", "hprime_denominator.expr", "constants.json"},
         hprime_form},
        {"extraneous_root", "theorem2", {"t_roots", "hprime_form"}, {"hprime_numerator.expr"}, extraneous_root},
        {"t1_minimum",
         "theorem2",
         {"t_roots", "hprime_form", "extraneous_root"},
         {"hprime_numerator.expr", "rationalized_cofactor.expr", "constants.json"},
         t1_minimum},
        {"p3_rederivation", "theorem2", {}, {"p3.bipoly"}, p3_rederivation},
        {"resultant", "theorem2", {"p3_rederivation"}, {"p2.poly", "p3.bipoly"}, resultant_step},
        {"verify_factorization", "theorem2", {"resultant"}, {"p4.poly", "p5.poly", "m.txt"}, factorization},
        {"sign_list_p5", "theorem2", {}, {"p5.poly", "signlist_p5.txt", "constants.json"}, sign_list_p5},
        {"p5_placement", "theorem2", {"sign_list_p5"}, {"p5.poly", "constants.json"}, p5_placement},
        {"p4_root", "theorem2", {"verify_factorization"}, {"p4.poly", "constants.json"}, p4_root},
        {"k0", "theorem2", {"t1_minimum", "p4_root", "p5_placement"}, {"h.expr", "constants.json"}, k0_step},
        {"equality_theorem2", "theorem2", {"k0"}, {"constants.json"}, equality_theorem2},
    };
}

std::vector<StepDef> conjecture_steps()
{
    return {
        {"conjecture_lambda", "conjecture", {"lambda_max", "power_inequality"}, {"constants.json"}, conjecture_lambda},
        {"conjecture_k", "conjecture", {"k0"}, {"constants.json"}, conjecture_k},
    };
}

}  // namespace certipoly::detail
