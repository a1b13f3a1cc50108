// SPDX-License-Identifier: Apache-2.0

#include "certipoly/theorems.hpp"

#include "certipoly/logsqrt.hpp"
#include "certipoly/root_isolation.hpp"

namespace certipoly {

Expr derivative_expr(const Expr& e, int k, const std::string& var)
{
    return to_expr(differentiate_logsqrt(to_logsqrt(e), k), var);
}

namespace {

/// Refines the single sign change of e on [lo, hi] (e(lo) > 0 > e(hi)) and
/// records the signs at both ends of the final bracket.
Interval refine_descending_root(Evidence& ev, const Expr& e, const Rational& lo, const Rational& hi,
                                const Rational& width, const PrecisionBudget& prec, const std::string& name)
{
    const SignChangeRoot r = refine_sign_change(e, lo, hi, +1, width, prec);
    if (r.verdict != Verdict::certified)
        ev.undecided(name + ": " + r.detail);
    if (r.lo == r.hi) {
        ev.expect_sign(certify_sign(e, r.lo, prec), 0, name + " exact root");
        return Interval(r.lo);
    }
    ev.expect_sign(certify_sign(e, r.lo, prec), +1, name + " bracket lower end");
    ev.expect_sign(certify_sign(e, r.hi, prec), -1, name + " bracket upper end");
    return {r.lo, r.hi};
}

}  // namespace

MonotoneChainCertificate certify_monotone_chain(const DataSet& d, const Interval& x0, const Rational& width,
                                                const Rational& last_width, const PrecisionBudget& prec)
{
    MonotoneChainCertificate out;
    Evidence ev;
    const Rational left = d.t1.left_endpoint;
    const Rational probe = x0.lo() - d.t1.probe_offset;
    try {
        ev.require(claim::rational_order("probe point below x0", d.t1.g3_probe, x0.lo(), true),
                   "probe point is not inside (left, x0)");
        const Expr g3 = derivative_expr(d.g, 3);
        ev.expect_sign(certify_sign(g3, left, prec), +1, "g''' at the left endpoint");
        ev.expect_sign(certify_sign(g3, d.t1.g3_probe, prec), -1, "g''' at the probe point");
        Interval root = refine_descending_root(ev, g3, left, d.t1.g3_probe, width, prec, "root of g'''");
        out.roots.push_back(root);

        for (int order = 2; order >= 0; --order) {
            const Expr gj = order == 0 ? d.g : derivative_expr(d.g, order);
            const std::string name = order == 0 ? "g" : "g" + std::string(static_cast<std::size_t>(order), '\'');
            const SignCertificate at_left = certify_sign(gj, left, prec);
            ev.expect_sign(at_left, 0, name + " at the left endpoint");
            if (!at_left.exact)
                ev.undecided(name + " at the left endpoint is not an exact zero");
            ev.expect_sign(certify_sign(gj, left + d.t1.probe_offset, prec), +1, name + " just right of the left endpoint");
            ev.expect_sign(certify_sign(gj, root.hi(), prec), +1, name + " at the previous root");
            ev.require(claim::rational_order("previous root below the probe", root.hi(), probe, true),
                       "previous root is not below the probe point");
            ev.expect_sign(certify_sign(gj, probe, prec), -1, name + " near x0");
            root = refine_descending_root(ev, gj, root.hi(), probe, order == 0 ? last_width : width, prec,
                                          "root of " + name);
            out.roots.push_back(root);
        }
        out.verdict = Verdict::certified;
    } catch (const EvidenceStop&) {
        out.verdict = ev.verdict;
        out.detail = ev.detail;
    }
    out.claims = std::move(ev.claims);
    return out;
}

PowerInequalityResult verify_power_inequality(const DataSet& d, const Interval& x0, const Interval& lambda_max,
                                              const Rational& lambda, long subdivision_limit,
                                              const PrecisionBudget& prec)
{
    if (lambda > lambda_max.lo())
        throw InvalidInput("lambda " + to_string(lambda) + " exceeds the certified lower bound of lambda_max");
    PowerInequalityResult out;
    Evidence ev;
    const Rational left = d.t1.left_endpoint;
    try {
        ev.add(claim::rational_order("lambda <= lambda_max lower bound", lambda, lambda_max.lo(), false));

        // Left endpoint: base = rhs = 1, so both sides agree for every lambda.
        const Interval base_left = eval_expr(d.power_base, Interval(left), prec);
        const Interval rhs_left = eval_expr(d.power_rhs, Interval(left), prec);
        const Interval one(d.t1.equilateral_value);
        ev.require(base_left == one,
                   claim::expr_enclosure(d.power_base, Interval(left), prec.working_bits, base_left),
                   "base differs from 1 at the left endpoint");
        ev.require(rhs_left == one, claim::expr_enclosure(d.power_rhs, Interval(left), prec.working_bits, rhs_left),
                   "right-hand side differs from 1 at the left endpoint");

        // From x0 on: c >= 0, so rhs = -2c/(x^2-3) <= 0 < base^lambda.
        const Rational bound = cauchy_bound(d.c);
        ev.require(d.c.sign_at(x0.hi()) > 0, claim::poly_sign(d.c, x0.hi(), d.c.sign_at(x0.hi())),
                   "c is not positive at the upper end of x0");
        ev.require(sturm_chain(d.c).count(x0.hi(), bound) == 0, claim::root_count(d.c, x0.hi(), bound, 0),
                   "c has a root beyond x0");
        ev.line("x >= x0: right-hand side <= 0");

        // (left, x0): lambda <= lambda_max.lo <= f(x1) <= f(x).
        ev.line("(3, x0): lambda <= lambda_max <= f(x)");

        const Expr gap = sub(mul(constant(lambda), ln(d.power_base)), ln(d.power_rhs));
        const PositivityResult pos = certify_positive_on(gap, d.t1.left_cut, x0.lo(), prec, subdivision_limit);
        out.boxes = pos.boxes;
        Json c = claim::positive_on(gap, d.t1.left_cut, x0.lo(), prec.working_bits, subdivision_limit, pos);
        if (pos.verdict == Verdict::falsified) {
            ev.add(c);
            ev.fail("lambda ln(base) - ln(rhs) is not positive at " + to_decimal(pos.witness->lo(), 12));
        }
        if (pos.verdict == Verdict::indeterminate) {
            ev.add(c);
            ev.undecided("subdivision limit of " + std::to_string(subdivision_limit) + " boxes reached");
        }
        ev.add(c);
        ev.line("subdivision on [" + to_decimal(d.t1.left_cut, 10) + ", x0): " + std::to_string(pos.boxes) + " boxes");
        out.verdict = Verdict::certified;
    } catch (const EvidenceStop&) {
        out.verdict = ev.verdict;
        out.detail = ev.detail;
    }
    out.claims = std::move(ev.claims);
    return out;
}

}  // namespace certipoly
