// SPDX-License-Identifier: Apache-2.0

#include "certipoly/certify.hpp"

#include <algorithm>
#include <vector>

namespace certipoly {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::certified:
        return "certified";
    case Verdict::falsified:
        return "falsified";
    case Verdict::indeterminate:
        return "indeterminate";
    }
    return "indeterminate";
}

Verdict worst(Verdict a, Verdict b)
{
    auto rank = [](Verdict v) { return v == Verdict::certified ? 0 : v == Verdict::indeterminate ? 1 : 2; };
    return rank(a) >= rank(b) ? a : b;
}

SignCertificate certify_sign(const Expr& e, const Interval& at, const PrecisionBudget& prec)
{
    SignCertificate c;
    c.subject = to_string(e);
    c.at = at;
    AdaptiveValue v;
    try {
        v = eval_adaptive(e, at, prec);
    } catch (const ExprDomainError& err) {
        if (at.is_point())
            throw;
        // An interval argument may straddle a domain boundary at any precision.
        c.bits_used = prec.max_bits;
        c.note = err.what();
        return c;
    }
    c.value = v.value;
    c.bits_used = v.bits_used;
    c.exact = v.value.is_point();
    c.sign = v.value.certified_sign();
    if (!c.sign)
        c.note = "sign undecided at " + std::to_string(v.bits_used) + " bits";
    return c;
}

SignCertificate certify_sign(const Expr& e, const Rational& at, const PrecisionBudget& prec)
{
    return certify_sign(e, Interval(at), prec);
}

SignCertificate certify_sign(const LogSqrtExpression& e, const Rational& at, const PrecisionBudget& prec)
{
    return certify_sign(to_expr(e), Interval(at), prec);
}

bool recheck(const SignCertificate& c)
{
    if (!c.sign)
        return false;
    PrecisionBudget p;
    p.working_bits = c.bits_used;
    p.max_bits = c.bits_used;
    const Interval v = eval_expr(parse_expr(c.subject), c.at, p);
    return v.certified_sign() == c.sign;
}

SignChangeRoot refine_sign_change(const Expr& e, Rational lo, Rational hi, int sign_lo, const Rational& width,
                                  const PrecisionBudget& prec)
{
    SignChangeRoot out;
    if (!(lo < hi) || sign_lo == 0 || width <= 0)
        throw InvalidInput("refine_sign_change needs lo < hi, a nonzero sign and a positive width");
    static constexpr int kNudges[] = {4, 3, 5, 2, 6};  // eighths of the bracket
    while (hi - lo > width) {
        std::optional<int> s;
        Rational probe;
        for (int eighths : kNudges) {
            probe = lo + (hi - lo) * Rational(eighths, 8);
            const SignCertificate c = certify_sign(e, probe, prec);
            if (c.sign && *c.sign != 0) {
                s = c.sign;
                break;
            }
            if (c.sign && *c.sign == 0) {
                out.verdict = Verdict::certified;
                out.lo = probe;
                out.hi = probe;
                out.detail = "exact root at a probe point";
                return out;
            }
        }
        if (!s) {
            out.lo = lo;
            out.hi = hi;
            out.detail = "sign undecided near " + to_decimal(probe, 12);
            return out;
        }
        if (*s == sign_lo)
            lo = probe;
        else
            hi = probe;
    }
    out.verdict = Verdict::certified;
    out.lo = lo;
    out.hi = hi;
    return out;
}

PositivityResult certify_positive_on(const Expr& e, const Rational& lo, const Rational& hi,
                                     const PrecisionBudget& prec, long box_limit)
{
    PositivityResult out;
    std::vector<Interval> work{Interval(lo, hi)};
    while (!work.empty()) {
        if (out.boxes >= box_limit) {
            out.verdict = Verdict::indeterminate;
            out.witness = work.back();
            return out;
        }
        const Interval box = work.back();
        work.pop_back();
        ++out.boxes;
        std::optional<Interval> v;
        try {
            v = eval_expr(e, box, prec);
        } catch (const DomainError&) {
        }
        if (v && v->lo() > 0)
            continue;
        // A certified nonpositive value anywhere falsifies the claim.
        const Rational mid = box.midpoint();
        try {
            const Interval pv = eval_expr(e, Interval(mid), prec);
            if (pv.hi() <= 0) {
                out.verdict = Verdict::falsified;
                out.witness = Interval(mid);
                return out;
            }
        } catch (const DomainError&) {
            out.verdict = Verdict::falsified;
            out.witness = Interval(mid);
            return out;
        }
        if (box.is_point()) {
            out.verdict = Verdict::indeterminate;
            out.witness = box;
            return out;
        }
        work.emplace_back(mid, box.hi());
        work.emplace_back(box.lo(), mid);
    }
    out.verdict = Verdict::certified;
    return out;
}

namespace {

struct Measures {
    Interval s, r, big_r;
};

Measures measures(const Interval& a, const Interval& b, const Interval& c, const PrecisionBudget& prec)
{
    const long bits = prec.working_bits;
    const Interval half(Rational(1, 2));
    const Interval s = round_outward((a + b + c) * half, bits);
    const Interval heron = round_outward(s * (s - a) * (s - b) * (s - c), bits);
    if (heron.lo() <= 0)
        throw DomainError("degenerate triangle enclosure");
    const Interval area = interval_sqrt(heron, prec);
    return {s, round_outward(area / s, bits), round_outward(a * b * c / (Interval(Rational(4)) * area), bits)};
}

}  // namespace

Interval equality_gap(EqualityCase which, const Interval& param, const Interval& constant,
                      const PrecisionBudget& prec)
{
    const long bits = prec.working_bits;
    const Interval one(Rational(1));
    const Interval sqrt3 = interval_sqrt(Interval(Rational(3)), prec);
    Interval lhs, rhs;
    if (which == EqualityCase::theorem1) {
        const Interval x2 = round_outward(param * param, bits);
        const Interval a = Interval(Rational(2)) * (x2 - Interval(Rational(3)));
        const Interval b = x2 + Interval(Rational(3));
        const Measures m = measures(a, b, b, prec);
        const Interval ratio = round_outward(Interval(Rational(2)) * m.r / m.big_r, bits);
        const Interval power = interval_exp(round_outward(constant * interval_ln(ratio, prec), bits), prec);
        lhs = sqrt3 * m.s;
        rhs = Interval(Rational(10)) * m.r - m.r * power;
    } else {
        const Interval a = Interval(Rational(2)) * param;
        const Measures m = measures(a, one, one, prec);
        const Interval ratio = round_outward(Interval(Rational(2)) * m.r / m.big_r, bits);
        lhs = m.s;
        rhs = Interval(Rational(3)) * sqrt3 * m.r + constant * (one - pow(ratio, 5)) * m.r;
    }
    return round_outward((round_outward(lhs, bits) - round_outward(rhs, bits)) / round_outward(lhs, bits), bits);
}

}  // namespace certipoly
