// SPDX-License-Identifier: Apache-2.0

#include "certipoly/logsqrt.hpp"

namespace certipoly {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
{
    if (den.is_zero())
        throw InvalidInput("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Polynomial::constant(Rational(1));
        return;
    }
    const Polynomial g = gcd(num, den);
    if (g.degree() > 0) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    const Rational lc = den.leading();
    num_ = num * (1 / lc);
    den_ = den * (1 / lc);
}

Rational RationalFunction::operator()(const Rational& x) const
{
    const Rational d = den_(x);
    if (d == 0)
        throw DomainError("rational function pole at " + to_string(x));
    return num_(x) / d;
}

Interval RationalFunction::operator()(const Interval& x, long round_bits) const
{
    const Interval d = den_(x, round_bits);
    if (d.contains_zero())
        throw DomainError("rational function denominator may vanish on the interval");
    return num_(x, round_bits) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
    if (a.den_ == b.den_)
        return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a) { return {-a.num_, a.den_}; }
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
{
    if (b.is_zero())
        throw InvalidInput("division by the zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction derivative(const RationalFunction& f)
{
    return {derivative(f.num()) * f.den() - f.num() * derivative(f.den()), f.den() * f.den()};
}

Expr to_expr(const RationalFunction& f, const std::string& var)
{
    if (f.den().degree() == 0)
        return poly_expr(f.num(), var);
    return div(poly_expr(f.num(), var), poly_expr(f.den(), var));
}

namespace {

void merge_terms(std::vector<LogSqrtTerm>& terms, bool drop_unit_argument)
{
    std::vector<LogSqrtTerm> out;
    for (auto& t : terms) {
        if (t.coefficient.is_zero())
            continue;
        if (drop_unit_argument && t.argument == RationalFunction(Polynomial::constant(Rational(1))))
            continue;
        bool merged = false;
        for (auto& o : out)
            if (o.argument == t.argument) {
                o.coefficient = o.coefficient + t.coefficient;
                merged = true;
                break;
            }
        if (!merged)
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const LogSqrtTerm& t) { return t.coefficient.is_zero(); });
    terms = std::move(out);
}

bool is_rational(const LogSqrtExpression& e) { return e.log_terms.empty() && e.sqrt_terms.empty(); }

}  // namespace

void LogSqrtExpression::normalize()
{
    merge_terms(log_terms, true);
    merge_terms(sqrt_terms, false);
}

LogSqrtExpression operator+(const LogSqrtExpression& a, const LogSqrtExpression& b)
{
    LogSqrtExpression out = a;
    out.rational_part = a.rational_part + b.rational_part;
    out.log_terms.insert(out.log_terms.end(), b.log_terms.begin(), b.log_terms.end());
    out.sqrt_terms.insert(out.sqrt_terms.end(), b.sqrt_terms.begin(), b.sqrt_terms.end());
    out.normalize();
    return out;
}

LogSqrtExpression operator*(const RationalFunction& r, const LogSqrtExpression& e)
{
    LogSqrtExpression out = e;
    out.rational_part = r * e.rational_part;
    for (auto& t : out.log_terms)
        t.coefficient = r * t.coefficient;
    for (auto& t : out.sqrt_terms)
        t.coefficient = r * t.coefficient;
    out.normalize();
    return out;
}

LogSqrtExpression operator-(const LogSqrtExpression& a, const LogSqrtExpression& b)
{
    return a + RationalFunction(Polynomial::constant(Rational(-1))) * b;
}

LogSqrtExpression differentiate_logsqrt(const LogSqrtExpression& e)
{
    LogSqrtExpression out;
    out.rational_part = derivative(e.rational_part);
    for (const auto& t : e.log_terms) {
        // (c ln a)' = c' ln a + c a'/a
        out.log_terms.push_back({derivative(t.coefficient), t.argument});
        out.rational_part = out.rational_part + t.coefficient * derivative(t.argument) / t.argument;
    }
    const RationalFunction two(Polynomial::constant(Rational(2)));
    for (const auto& t : e.sqrt_terms) {
        // (c sqrt a)' = (c' + c a' / (2a)) sqrt a
        const RationalFunction c = derivative(t.coefficient) + t.coefficient * derivative(t.argument) / (two * t.argument);
        out.sqrt_terms.push_back({c, t.argument});
    }
    out.normalize();
    return out;
}

LogSqrtExpression differentiate_logsqrt(const LogSqrtExpression& e, int k)
{
    LogSqrtExpression out = e;
    for (int i = 0; i < k; ++i)
        out = differentiate_logsqrt(out);
    return out;
}

namespace {

LogSqrtExpression rational(const RationalFunction& r)
{
    LogSqrtExpression e;
    e.rational_part = r;
    return e;
}

RationalFunction require_rational(const LogSqrtExpression& e, const char* where)
{
    if (!is_rational(e))
        throw InvalidInput(std::string("expression outside the log/sqrt class: ") + where);
    return e.rational_part;
}

}  // namespace

LogSqrtExpression to_logsqrt(const Expr& e)
{
    switch (e->kind) {
    case ExprKind::constant:
        return rational(RationalFunction(Polynomial::constant(e->value)));
    case ExprKind::variable:
        return rational(RationalFunction(Polynomial::x()));
    case ExprKind::add:
        return to_logsqrt(e->args[0]) + to_logsqrt(e->args[1]);
    case ExprKind::sub:
        return to_logsqrt(e->args[0]) - to_logsqrt(e->args[1]);
    case ExprKind::mul: {
        LogSqrtExpression a = to_logsqrt(e->args[0]);
        LogSqrtExpression b = to_logsqrt(e->args[1]);
        if (is_rational(a))
            return a.rational_part * b;
        return require_rational(b, "product of two transcendental factors") * a;
    }
    case ExprKind::div: {
        const RationalFunction d = require_rational(to_logsqrt(e->args[1]), "transcendental divisor");
        if (d.is_zero())
            throw InvalidInput("division by zero in expression");
        return (RationalFunction(Polynomial::constant(Rational(1))) / d) * to_logsqrt(e->args[0]);
    }
    case ExprKind::int_pow: {
        LogSqrtExpression b = to_logsqrt(e->args[0]);
        if (e->exponent == 1)
            return b;
        RationalFunction base = require_rational(b, "power of a transcendental term");
        RationalFunction acc(Polynomial::constant(Rational(1)));
        const long n = e->exponent < 0 ? -e->exponent : e->exponent;
        for (long i = 0; i < n; ++i)
            acc = acc * base;
        if (e->exponent < 0)
            acc = RationalFunction(Polynomial::constant(Rational(1))) / acc;
        return rational(acc);
    }
    case ExprKind::ln: {
        const RationalFunction a = require_rational(to_logsqrt(e->args[0]), "ln of a transcendental argument");
        LogSqrtExpression out;
        out.log_terms.push_back({RationalFunction(Polynomial::constant(Rational(1))), a});
        out.normalize();
        return out;
    }
    case ExprKind::sqrt: {
        const RationalFunction a = require_rational(to_logsqrt(e->args[0]), "sqrt of a transcendental argument");
        LogSqrtExpression out;
        out.sqrt_terms.push_back({RationalFunction(Polynomial::constant(Rational(1))), a});
        out.normalize();
        return out;
    }
    }
    throw InvalidInput("corrupt expression node");
}

Expr to_expr(const LogSqrtExpression& e, const std::string& var)
{
    Expr out = to_expr(e.rational_part, var);
    for (const auto& t : e.log_terms)
        out = add(out, mul(to_expr(t.coefficient, var), ln(to_expr(t.argument, var))));
    for (const auto& t : e.sqrt_terms)
        out = add(out, mul(to_expr(t.coefficient, var), sqrt(to_expr(t.argument, var))));
    return out;
}

}  // namespace certipoly
