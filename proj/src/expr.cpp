// SPDX-License-Identifier: Apache-2.0

#include "certipoly/expr.hpp"

#include <cctype>

namespace certipoly {

namespace {

Expr node(ExprKind kind, std::vector<Expr> args)
{
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->args = std::move(args);
    return n;
}

const char* op_name(ExprKind k)
{
    switch (k) {
    case ExprKind::add:
        return "add";
    case ExprKind::sub:
        return "sub";
    case ExprKind::mul:
        return "mul";
    case ExprKind::div:
        return "div";
    case ExprKind::int_pow:
        return "pow";
    case ExprKind::sqrt:
        return "sqrt";
    case ExprKind::ln:
        return "ln";
    default:
        return "";
    }
}

}  // namespace

Expr constant(const Rational& c)
{
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::constant;
    n->value = c;
    return n;
}

Expr variable(const std::string& name)
{
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::variable;
    n->name = name;
    return n;
}

Expr add(Expr a, Expr b) { return node(ExprKind::add, {std::move(a), std::move(b)}); }
Expr sub(Expr a, Expr b) { return node(ExprKind::sub, {std::move(a), std::move(b)}); }
Expr mul(Expr a, Expr b) { return node(ExprKind::mul, {std::move(a), std::move(b)}); }
Expr div(Expr a, Expr b) { return node(ExprKind::div, {std::move(a), std::move(b)}); }
Expr sqrt(Expr a) { return node(ExprKind::sqrt, {std::move(a)}); }
Expr ln(Expr a) { return node(ExprKind::ln, {std::move(a)}); }

Expr int_pow(Expr base, long exponent)
{
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::int_pow;
    n->exponent = exponent;
    n->args = {std::move(base)};
    return n;
}

Expr poly_expr(const Polynomial& f, const std::string& var)
{
    if (f.is_zero())
        return constant(Rational(0));
    Expr out;
    const Expr x = variable(var);
    for (int i = f.degree(); i >= 0; --i) {
        const Rational c = f.coeff(static_cast<std::size_t>(i));
        if (c == 0)
            continue;
        Expr term = i == 0 ? constant(c) : i == 1 ? mul(constant(c), x) : mul(constant(c), int_pow(x, i));
        out = out ? add(out, term) : term;
    }
    return out;
}

std::optional<Polynomial> as_polynomial(const Expr& e)
{
    switch (e->kind) {
    case ExprKind::constant:
        return Polynomial::constant(e->value);
    case ExprKind::variable:
        return Polynomial::x();
    case ExprKind::add:
    case ExprKind::sub:
    case ExprKind::mul: {
        auto a = as_polynomial(e->args[0]);
        auto b = as_polynomial(e->args[1]);
        if (!a || !b)
            return std::nullopt;
        if (e->kind == ExprKind::add)
            return *a + *b;
        if (e->kind == ExprKind::sub)
            return *a - *b;
        return *a * *b;
    }
    case ExprKind::div: {
        auto a = as_polynomial(e->args[0]);
        auto b = as_polynomial(e->args[1]);
        if (!a || !b || b->degree() != 0)
            return std::nullopt;
        return *a * (1 / b->coeff(0));
    }
    case ExprKind::int_pow: {
        auto a = as_polynomial(e->args[0]);
        if (!a || e->exponent < 0)
            return std::nullopt;
        return pow(*a, static_cast<unsigned>(e->exponent));
    }
    default:
        return std::nullopt;
    }
}

std::string to_string(const Expr& e)
{
    switch (e->kind) {
    case ExprKind::constant:
        return to_string(e->value);
    case ExprKind::variable:
        return e->name;
    case ExprKind::int_pow:
        return "(pow " + to_string(e->args[0]) + " " + std::to_string(e->exponent) + ")";
    default: {
        std::string s = "(";
        s += op_name(e->kind);
        for (const auto& a : e->args)
            s += " " + to_string(a);
        return s + ")";
    }
    }
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr parse()
    {
        Expr e = expr();
        skip_space();
        if (pos_ != text_.size())
            fail("trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError("expression: " + msg + " at offset " + std::to_string(pos_));
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string atom()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
               !std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a token");
        return std::string(text_.substr(start, pos_ - start));
    }

    Expr expr()
    {
        skip_space();
        if (pos_ >= text_.size())
            fail("unexpected end");
        if (text_[pos_] == ')')
            fail("unexpected ')'");
        if (text_[pos_] != '(') {
            std::string tok = atom();
            if (std::isalpha(static_cast<unsigned char>(tok[0])))
                return variable(tok);
            return constant(parse_rational(tok));
        }
        ++pos_;
        const std::string op = atom();
        std::vector<Expr> args;
        long exponent = 0;
        for (;;) {
            skip_space();
            if (pos_ >= text_.size())
                fail("unbalanced '('");
            if (text_[pos_] == ')') {
                ++pos_;
                break;
            }
            if (op == "pow" && args.size() == 1) {
                exponent = parse_integer(atom()).get_si();
                continue;
            }
            args.push_back(expr());
        }
        auto need = [&](std::size_t n) {
            if (args.size() != n)
                fail("'" + op + "' takes " + std::to_string(n) + " operand(s)");
        };
        if (op == "add" || op == "mul") {
            if (args.size() < 2)
                fail("'" + op + "' takes at least two operands");
            Expr acc = args[0];
            for (std::size_t i = 1; i < args.size(); ++i)
                acc = op == "add" ? add(acc, args[i]) : mul(acc, args[i]);
            return acc;
        }
        if (op == "sub" || op == "div") {
            need(2);
            return op == "sub" ? sub(args[0], args[1]) : div(args[0], args[1]);
        }
        if (op == "pow") {
            need(1);
            return int_pow(args[0], exponent);
        }
        if (op == "sqrt" || op == "ln") {
            need(1);
            return op == "sqrt" ? sqrt(args[0]) : ln(args[0]);
        }
        fail("unknown operator '" + op + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

Interval tidy(const Interval& v, long bits)
{
    return v.is_point() ? v : round_outward(v, bits);
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

Interval eval_expr(const Expr& e, const Interval& at, const PrecisionBudget& prec)
{
    const long bits = prec.working_bits;
    switch (e->kind) {
    case ExprKind::constant:
        return Interval(e->value);
    case ExprKind::variable:
        return at;
    case ExprKind::add:
        return tidy(eval_expr(e->args[0], at, prec) + eval_expr(e->args[1], at, prec), bits);
    case ExprKind::sub:
        return tidy(eval_expr(e->args[0], at, prec) - eval_expr(e->args[1], at, prec), bits);
    case ExprKind::mul:
        return tidy(eval_expr(e->args[0], at, prec) * eval_expr(e->args[1], at, prec), bits);
    case ExprKind::div: {
        const Interval den = eval_expr(e->args[1], at, prec);
        if (den.contains_zero())
            throw ExprDomainError("division by an interval containing zero", to_string(e->args[1]));
        return tidy(eval_expr(e->args[0], at, prec) / den, bits);
    }
    case ExprKind::int_pow: {
        const Interval b = eval_expr(e->args[0], at, prec);
        if (e->exponent < 0 && b.contains_zero())
            throw ExprDomainError("negative power of an interval containing zero", to_string(e->args[0]));
        return tidy(pow(b, e->exponent), bits);
    }
    case ExprKind::sqrt: {
        const Interval a = eval_expr(e->args[0], at, prec);
        if (a.lo() < 0)
            throw ExprDomainError("sqrt of a possibly negative value", to_string(e->args[0]));
        return interval_sqrt(a, prec);
    }
    case ExprKind::ln: {
        const Interval a = eval_expr(e->args[0], at, prec);
        if (a.lo() <= 0)
            throw ExprDomainError("ln of a possibly nonpositive value", to_string(e->args[0]));
        return interval_ln(a, prec);
    }
    }
    throw InvalidInput("corrupt expression node");
}

AdaptiveValue eval_adaptive(const Expr& e, const Interval& at, const PrecisionBudget& prec)
{
    prec.validate();
    PrecisionBudget cur = prec;
    for (;;) {
        AdaptiveValue out;
        auto next = cur.grown();
        try {
            out.value = eval_expr(e, at, cur);
        } catch (const ExprDomainError&) {
            // Rounding can push an enclosure across a domain boundary.
            if (!next)
                throw;
            cur = *next;
            continue;
        }
        out.bits_used = cur.working_bits;
        out.sign_decided = out.value.certified_sign().has_value();
        if (out.sign_decided || !next)
            return out;
        cur = *next;
    }
}

}  // namespace certipoly
