// SPDX-License-Identifier: Apache-2.0
//
// Expression trees over the rationals in one variable, with validated
// interval evaluation. Text form is prefix notation, e.g.
//   (mul (pow x 2) (ln (div 24 (add x 1))))

#pragma once

#include "certipoly/interval.hpp"
#include "certipoly/polynomial.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace certipoly {

enum class ExprKind { constant, variable, add, sub, mul, div, int_pow, sqrt, ln };

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    ExprKind kind;
    Rational value;          // constant
    long exponent = 0;       // int_pow
    std::string name;        // variable
    std::vector<Expr> args;  // operands, in order
};

Expr constant(const Rational& c);
Expr variable(const std::string& name = "x");
Expr add(Expr a, Expr b);
Expr sub(Expr a, Expr b);
Expr mul(Expr a, Expr b);
Expr div(Expr a, Expr b);
Expr int_pow(Expr base, long exponent);
Expr sqrt(Expr a);
Expr ln(Expr a);

/// Sum of monomials c*x^i, highest power first.
Expr poly_expr(const Polynomial& f, const std::string& var = "x");
/// The polynomial an expression denotes, if it uses only + - * and
/// nonnegative powers (division by nonzero constants is allowed).
std::optional<Polynomial> as_polynomial(const Expr& e);

std::string to_string(const Expr& e);
/// Inverse of to_string. add and mul accept two or more operands.
Expr parse_expr(std::string_view text);

/// Raised when a subexpression leaves its domain; `subtree` is its text.
class ExprDomainError : public DomainError {
public:
    ExprDomainError(const std::string& what, std::string subtree)
        : DomainError(what + " in " + subtree), subtree(std::move(subtree)) {}
    std::string subtree;
};

/// Interval enclosure of e over `at` at prec.working_bits. Exact point
/// inputs stay exact through rational operations, ln(1) and square roots of
/// perfect squares, so a zero-width result is an exact value.
Interval eval_expr(const Expr& e, const Interval& at, const PrecisionBudget& prec);

struct AdaptiveValue {
    Interval value;
    long bits_used = 0;
    bool sign_decided = false;
};

/// eval_expr with precision growing per the budget until the result's sign
/// is decided or max_bits is reached.
AdaptiveValue eval_adaptive(const Expr& e, const Interval& at, const PrecisionBudget& prec);

}  // namespace certipoly
