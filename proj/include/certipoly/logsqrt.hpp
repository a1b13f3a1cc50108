// SPDX-License-Identifier: Apache-2.0
//
// Closed-form expressions  R(x) + sum c_i(x) ln a_i(x) + sum d_j(x) sqrt(b_j(x))
// with rational-function R, c_i, a_i, d_j, b_j, and their exact derivatives.

#pragma once

#include "certipoly/expr.hpp"
#include "certipoly/polynomial.hpp"

#include <string>
#include <vector>

namespace certipoly {

/// num/den with gcd(num, den) = 1 and monic den; zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::constant(Rational(1))) {}
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial p) : RationalFunction(std::move(p), Polynomial::constant(Rational(1))) {}

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    /// Throws DomainError when the denominator vanishes at x.
    Rational operator()(const Rational& x) const;
    Interval operator()(const Interval& x, long round_bits) const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    /// Throws InvalidInput for a zero divisor.
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a);
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    Polynomial num_;
    Polynomial den_;
};

RationalFunction derivative(const RationalFunction& f);
Expr to_expr(const RationalFunction& f, const std::string& var = "x");

struct LogSqrtTerm {
    RationalFunction coefficient;
    RationalFunction argument;
    friend bool operator==(const LogSqrtTerm&, const LogSqrtTerm&) = default;
};

/// Terms are kept with distinct arguments and nonzero coefficients, in first
/// appearance order. Constant sqrt arguments (such as 3) are allowed; a
/// constant log argument is folded away only when it is exactly 1.
struct LogSqrtExpression {
    RationalFunction rational_part;
    std::vector<LogSqrtTerm> log_terms;
    std::vector<LogSqrtTerm> sqrt_terms;

    void normalize();
    friend bool operator==(const LogSqrtExpression&, const LogSqrtExpression&) = default;
};

LogSqrtExpression operator+(const LogSqrtExpression& a, const LogSqrtExpression& b);
LogSqrtExpression operator-(const LogSqrtExpression& a, const LogSqrtExpression& b);
/// Product with a rational function.
LogSqrtExpression operator*(const RationalFunction& r, const LogSqrtExpression& e);

LogSqrtExpression differentiate_logsqrt(const LogSqrtExpression& e);
/// k-th derivative.
LogSqrtExpression differentiate_logsqrt(const LogSqrtExpression& e, int k);

/// Converts an expression built from rational parts, ln of rational
/// functions and sqrt of rational functions, combined linearly with
/// rational-function coefficients. Throws InvalidInput otherwise.
LogSqrtExpression to_logsqrt(const Expr& e);
Expr to_expr(const LogSqrtExpression& e, const std::string& var = "x");

}  // namespace certipoly
