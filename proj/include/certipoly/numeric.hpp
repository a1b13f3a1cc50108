// SPDX-License-Identifier: Apache-2.0
//
// Exact scalar arithmetic. Integer and Rational are GMP types; mpq_class keeps
// every arithmetic result canonical (positive denominator, reduced).

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace certipoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class of every error the library reports as an exception.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition violation on an otherwise well-typed argument.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain (ln of a nonpositive value, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

enum class ArithOp { add, sub, mul, div };

Rational rational_arith(const Rational& a, const Rational& b, ArithOp op);

/// Parses "num/den" or "num" with optional leading '-' (U+2212 is accepted too).
/// The result is canonicalized; a zero denominator is a ParseError.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);
/// Exact value of a decimal literal such as "-4.113537611".
Rational parse_decimal(std::string_view text);

/// Inverse of parse_rational: "num" when the denominator is 1, else "num/den".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Decimal rendering with `digits` significant digits, truncated toward zero
/// after correct rounding of the last digit. Only for human-readable output.
std::string to_decimal(const Rational& q, int digits = 10);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

/// floor(log2 |q|) for q != 0, within one: the exact value lies in
/// [result - 1, result + 1].
long approx_log2(const Rational& q);

/// Largest (smallest) number with at most `bits` significant binary digits
/// that is <= q (>= q). Exact inputs that already fit are returned unchanged.
Rational round_down(const Rational& q, long bits);
Rational round_up(const Rational& q, long bits);

bool is_perfect_square(const Rational& q);

/// 2^e as a rational, e may be negative.
Rational pow2(long e);
Rational pow(const Rational& base, unsigned long exponent);

}  // namespace certipoly
