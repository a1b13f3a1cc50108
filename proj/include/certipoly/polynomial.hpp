// SPDX-License-Identifier: Apache-2.0
//
// Dense univariate polynomials over the rationals. Coefficients are stored in
// ascending order of exponent and the leading coefficient is never zero (the
// zero polynomial has no coefficients).

#pragma once

#include "certipoly/interval.hpp"
#include "certipoly/numeric.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace certipoly {

/// Raised when an exact division leaves a remainder.
class DivisibilityError : public Error {
public:
    using Error::Error;
};

/// Integer coefficient vector, ascending exponents. Used by the fraction-free
/// kernels (subresultants, Sturm chains, determinants).
using IntPoly = std::vector<Integer>;

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending);
    explicit Polynomial(const IntPoly& ascending);
    Polynomial(std::initializer_list<long> ascending);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t exponent);
    static Polynomial x() { return monomial(Rational(1), 1); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of x^i; zero past the degree.
    Rational coeff(std::size_t i) const;
    const Rational& leading() const;
    std::span<const Rational> coefficients() const { return coeffs_; }

    Rational operator()(const Rational& x) const;
    /// Horner evaluation in exact interval arithmetic. A positive round_bits
    /// rounds each intermediate outward to that many significant bits.
    Interval operator()(const Interval& x, long round_bits = 0) const;
    int sign_at(const Rational& x) const { return sign((*this)(x)); }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator-(const Polynomial& a);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

enum class PolyOp { add, sub, mul, exact_div };

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op);

/// Euclidean division over Q. Throws InvalidInput for g = 0.
std::pair<Polynomial, Polynomial> divrem(const Polynomial& f, const Polynomial& g);
/// f / g, throwing DivisibilityError unless g divides f.
Polynomial exact_div(const Polynomial& f, const Polynomial& g);

Polynomial derivative(const Polynomial& f);
Polynomial pow(const Polynomial& f, unsigned exponent);
/// f(g(x)).
Polynomial compose(const Polynomial& f, const Polynomial& g);

/// Positive rational c with f = c * primitive_part(f) up to the sign that makes
/// the primitive part's leading coefficient positive.
Rational content(const Polynomial& f);
/// Integer polynomial with coprime coefficients and positive leading
/// coefficient, proportional to f. Zero maps to the empty vector.
IntPoly primitive_integer(const Polynomial& f);
Polynomial primitive_part(const Polynomial& f);

/// Greatest common divisor, primitive with positive leading coefficient
/// (gcd(0, 0) = 0).
Polynomial gcd(const Polynomial& f, const Polynomial& g);
/// f / gcd(f, f'), primitive with positive leading coefficient.
Polynomial squarefree_part(const Polynomial& f);

/// Readable form such as "3*x^2 - 10*x", in the given variable name.
std::string to_string(const Polynomial& f, const std::string& var = "x");

/// Cauchy root bound 1 + max|a_i| / |a_n|; every real root r has |r| < bound.
Rational cauchy_bound(const Polynomial& f);

}  // namespace certipoly
