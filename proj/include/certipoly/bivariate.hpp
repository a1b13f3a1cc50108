// SPDX-License-Identifier: Apache-2.0
//
// Polynomials in (t, k) stored as a dense sequence in t whose coefficients
// are univariate polynomials in k.

#pragma once

#include "certipoly/polynomial.hpp"

#include <vector>

namespace certipoly {

class BivariatePolynomial {
public:
    BivariatePolynomial() = default;
    /// coefficients_in_t[i] is the coefficient of t^i, a polynomial in k.
    explicit BivariatePolynomial(std::vector<Polynomial> coefficients_in_t);
    /// A polynomial in t with constant (k-free) coefficients.
    static BivariatePolynomial from_t(const Polynomial& in_t);
    /// A polynomial in k only.
    static BivariatePolynomial from_k(const Polynomial& in_k);

    int degree_t() const { return static_cast<int>(coeffs_.size()) - 1; }
    int degree_k() const;
    bool is_zero() const { return coeffs_.empty(); }

    const std::vector<Polynomial>& coefficients_in_t() const { return coeffs_; }
    Polynomial coeff_t(std::size_t i) const;
    Rational coeff(std::size_t t_exp, std::size_t k_exp) const;

    /// Substitute k = value, leaving a polynomial in t.
    Polynomial at_k(const Rational& value) const;
    /// Substitute t = value, leaving a polynomial in k.
    Polynomial at_t(const Rational& value) const;

    BivariatePolynomial& operator+=(const BivariatePolynomial& o);
    BivariatePolynomial& operator-=(const BivariatePolynomial& o);
    BivariatePolynomial& operator*=(const BivariatePolynomial& o);
    BivariatePolynomial& operator*=(const Rational& c);

    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
    friend BivariatePolynomial operator*(BivariatePolynomial a, const BivariatePolynomial& b) { return a *= b; }
    friend BivariatePolynomial operator*(BivariatePolynomial a, const Rational& c) { return a *= c; }
    friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

private:
    void normalize();
    std::vector<Polynomial> coeffs_;
};

BivariatePolynomial pow(const BivariatePolynomial& f, unsigned exponent);

/// Exact division by a polynomial in t alone; throws DivisibilityError.
BivariatePolynomial exact_div_t(const BivariatePolynomial& f, const Polynomial& divisor_in_t);

}  // namespace certipoly
