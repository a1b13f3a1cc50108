// SPDX-License-Identifier: Apache-2.0

#include "certipoly/bivariate.hpp"

#include <algorithm>

namespace certipoly {

BivariatePolynomial::BivariatePolynomial(std::vector<Polynomial> coefficients_in_t)
    : coeffs_(std::move(coefficients_in_t))
{
    normalize();
}

BivariatePolynomial BivariatePolynomial::from_t(const Polynomial& in_t)
{
    std::vector<Polynomial> c;
    c.reserve(in_t.coefficients().size());
    for (const auto& a : in_t.coefficients())
        c.push_back(Polynomial::constant(a));
    return BivariatePolynomial(std::move(c));
}

BivariatePolynomial BivariatePolynomial::from_k(const Polynomial& in_k)
{
    return BivariatePolynomial(std::vector<Polynomial>{in_k});
}

void BivariatePolynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

int BivariatePolynomial::degree_k() const
{
    int d = -1;
    for (const auto& c : coeffs_)
        d = std::max(d, c.degree());
    return d;
}

Polynomial BivariatePolynomial::coeff_t(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Polynomial();
}

Rational BivariatePolynomial::coeff(std::size_t t_exp, std::size_t k_exp) const
{
    return coeff_t(t_exp).coeff(k_exp);
}

Polynomial BivariatePolynomial::at_k(const Rational& value) const
{
    std::vector<Rational> c;
    c.reserve(coeffs_.size());
    for (const auto& p : coeffs_)
        c.push_back(p(value));
    return Polynomial(std::move(c));
}

Polynomial BivariatePolynomial::at_t(const Rational& value) const
{
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * value + *it;
    return acc;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BivariatePolynomial& o)
{
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Polynomial> r(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(r);
    normalize();
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const Rational& c)
{
    for (auto& p : coeffs_)
        p *= c;
    normalize();
    return *this;
}

BivariatePolynomial pow(const BivariatePolynomial& f, unsigned exponent)
{
    BivariatePolynomial result = BivariatePolynomial::from_k(Polynomial::constant(Rational(1)));
    for (unsigned i = 0; i < exponent; ++i)
        result *= f;
    return result;
}

BivariatePolynomial exact_div_t(const BivariatePolynomial& f, const Polynomial& divisor)
{
    if (divisor.is_zero())
        throw InvalidInput("division by the zero polynomial");
    // Long division in t with coefficients in Q[k]; the divisor is k-free.
    std::vector<Polynomial> rem = f.coefficients_in_t();
    const int dd = divisor.degree();
    if (f.degree_t() < dd) {
        if (f.is_zero())
            return f;
        throw DivisibilityError("bivariate exact division: degree in t too small");
    }
    std::vector<Polynomial> quo(static_cast<std::size_t>(f.degree_t() - dd + 1));
    const Rational inv_lc = 1 / divisor.leading();
    for (int i = f.degree_t(); i >= dd; --i) {
        Polynomial q = rem[static_cast<std::size_t>(i)] * inv_lc;
        if (q.is_zero())
            continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] -= q * divisor.coeff(static_cast<std::size_t>(j));
        quo[static_cast<std::size_t>(i - dd)] = std::move(q);
    }
    for (const auto& r : rem)
        if (!r.is_zero())
            throw DivisibilityError("bivariate exact division left a remainder");
    return BivariatePolynomial(std::move(quo));
}

}  // namespace certipoly
