// SPDX-License-Identifier: Apache-2.0

#include "certipoly/polynomial.hpp"

#include "certipoly/subresultant.hpp"

#include <algorithm>
#include <sstream>

namespace certipoly {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending))
{
    normalize();
}

Polynomial::Polynomial(const IntPoly& ascending) : coeffs_(ascending.begin(), ascending.end())
{
    normalize();
}

Polynomial::Polynomial(std::initializer_list<long> ascending)
{
    coeffs_.reserve(ascending.size());
    for (long c : ascending)
        coeffs_.emplace_back(c);
    normalize();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t exponent)
{
    std::vector<Rational> v(exponent + 1);
    v[exponent] = c;
    return Polynomial(std::move(v));
}

void Polynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Polynomial::leading() const
{
    if (coeffs_.empty())
        throw InvalidInput("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Interval Polynomial::operator()(const Interval& x, long round_bits) const
{
    if (x.is_point())
        return Interval((*this)(x.lo()));
    Interval acc(Rational(0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + Interval(*it);
        if (round_bits > 0)
            acc = round_outward(acc, round_bits);
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(r);
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_)
        a *= c;
    return *this;
}

Polynomial operator-(const Polynomial& a)
{
    Polynomial r = a;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& f, const Polynomial& g)
{
    if (g.is_zero())
        throw InvalidInput("polynomial division by zero");
    std::vector<Rational> rem(f.coefficients().begin(), f.coefficients().end());
    const int dg = g.degree();
    if (f.degree() < dg)
        return {Polynomial(), f};
    std::vector<Rational> quo(static_cast<std::size_t>(f.degree() - dg + 1));
    const Rational& lc = g.leading();
    for (int i = f.degree(); i >= dg; --i) {
        Rational q = rem[static_cast<std::size_t>(i)] / lc;
        if (q == 0)
            continue;
        quo[static_cast<std::size_t>(i - dg)] = q;
        for (int j = 0; j <= dg; ++j)
            rem[static_cast<std::size_t>(i - dg + j)] -= q * g.coeff(static_cast<std::size_t>(j));
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& f, const Polynomial& g)
{
    auto [q, r] = divrem(f, g);
    if (!r.is_zero())
        throw DivisibilityError("exact division failed: remainder " + to_string(r));
    return q;
}

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op)
{
    switch (op) {
    case PolyOp::add:
        return f + g;
    case PolyOp::sub:
        return f - g;
    case PolyOp::mul:
        return f * g;
    case PolyOp::exact_div:
        return exact_div(f, g);
    }
    throw InvalidInput("unknown polynomial operation");
}

Polynomial derivative(const Polynomial& f)
{
    if (f.degree() <= 0)
        return {};
    std::vector<Rational> d(static_cast<std::size_t>(f.degree()));
    for (std::size_t i = 1; i < f.coefficients().size(); ++i)
        d[i - 1] = f.coefficients()[i] * static_cast<long>(i);
    return Polynomial(std::move(d));
}

Polynomial pow(const Polynomial& f, unsigned exponent)
{
    Polynomial result = Polynomial::constant(Rational(1));
    Polynomial base = f;
    while (exponent > 0) {
        if (exponent & 1U)
            result *= base;
        exponent >>= 1U;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

Polynomial compose(const Polynomial& f, const Polynomial& g)
{
    Polynomial acc;
    for (auto it = f.coefficients().rbegin(); it != f.coefficients().rend(); ++it)
        acc = acc * g + Polynomial::constant(*it);
    return acc;
}

Rational content(const Polynomial& f)
{
    if (f.is_zero())
        return Rational(0);
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& c : f.coefficients()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational r(num_gcd, den_lcm);
    r.canonicalize();
    return r;
}

IntPoly primitive_integer(const Polynomial& f)
{
    if (f.is_zero())
        return {};
    Rational c = content(f);
    if (f.leading() < 0)
        c = -c;
    IntPoly out;
    out.reserve(f.coefficients().size());
    for (const auto& a : f.coefficients()) {
        Rational q = a / c;
        out.push_back(q.get_num());  // denominator is 1 by construction
    }
    return out;
}

Polynomial primitive_part(const Polynomial& f) { return Polynomial(primitive_integer(f)); }

Polynomial gcd(const Polynomial& f, const Polynomial& g)
{
    if (f.is_zero())
        return primitive_part(g);
    if (g.is_zero())
        return primitive_part(f);
    IntPoly a = primitive_integer(f);
    IntPoly b = primitive_integer(g);
    if (degree(a) < degree(b))
        std::swap(a, b);
    while (!b.empty()) {
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        if (!r.empty()) {
            Integer c = content(r);
            for (auto& x : r)
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        }
        b = std::move(r);
    }
    return primitive_part(Polynomial(a));
}

Polynomial squarefree_part(const Polynomial& f)
{
    if (f.is_zero())
        throw InvalidInput("squarefree part of the zero polynomial");
    if (f.degree() == 0)
        return Polynomial::constant(Rational(1));
    return primitive_part(exact_div(f, gcd(f, derivative(f))));
}

std::string to_string(const Polynomial& f, const std::string& var)
{
    if (f.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        Rational c = f.coeff(static_cast<std::size_t>(i));
        if (c == 0)
            continue;
        if (!first)
            out << (c < 0 ? " - " : " + ");
        else if (c < 0)
            out << "-";
        first = false;
        Rational a = abs(c);
        if (i == 0 || a != 1) {
            out << to_string(a);
            if (i > 0)
                out << "*";
        }
        if (i >= 1)
            out << var;
        if (i >= 2)
            out << "^" << i;
    }
    return out.str();
}

Rational cauchy_bound(const Polynomial& f)
{
    if (f.degree() < 1)
        return Rational(1);
    Rational mx = 0;
    for (int i = 0; i < f.degree(); ++i)
        mx = std::max(mx, Rational(abs(f.coeff(static_cast<std::size_t>(i)))));
    return 1 + mx / abs(f.leading());
}

}  // namespace certipoly
