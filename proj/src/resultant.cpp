// SPDX-License-Identifier: Apache-2.0

#include "certipoly/resultant.hpp"

#include "certipoly/discrimination.hpp"
#include "certipoly/subresultant.hpp"

#include <cstdlib>

namespace certipoly {

SylvesterMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g)
{
    if (f.is_zero() || g.is_zero())
        throw InvalidInput("Sylvester matrix of a zero polynomial");
    const auto n = static_cast<std::size_t>(f.degree());
    const auto m = static_cast<std::size_t>(g.degree());
    const std::size_t dim = n + m;
    SylvesterMatrix s;
    s.entries.assign(dim, std::vector<Rational>(dim));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= n; ++j)
            s.entries[r][r + j] = f.coeff(n - j);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j <= m; ++j)
            s.entries[m + r][r + j] = g.coeff(m - j);
    return s;
}

Rational sylvester_determinant(const Polynomial& f, const Polynomial& g)
{
    if (f.degree() == 0 && g.degree() == 0)
        return Rational(1);
    const SylvesterMatrix s = sylvester_matrix(f, g);
    // Clear denominators row by row, then use the integer determinant.
    IntMatrix m(s.entries.size());
    Rational scale = 1;
    for (std::size_t r = 0; r < s.entries.size(); ++r) {
        Integer l = 1;
        for (const auto& e : s.entries[r])
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
        scale *= l;
        m[r].reserve(s.entries[r].size());
        for (const auto& e : s.entries[r])
            m[r].push_back(Rational(e * l).get_num());
    }
    return Rational(determinant(std::move(m))) / scale;
}

namespace {

// Integer form c * F_int of a rational polynomial: returns F_int and the
// denominator d with F = F_int / d.
std::pair<IntPoly, Integer> cleared(const Polynomial& f)
{
    Integer d = 1;
    for (const auto& c : f.coefficients())
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
    IntPoly out;
    out.reserve(f.coefficients().size());
    for (const auto& c : f.coefficients())
        out.push_back(Rational(c * d).get_num());
    return {std::move(out), d};
}

Integer ipow(const Integer& b, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace

Rational resultant_univariate(const Polynomial& f, const Polynomial& g)
{
    if (f.is_zero() || g.is_zero())
        throw InvalidInput("resultant of a zero polynomial");
    auto [fi, df] = cleared(f);
    auto [gi, dg] = cleared(g);
    Integer r = resultant_int(fi, gi);
    Integer den = ipow(df, static_cast<unsigned long>(g.degree())) * ipow(dg, static_cast<unsigned long>(f.degree()));
    Rational q(r, den);
    q.canonicalize();
    return q;
}

Polynomial interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values)
{
    if (nodes.size() != values.size())
        throw InvalidInput("interpolation needs one value per node");
    const std::size_t n = nodes.size();
    // Newton divided differences, in place.
    std::vector<Rational> dd = values;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            const Rational gap = nodes[i] - nodes[i - j];
            if (gap == 0)
                throw InvalidInput("interpolation nodes must be distinct");
            dd[i] = (dd[i] - dd[i - 1]) / gap;
            if (i == j)
                break;
        }
    Polynomial result;
    for (std::size_t i = n; i-- > 0;) {
        result *= Polynomial({0, 1}) - Polynomial::constant(nodes[i]);
        result += Polynomial::constant(dd[i]);
    }
    return result;
}

std::vector<long> interpolation_nodes(const BivariatePolynomial& p, const BivariatePolynomial& q)
{
    if (p.is_zero() || q.is_zero())
        throw InvalidInput("resultant_in_t of a zero polynomial");
    const long bound = static_cast<long>(q.degree_t()) * std::max(0, p.degree_k()) +
                       static_cast<long>(p.degree_t()) * std::max(0, q.degree_k());
    const Polynomial lp = p.coeff_t(static_cast<std::size_t>(p.degree_t()));
    const Polynomial lq = q.coeff_t(static_cast<std::size_t>(q.degree_t()));
    const long needed = bound + 1;
    // Each leading coefficient can vanish at no more than its degree nodes.
    const long budget = needed + std::max(0, lp.degree()) + std::max(0, lq.degree());
    std::vector<long> nodes;
    for (long i = 0; i < budget && static_cast<long>(nodes.size()) < needed; ++i) {
        const long k = (i % 2 == 1) ? (i + 1) / 2 : -(i / 2);
        const Rational kr(k);
        if (lp(kr) == 0 || lq(kr) == 0)
            continue;
        nodes.push_back(k);
    }
    if (static_cast<long>(nodes.size()) < needed)
        throw InvalidInput("degenerate input: not enough interpolation nodes");
    return nodes;
}

Polynomial resultant_in_t(const BivariatePolynomial& p, const BivariatePolynomial& q, Execution exec)
{
    const std::vector<long> nodes = interpolation_nodes(p, q);
    const auto count = static_cast<long>(nodes.size());
    std::vector<Rational> values(nodes.size());
    if (exec == Execution::serial) {
        for (long i = 0; i < count; ++i) {
            const Rational k(nodes[static_cast<std::size_t>(i)]);
            values[static_cast<std::size_t>(i)] = resultant_univariate(p.at_k(k), q.at_k(k));
        }
    } else {
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < count; ++i) {
            const Rational k(nodes[static_cast<std::size_t>(i)]);
            values[static_cast<std::size_t>(i)] = resultant_univariate(p.at_k(k), q.at_k(k));
        }
    }
    std::vector<Rational> xs;
    xs.reserve(nodes.size());
    for (long k : nodes)
        xs.emplace_back(k);
    return interpolate(xs, values);
}

Polynomial resultant_in_t(const Polynomial& p_in_t, const BivariatePolynomial& q, Execution exec)
{
    return resultant_in_t(BivariatePolynomial::from_t(p_in_t), q, exec);
}

FactorizationVerdict verify_factorization(const Polynomial& r, const std::vector<Polynomial>& factors,
                                          const Rational& constant)
{
    FactorizationVerdict v;
    Polynomial q = r;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].is_zero()) {
            v.detail = "factor " + std::to_string(i) + " is zero";
            return v;
        }
        auto [quo, rem] = divrem(q, factors[i]);
        if (!rem.is_zero()) {
            v.detail = "factor " + std::to_string(i) + " does not divide exactly";
            return v;
        }
        q = std::move(quo);
    }
    v.quotient = q;
    if (q.degree() > 0) {
        v.detail = "quotient after all factors has degree " + std::to_string(q.degree());
        return v;
    }
    const Rational got = q.is_zero() ? Rational(0) : q.coeff(0);
    if (got != constant) {
        v.detail = "quotient constant " + to_string(got) + " differs from declared " + to_string(constant);
        return v;
    }
    v.holds = true;
    v.detail = "exact";
    return v;
}

RadicalSystem boundary_system_theorem2()
{
    const Polynomial t = Polynomial::x();
    const Polynomial one = Polynomial::constant(Rational(1));
    const Polynomial s = t * (one - t);  // t(1-t)
    const Polynomial d = s * (one - pow(Polynomial::constant(Rational(4)) * s, 5));
    RadicalSystem sys;
    sys.a = BivariatePolynomial::from_t(one + t);
    sys.b = BivariatePolynomial::from_t(-one);
    // -D(t) * k: the k-degree-1 coefficient of every t-power.
    std::vector<Polynomial> c;
    for (const auto& coeff : d.coefficients())
        c.push_back(Polynomial::monomial(-coeff, 1));
    sys.c = BivariatePolynomial(std::move(c));
    sys.u_square = BivariatePolynomial::from_t(one - t * t);
    sys.v_square = BivariatePolynomial::from_t(Polynomial::constant(Rational(27)) * s * s);
    return sys;
}

BivariatePolynomial eliminate_radicals(const RadicalSystem& sys)
{
    // Res_u(a u + (b v + c), u^2 - U) = (b v + c)^2 - a^2 U
    //                                 = (b^2 V + c^2 - a^2 U) + 2 b c v.
    const BivariatePolynomial rest = sys.b * sys.b * sys.v_square + sys.c * sys.c - sys.a * sys.a * sys.u_square;
    const BivariatePolynomial lin = sys.b * sys.c * Rational(2);
    // Res_v(lin v + rest, v^2 - V) = rest^2 - lin^2 V.
    return rest * rest - lin * lin * sys.v_square;
}

ReducedElimination eliminate_boundary_radicals()
{
    ReducedElimination out;
    out.raw = eliminate_radicals(boundary_system_theorem2());
    // Coefficients of k^j as polynomials in t; their gcd is the t-content.
    const int dk = out.raw.degree_k();
    Polynomial g;
    for (int j = 0; j <= dk; ++j) {
        std::vector<Rational> col;
        for (int i = 0; i <= out.raw.degree_t(); ++i)
            col.push_back(out.raw.coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
        g = gcd(g, Polynomial(std::move(col)));
    }
    out.t_content = g;
    out.reduced = exact_div_t(out.raw, g);
    return out;
}

}  // namespace certipoly
