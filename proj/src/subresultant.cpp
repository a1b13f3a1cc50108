// SPDX-License-Identifier: Apache-2.0

#include "certipoly/subresultant.hpp"

#include <utility>

namespace certipoly {

int degree(const IntPoly& f) { return static_cast<int>(f.size()) - 1; }

void trim(IntPoly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

Integer content(const IntPoly& f)
{
    Integer g = 0;
    for (const auto& c : f) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

Integer eval(const IntPoly& f, const Integer& x)
{
    Integer acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

namespace {

void divexact(IntPoly& f, const Integer& d)
{
    if (d == 1)
        return;
    for (auto& c : f)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

Integer ipow(const Integer& b, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace

IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g)
{
    if (g.empty())
        throw InvalidInput("pseudo-remainder by the zero polynomial");
    const int dg = degree(g);
    int df = degree(f);
    if (df < dg)
        return f;
    IntPoly r = f;
    const Integer& lc = g.back();
    int steps = 0;
    while (!r.empty() && degree(r) >= dg) {
        const int shift = degree(r) - dg;
        Integer lead = r.back();
        for (auto& c : r)
            c *= lc;
        for (int j = 0; j <= dg; ++j)
            r[static_cast<std::size_t>(shift + j)] -= lead * g[static_cast<std::size_t>(j)];
        trim(r);
        ++steps;
    }
    const int missing = df - dg + 1 - steps;
    if (missing > 0 && !r.empty()) {
        Integer scale = ipow(lc, static_cast<unsigned long>(missing));
        for (auto& c : r)
            c *= scale;
    }
    return r;
}

SubresultantSequence subresultant_prs(const Polynomial& f, const Polynomial& g)
{
    if (f.is_zero() || g.is_zero())
        throw InvalidInput("subresultant PRS of a zero polynomial");
    if (f.degree() < g.degree())
        throw InvalidInput("subresultant PRS requires deg f >= deg g");
    IntPoly a = primitive_integer(f);
    IntPoly b = primitive_integer(g);
    SubresultantSequence seq;
    auto push = [&seq](const IntPoly& p) {
        seq.prs.emplace_back(p);
        seq.principal_coefficients.emplace_back(p.back());
    };
    push(a);
    push(b);
    Integer gg = 1;
    Integer h = 1;
    while (degree(b) > 0) {
        const int delta = degree(a) - degree(b);
        IntPoly r = pseudo_remainder(a, b);
        if (r.empty())
            break;
        divexact(r, gg * ipow(h, static_cast<unsigned long>(delta)));
        a = std::move(b);
        b = std::move(r);
        push(b);
        gg = a.back();
        if (delta == 0)
            continue;
        Integer num = ipow(gg, static_cast<unsigned long>(delta));
        Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
        mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    return seq;
}

Integer resultant_int(const IntPoly& f_in, const IntPoly& g_in)
{
    IntPoly a = f_in;
    IntPoly b = g_in;
    trim(a);
    trim(b);
    if (a.empty() || b.empty())
        return 0;
    int s = 1;
    if (degree(a) < degree(b)) {
        std::swap(a, b);
        if (degree(a) % 2 == 1 && degree(b) % 2 == 1)
            s = -1;
    }
    Integer ca = content(a);
    Integer cb = content(b);
    divexact(a, ca);
    divexact(b, cb);
    Integer t = ipow(ca, static_cast<unsigned long>(degree(b))) *
                ipow(cb, static_cast<unsigned long>(degree(a)));
    Integer gg = 1;
    Integer h = 1;
    while (degree(b) > 0) {
        const int delta = degree(a) - degree(b);
        if (degree(a) % 2 == 1 && degree(b) % 2 == 1)
            s = -s;
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.empty())
            return 0;
        divexact(r, gg * ipow(h, static_cast<unsigned long>(delta)));
        b = std::move(r);
        gg = a.back();
        if (delta == 0)
            continue;
        Integer num = ipow(gg, static_cast<unsigned long>(delta));
        Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
        mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    // b is a nonzero constant: h <- lc(b)^deg(a) / h^(deg(a)-1).
    const auto da = static_cast<unsigned long>(degree(a));
    Integer num = ipow(b.back(), da);
    Integer den = da == 0 ? Integer(1) : ipow(h, da - 1);
    Integer last;
    mpz_divexact(last.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return s * t * last;
}

}  // namespace certipoly
