// SPDX-License-Identifier: Apache-2.0

#include "certipoly/root_isolation.hpp"

#include "certipoly/subresultant.hpp"

#include <algorithm>

namespace certipoly {

int sign_at(const IntPoly& f, const Rational& x)
{
    if (f.empty())
        return 0;
    // q^n f(p/q) = sum a_i p^i q^(n-i), evaluated by homogeneous Horner.
    const Integer& p = x.get_num();
    const Integer& q = x.get_den();
    Integer acc = f.back();
    Integer qpow = 1;
    for (std::size_t i = f.size() - 1; i-- > 0;) {
        qpow *= q;
        acc *= p;
        acc += f[i] * qpow;
    }
    return sgn(acc);
}

int SturmChain::variations_at(const Rational& x) const
{
    int changes = 0;
    int prev = 0;
    for (const auto& p : chain) {
        const int s = sign_at(p, x);
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++changes;
        prev = s;
    }
    return changes;
}

SturmChain sturm_chain(const Polynomial& f)
{
    if (f.is_zero())
        throw InvalidInput("Sturm chain of the zero polynomial");
    SturmChain sc;
    IntPoly a = primitive_integer(squarefree_part(f));
    sc.chain.push_back(a);
    if (degree(a) == 0)
        return sc;
    IntPoly b = primitive_integer(derivative(Polynomial(a)));
    sc.chain.push_back(b);
    while (degree(b) > 0) {
        const int delta = degree(a) - degree(b);
        IntPoly r = pseudo_remainder(a, b);
        if (r.empty())
            break;  // cannot happen for squarefree input
        // prem = lc(b)^(delta+1) * rem; keep only a positive multiple of -rem.
        const bool flip = sgn(b.back()) < 0 && (delta + 1) % 2 == 1;
        Integer c = content(r);
        for (auto& x : r) {
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
            if (!flip)
                x = -x;
        }
        a = std::move(b);
        b = std::move(r);
        sc.chain.push_back(b);
    }
    return sc;
}

int count_roots_in(const Polynomial& f, const Rational& lo, const Rational& hi)
{
    if (f.is_zero())
        throw InvalidInput("root count of the zero polynomial");
    if (!(lo < hi))
        throw InvalidInput("root count needs lo < hi");
    if (f(lo) == 0)
        throw EndpointRootError("lower endpoint " + to_string(lo) + " is a root", lo);
    if (f(hi) == 0)
        throw EndpointRootError("upper endpoint " + to_string(hi) + " is a root", hi);
    return sturm_chain(f).count(lo, hi);
}

namespace {

// Smallest step 2^-s * base such that (x - step, x) (or (x, x + step)) holds
// no root of the chain's polynomial; x itself may be a root.
Rational clear_step(const SturmChain& sc, const Rational& x, const Rational& base, bool downward)
{
    Rational step = base;
    const IntPoly& g = sc.chain.front();
    for (;;) {
        const Rational y = downward ? Rational(x - step) : Rational(x + step);
        if (sign_at(g, y) != 0) {
            // Roots in (y, x] minus the root at x itself, or in (x, y].
            const int inside = downward ? sc.count(y, x) - (sign_at(g, x) == 0 ? 1 : 0) : sc.count(x, y);
            if (inside == 0)
                return step;
        }
        step /= 2;
    }
}

Rational safe_perturbation(const Polynomial& f, const Rational& endpoint)
{
    // 1 / (2 * den * (1 + numerator of the Cauchy bound)).
    const Rational b = cauchy_bound(f);
    return Rational(1) / (Rational(2) * Rational(endpoint.get_den()) * (1 + Rational(b.get_num())));
}

}  // namespace

AdjustedCount count_roots_in_closed(const Polynomial& f, const Rational& lo, const Rational& hi)
{
    if (f.is_zero())
        throw InvalidInput("root count of the zero polynomial");
    if (lo > hi)
        throw InvalidInput("root count needs lo <= hi");
    const SturmChain sc = sturm_chain(f);
    const IntPoly& g = sc.chain.front();
    AdjustedCount out{0, lo, hi, false};
    if (sign_at(g, lo) == 0) {
        out.lo = lo - clear_step(sc, lo, safe_perturbation(f, lo), true);
        out.adjusted = true;
    }
    if (sign_at(g, hi) == 0) {
        out.hi = hi + clear_step(sc, hi, safe_perturbation(f, hi), false);
        out.adjusted = true;
    }
    if (out.lo == out.hi)
        return out;
    out.count = sc.count(out.lo, out.hi);
    return out;
}

std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& f,
                                                  std::optional<std::pair<Rational, Rational>> range)
{
    if (f.is_zero())
        throw InvalidInput("root isolation of the zero polynomial");
    std::vector<IsolatingInterval> out;
    if (f.degree() < 1)
        return out;
    const SturmChain sc = sturm_chain(f);
    const IntPoly& g = sc.chain.front();
    Rational lo, hi;
    if (range) {
        lo = range->first;
        hi = range->second;
        if (!(lo < hi))
            throw InvalidInput("isolation range needs lo < hi");
        // Open range: step inside endpoint roots without crossing other roots.
        if (sign_at(g, lo) == 0)
            lo += clear_step(sc, lo, (hi - lo) / 2, false);
        if (sign_at(g, hi) == 0)
            hi -= clear_step(sc, hi, (hi - lo) / 2, true);
    } else {
        const Rational b = cauchy_bound(f);
        lo = -b;
        hi = b;
    }
    struct Pending {
        Rational lo, hi;
        int count;
    };
    std::vector<Pending> stack{{lo, hi, sc.count(lo, hi)}};
    while (!stack.empty()) {
        Pending cur = std::move(stack.back());
        stack.pop_back();
        if (cur.count == 0)
            continue;
        if (cur.count == 1) {
            out.push_back({cur.lo, cur.hi});
            continue;
        }
        Rational mid = (cur.lo + cur.hi) / 2;
        for (int s = 3; sign_at(g, mid) == 0; ++s)
            mid = (cur.lo + cur.hi) / 2 + (cur.hi - cur.lo) / pow2(s);
        const int left = sc.count(cur.lo, mid);
        stack.push_back({mid, cur.hi, cur.count - left});
        stack.push_back({cur.lo, mid, left});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    return out;
}

IsolatingInterval refine_root(const Polynomial& f, const IsolatingInterval& iv, const Rational& width)
{
    if (width <= 0)
        throw InvalidInput("refinement width must be positive");
    const IntPoly g = primitive_integer(squarefree_part(f));
    IsolatingInterval cur = iv;
    const int s_lo = sign_at(g, cur.lo);
    if (s_lo == 0 || sign_at(g, cur.hi) == 0 || s_lo == sign_at(g, cur.hi))
        throw InvalidInput("refine_root: interval does not bracket a simple root");
    while (cur.width() > width) {
        const Rational mid = (cur.lo + cur.hi) / 2;
        const int s = sign_at(g, mid);
        if (s == 0) {
            // Hit the root exactly: shrink symmetrically around it.
            const Rational half = std::min(width, cur.width()) / 4;
            return {mid - half, mid + half};
        }
        if (s == s_lo)
            cur.lo = mid;
        else
            cur.hi = mid;
    }
    return cur;
}

}  // namespace certipoly
