// Shared helpers for the unit and property tests.

#pragma once

#include "certipoly/polynomial.hpp"

#include <random>
#include <vector>

namespace test {

using certipoly::Integer;
using certipoly::Polynomial;
using certipoly::Rational;

inline std::mt19937_64& rng()
{
    static std::mt19937_64 g(20261019);
    return g;
}

inline long uniform(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

/// Random integer polynomial of exact degree `deg` with coefficients in [-bound, bound].
inline Polynomial random_poly(int deg, long bound)
{
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c)
        x = uniform(-bound, bound);
    while (c.back() == 0)
        c.back() = uniform(-bound, bound);
    return Polynomial(c);
}

inline Rational random_rational(long num_bound, long den_bound)
{
    Rational q(uniform(-num_bound, num_bound), uniform(1, den_bound));
    q.canonicalize();
    return q;
}

/// Product of (x - r) over the given roots.
inline Polynomial from_roots(const std::vector<Rational>& roots)
{
    Polynomial f = Polynomial::constant(1);
    for (const auto& r : roots)
        f *= Polynomial(std::vector<Rational>{-r, 1});
    return f;
}

/// Determinant by Gaussian elimination over Q, independent of the library kernels.
inline Rational gauss_det(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0)
                continue;
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k)
                m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

/// Sylvester matrix determinant from the textbook definition (rows of f first).
inline Rational sylvester_oracle(const Polynomial& f, const Polynomial& g)
{
    const int n = f.degree(), m = g.degree();
    const int size = n + m;
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            s[i][i + j] = f.coeff(n - j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            s[m + i][i + j] = g.coeff(m - j);
    return gauss_det(s);
}

}  // namespace test
