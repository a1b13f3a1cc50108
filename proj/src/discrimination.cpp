// SPDX-License-Identifier: Apache-2.0

#include "certipoly/discrimination.hpp"

#include "certipoly/subresultant.hpp"

#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace certipoly {

int max_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

IntMatrix discrimination_matrix(const Polynomial& f)
{
    if (f.degree() < 1)
        throw InvalidInput("discrimination matrix needs a nonconstant polynomial");
    const IntPoly a = primitive_integer(f);
    const auto n = static_cast<std::size_t>(degree(a));
    // Descending coefficient rows of f and f'.
    std::vector<Integer> fr(n + 1), dr(n);
    for (std::size_t i = 0; i <= n; ++i)
        fr[i] = a[n - i];
    for (std::size_t i = 0; i < n; ++i)
        dr[i] = a[n - i] * static_cast<unsigned long>(n - i);
    const std::size_t dim = 2 * n;
    IntMatrix m(dim, std::vector<Integer>(dim));
    for (std::size_t pair = 0; pair < n; ++pair) {
        for (std::size_t j = 0; j <= n && pair + j < dim; ++j)
            m[2 * pair][pair + j] = fr[j];
        for (std::size_t j = 0; j < n && pair + 1 + j < dim; ++j)
            m[2 * pair + 1][pair + 1 + j] = dr[j];
    }
    return m;
}

Integer determinant(IntMatrix m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    int sign = 1;
    Integer prev = 1;
    Integer tmp;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t p = i;
        while (p < n && m[p][i] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != i) {
            std::swap(m[p], m[i]);
            sign = -sign;
        }
        for (std::size_t r = i + 1; r < n; ++r) {
            for (std::size_t c = i + 1; c < n; ++c) {
                tmp = m[r][c] * m[i][i];
                tmp -= m[r][i] * m[i][c];
                mpz_divexact(m[r][c].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[i][i];
    }
    return sign * m[n - 1][n - 1];
}

namespace {

Integer leading_minor(const IntMatrix& m, std::size_t order)
{
    IntMatrix sub(order, std::vector<Integer>(order));
    for (std::size_t r = 0; r < order; ++r)
        for (std::size_t c = 0; c < order; ++c)
            sub[r][c] = m[r][c];
    return determinant(std::move(sub));
}

}  // namespace

DiscriminantSequence discriminant_sequence(const Polynomial& f, Execution exec)
{
    const IntMatrix m = discrimination_matrix(f);
    const long n = f.degree();
    std::vector<Integer> d(static_cast<std::size_t>(n));
    if (exec == Execution::serial) {
        for (long k = 1; k <= n; ++k)
            d[static_cast<std::size_t>(k - 1)] = leading_minor(m, static_cast<std::size_t>(2 * k));
    } else {
        // Largest minors first so the dynamic schedule balances the tail.
#pragma omp parallel for schedule(dynamic, 1)
        for (long k = n; k >= 1; --k)
            d[static_cast<std::size_t>(k - 1)] = leading_minor(m, static_cast<std::size_t>(2 * k));
    }
    DiscriminantSequence out;
    out.values.assign(d.begin(), d.end());
    return out;
}

SignList sign_list(const DiscriminantSequence& d)
{
    SignList s;
    s.signs.reserve(d.values.size());
    for (const auto& v : d.values)
        s.signs.push_back(sign(v));
    return s;
}

SignList revise_sign_list(const SignList& s)
{
    SignList out = s;
    out.revised = true;
    if (s.revised)
        return out;
    constexpr int kPattern[4] = {-1, -1, 1, 1};
    std::size_t last_nonzero = s.signs.size();
    for (std::size_t i = 0; i < s.signs.size(); ++i) {
        if (s.signs[i] == 0)
            continue;
        if (last_nonzero != s.signs.size()) {
            const int anchor = s.signs[last_nonzero];
            for (std::size_t z = last_nonzero + 1; z < i; ++z)
                out.signs[z] = kPattern[(z - last_nonzero - 1) % 4] * anchor;
        }
        last_nonzero = i;
    }
    return out;
}

int sign_changes(const SignList& s)
{
    int changes = 0;
    int prev = 0;
    for (int v : s.signs) {
        if (v == 0)
            continue;
        if (prev != 0 && v != prev)
            ++changes;
        prev = v;
    }
    return changes;
}

int nonvanishing(const SignList& s)
{
    int l = 0;
    for (int v : s.signs)
        l += v != 0;
    return l;
}

RootCount count_roots(const Polynomial& f, Execution exec)
{
    SignList revised = revise_sign_list(sign_list(discriminant_sequence(f, exec)));
    const int v = sign_changes(revised);
    const int l = nonvanishing(revised);
    return {l - 2 * v, v};
}

std::string format_sign_list(const SignList& s)
{
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < s.signs.size(); ++i)
        out << (i ? ", " : "") << s.signs[i];
    out << "]";
    return out.str();
}

SignList parse_sign_list(const std::string& text)
{
    SignList s;
    std::string body;
    for (char c : text)
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r')
            body.push_back(c);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw ParseError("sign list must be bracketed: " + text);
    body = body.substr(1, body.size() - 2);
    std::istringstream in(body);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok == "1" || tok == "+1")
            s.signs.push_back(1);
        else if (tok == "-1")
            s.signs.push_back(-1);
        else if (tok == "0")
            s.signs.push_back(0);
        else
            throw ParseError("bad sign list entry '" + tok + "'");
    }
    return s;
}

}  // namespace certipoly
