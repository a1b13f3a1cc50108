// SPDX-License-Identifier: Apache-2.0

#include "certipoly/numeric.hpp"

#include <algorithm>
#include <cctype>

namespace certipoly {

Rational rational_arith(const Rational& a, const Rational& b, ArithOp op)
{
    switch (op) {
    case ArithOp::add:
        return a + b;
    case ArithOp::sub:
        return a - b;
    case ArithOp::mul:
        return a * b;
    case ArithOp::div:
        if (b == 0)
            throw InvalidInput("rational division by zero");
        return a / b;
    }
    throw InvalidInput("unknown arithmetic operation");
}

namespace {

// U+2212 MINUS SIGN in UTF-8.
constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s)
{
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Integer parse_integer(std::string_view text)
{
    std::string_view s = trim(text);
    bool negative = false;
    if (s.starts_with(kUnicodeMinus)) {
        negative = true;
        s.remove_prefix(kUnicodeMinus.size());
    } else if (s.starts_with('-')) {
        negative = true;
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw ParseError("malformed integer '" + std::string(text) + "'");
    Integer z(std::string(s), 10);
    return negative ? Integer(-z) : z;
}

Rational parse_rational(std::string_view text)
{
    std::string_view s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(s));
    Integer num = parse_integer(s.substr(0, slash));
    std::string_view den_text = trim(s.substr(slash + 1));
    if (!all_digits(den_text))
        throw ParseError("malformed denominator in '" + std::string(text) + "'");
    Integer den(std::string(den_text), 10);
    if (den == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_decimal(std::string_view text)
{
    std::string_view s = trim(text);
    const auto dot = s.find('.');
    if (dot == std::string_view::npos)
        return Rational(parse_integer(s));
    const std::string_view frac = s.substr(dot + 1);
    if (!all_digits(frac))
        throw ParseError("malformed decimal '" + std::string(text) + "'");
    std::string_view whole = s.substr(0, dot);
    const bool negative = whole.starts_with('-') || whole.starts_with(kUnicodeMinus);
    Integer digits = parse_integer(std::string(whole) + std::string(frac));
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational q(digits, scale);
    q.canonicalize();
    if (negative && q > 0)  // "-0.5" parses its integer part as zero
        q = -q;
    return q;
}

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str(10);
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

std::string to_decimal(const Rational& q, int digits)
{
    if (q == 0)
        return "0";
    Rational a = abs(q);
    // Find e with 10^e <= a < 10^(e+1).
    long e = static_cast<long>((mpz_sizeinbase(a.get_num().get_mpz_t(), 10)) -
                               static_cast<long>(mpz_sizeinbase(a.get_den().get_mpz_t(), 10)));
    Integer ten = 10;
    auto pow10 = [&](long k) {
        Integer r;
        mpz_pow_ui(r.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
        return k < 0 ? Rational(1, r) : Rational(r);
    };
    while (a >= pow10(e + 1))
        ++e;
    while (a < pow10(e))
        --e;
    // Scale so the integer part carries `digits` digits, then round half up.
    Rational scaled = a * pow10(digits - 1 - e);
    Integer n = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
    std::string body = n.get_str(10);
    if (static_cast<int>(body.size()) > digits) {  // rounding carried into a new digit
        ++e;
        body.pop_back();
    }
    std::string out;
    if (e >= 0 && e < digits) {
        out = body.substr(0, static_cast<size_t>(e + 1));
        std::string frac = body.substr(static_cast<size_t>(e + 1));
        if (!frac.empty())
            out += "." + frac;
    } else if (e < 0 && e > -8) {
        out = "0." + std::string(static_cast<size_t>(-e - 1), '0') + body;
    } else {
        out = body.substr(0, 1);
        if (body.size() > 1)
            out += "." + body.substr(1);
        out += "e" + std::to_string(e);
    }
    return q < 0 ? "-" + out : out;
}

long approx_log2(const Rational& q)
{
    return static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
}

Rational pow2(long e)
{
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(1, p) : Rational(p);
}

Rational pow(const Rational& base, unsigned long exponent)
{
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    r.canonicalize();
    return r;
}

namespace {

// floor or ceil of q * 2^shift, as an integer.
Integer scaled_integer(const Rational& q, long shift, bool up)
{
    Integer num = q.get_num();
    Integer den = q.get_den();
    if (shift >= 0)
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    else
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    Integer r;
    if (up)
        mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    else
        mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

Rational round_directed(const Rational& q, long bits, bool up)
{
    if (q == 0 || bits <= 0)
        return q;
    // Exact dyadics with few significant bits are already representable.
    const auto& den = q.get_den();
    if (mpz_popcount(den.get_mpz_t()) == 1 &&
        static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2)) -
                static_cast<long>(mpz_scan1(q.get_num().get_mpz_t(), 0)) <=
            bits)
        return q;
    long shift = bits - approx_log2(q);
    Integer n = scaled_integer(q, shift, up);
    Rational r(n);
    if (shift >= 0)
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(shift));
    else
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-shift));
    return r;
}

}  // namespace

Rational round_down(const Rational& q, long bits) { return round_directed(q, bits, false); }
Rational round_up(const Rational& q, long bits) { return round_directed(q, bits, true); }

bool is_perfect_square(const Rational& q)
{
    return q >= 0 && mpz_perfect_square_p(q.get_num_mpz_t()) &&
           mpz_perfect_square_p(q.get_den_mpz_t());
}

}  // namespace certipoly
