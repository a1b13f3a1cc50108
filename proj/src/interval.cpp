// SPDX-License-Identifier: Apache-2.0

#include "certipoly/interval.hpp"

#include <algorithm>
#include <array>

namespace certipoly {

void PrecisionBudget::validate() const
{
    if (working_bits <= 0 || max_bits <= 0)
        throw InvalidInput("precision bits must be positive");
    if (working_bits > max_bits)
        throw InvalidInput("working_bits exceeds max_bits");
    if (growth_factor < 2)
        throw InvalidInput("growth_factor must be at least 2");
}

std::optional<PrecisionBudget> PrecisionBudget::grown() const
{
    if (working_bits >= max_bits)
        return std::nullopt;
    PrecisionBudget next = *this;
    next.working_bits = std::min(max_bits, working_bits * growth_factor);
    return next;
}

PrecisionBudget PrecisionBudget::with_bits(long bits) const
{
    PrecisionBudget p = *this;
    p.working_bits = bits;
    p.max_bits = std::max(max_bits, bits);
    return p;
}

Interval::Interval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi)
{
    if (lo_ > hi_)
        throw InvalidInput("interval lower endpoint exceeds upper endpoint");
}

std::optional<int> Interval::certified_sign() const
{
    if (lo_ > 0)
        return 1;
    if (hi_ < 0)
        return -1;
    if (lo_ == 0 && hi_ == 0)
        return 0;
    return std::nullopt;
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo_ + b.lo_, a.hi_ + b.hi_}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo_ - b.hi_, a.hi_ - b.lo_}; }
Interval operator-(const Interval& a) { return {-a.hi_, -a.lo_}; }

Interval operator*(const Interval& a, const Interval& b)
{
    if (a.lo_ >= 0 && b.lo_ >= 0)
        return {a.lo_ * b.lo_, a.hi_ * b.hi_};
    std::array<Rational, 4> p{a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    auto [mn, mx] = std::minmax_element(p.begin(), p.end());
    return {*mn, *mx};
}

Interval operator/(const Interval& a, const Interval& b)
{
    if (b.contains_zero())
        throw DomainError("interval division by an interval containing zero");
    return a * Interval(1 / b.hi_, 1 / b.lo_);
}

Interval hull(const Interval& a, const Interval& b)
{
    return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

Interval intersect(const Interval& a, const Interval& b)
{
    return {std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi())};
}

Interval decimal_enclosure(const Interval& x, int significant)
{
    const Rational mag = std::max(abs(x.lo()), abs(x.hi()));
    if (mag == 0)
        return x;
    // 10^e <= mag < 10^(e+1)
    long e = 0;
    Rational scaled = mag;
    while (scaled >= 10) {
        scaled /= 10;
        ++e;
    }
    while (scaled < 1) {
        scaled *= 10;
        --e;
    }
    const long shift = significant - 1 - e;
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    const Rational unit = shift >= 0 ? Rational(1, ten_pow) : Rational(ten_pow);
    auto grid = [&](const Rational& q, bool up) -> Rational {
        const Rational steps = q / unit;
        mpz_class n;
        if (up)
            mpz_cdiv_q(n.get_mpz_t(), steps.get_num_mpz_t(), steps.get_den_mpz_t());
        else
            mpz_fdiv_q(n.get_mpz_t(), steps.get_num_mpz_t(), steps.get_den_mpz_t());
        return Rational(n) * unit;
    };
    return {grid(x.lo(), false), grid(x.hi(), true)};
}

Interval pow(const Interval& base, long exponent)
{
    if (exponent < 0)
        return Interval(Rational(1)) / pow(base, -exponent);
    auto e = static_cast<unsigned long>(exponent);
    Rational l = certipoly::pow(base.lo(), e);
    Rational h = certipoly::pow(base.hi(), e);
    if (e % 2 == 1 || base.lo() >= 0)
        return {std::min(l, h), std::max(l, h)};
    if (base.hi() <= 0)
        return {h, l};
    return {Rational(0), std::max(l, h)};
}

Interval round_outward(const Interval& x, long bits)
{
    return {round_down(x.lo(), bits), round_up(x.hi(), bits)};
}

namespace {

// Guard bits carried through series evaluation on top of the target.
constexpr long kGuardBits = 24;

// Enclosure of atanh(s) = sum s^(2j+1)/(2j+1) for |s| <= 1/3, with the tail
// bounded by |s|^(2N+1) / ((2N+1)(1 - s^2)).
Interval atanh_series(const Rational& s, long bits)
{
    if (s == 0)
        return Interval(Rational(0));
    const long work = bits + kGuardBits;
    const Rational s2 = s * s;
    const Interval s2i = round_outward(Interval(s2), work);
    Interval power = round_outward(Interval(s), work);  // s^(2j+1)
    Interval sum(Rational(0));
    const Rational target = pow2(-(bits + 8));
    const Rational tail_den = 1 - s2;
    for (long j = 0;; ++j) {
        sum = round_outward(sum + power * Interval(Rational(1, 2 * j + 1)), work);
        power = round_outward(power * s2i, work);
        // power now encloses s^(2j+3); bound the remaining tail.
        Rational mag = std::max(abs(power.lo()), abs(power.hi()));
        Rational tail = mag / (Rational(2 * j + 3) * tail_den);
        if (tail < target * abs(s)) {
            return round_outward(sum + Interval(-tail, tail), work);
        }
    }
}

// ln of an exact positive rational.
Interval ln_point(const Rational& q, long bits)
{
    if (q == 1)
        return Interval(Rational(0));
    // q = 2^e * z with z in [3/4, 3/2).
    long e = approx_log2(q);
    Rational z = q * pow2(-e);
    while (z >= Rational(3, 2)) {
        z /= 2;
        ++e;
    }
    while (z < Rational(3, 4)) {
        z *= 2;
        --e;
    }
    const long extra = e == 0 ? 0 : static_cast<long>(mpz_sizeinbase(Integer(std::abs(e)).get_mpz_t(), 2));
    const long work = bits + kGuardBits + extra;
    Interval result = Interval(Rational(2)) * atanh_series((z - 1) / (z + 1), work);
    if (e != 0)
        result = result + Interval(Rational(e)) * ln2_enclosure(work);
    return round_outward(result, bits + 4);
}

Interval exp_point(const Rational& q, long bits)
{
    if (q == 0)
        return Interval(Rational(1));
    // Halve the argument until |y| <= 1/2, sum Taylor, square back.
    long halvings = std::max(0L, approx_log2(q) + 3);
    Rational y = q * pow2(-halvings);
    const long work = bits + kGuardBits + halvings;
    Interval term(Rational(1));
    Interval sum(Rational(1));
    const Interval yi = round_outward(Interval(y), work);
    const Rational target = pow2(-(work + 4));
    for (long n = 1;; ++n) {
        term = round_outward(term * yi * Interval(Rational(1, n)), work);
        sum = round_outward(sum + term, work);
        Rational mag = std::max(abs(term.lo()), abs(term.hi()));
        if (mag < target) {
            // For |y| <= 1/2 the tail after term n is at most |term_n|.
            sum = round_outward(sum + Interval(-mag, mag), work);
            break;
        }
    }
    for (long i = 0; i < halvings; ++i)
        sum = round_outward(sum * sum, work);
    return round_outward(sum, bits + 4);
}

// Lower and upper sqrt bounds of an exact nonnegative rational.
Interval sqrt_point(const Rational& q, long bits)
{
    if (q == 0)
        return Interval(Rational(0));
    if (is_perfect_square(q)) {
        Integer n, d;
        mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
        return Interval(Rational(n, d));
    }
    // sqrt(a/b) = sqrt(a*b)/b; scale by 4^s for s extra fractional bits.
    long s = std::max(0L, bits - approx_log2(q) / 2) + 4;
    Integer ab = q.get_num() * q.get_den();
    mpz_mul_2exp(ab.get_mpz_t(), ab.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * s));
    Integer r;
    mpz_sqrt(r.get_mpz_t(), ab.get_mpz_t());  // floor, and ab is not a square
    Integer den = q.get_den();
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
    Rational lo(r, den), hi(Integer(r + 1), den);
    lo.canonicalize();
    hi.canonicalize();
    return round_outward(Interval(lo, hi), bits + 4);
}

}  // namespace

Interval ln2_enclosure(long bits)
{
    return Interval(Rational(2)) * atanh_series(Rational(1, 3), bits + 2);
}

Interval interval_ln(const Interval& x, const PrecisionBudget& prec)
{
    if (x.lo() <= 0)
        throw DomainError("ln of an interval reaching zero or below: [" + to_string(x.lo()) + ", " +
                          to_string(x.hi()) + "]");
    if (x.is_point())
        return ln_point(x.lo(), prec.working_bits);
    return {ln_point(x.lo(), prec.working_bits).lo(), ln_point(x.hi(), prec.working_bits).hi()};
}

Interval interval_sqrt(const Interval& x, const PrecisionBudget& prec)
{
    if (x.lo() < 0)
        throw DomainError("sqrt of an interval with negative lower endpoint " + to_string(x.lo()));
    if (x.is_point())
        return sqrt_point(x.lo(), prec.working_bits);
    return {sqrt_point(x.lo(), prec.working_bits).lo(), sqrt_point(x.hi(), prec.working_bits).hi()};
}

Interval interval_exp(const Interval& x, const PrecisionBudget& prec)
{
    if (x.is_point())
        return exp_point(x.lo(), prec.working_bits);
    return {exp_point(x.lo(), prec.working_bits).lo(), exp_point(x.hi(), prec.working_bits).hi()};
}

}  // namespace certipoly
