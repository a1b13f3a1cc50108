// SPDX-License-Identifier: Apache-2.0
//
// Closed intervals with rational endpoints. Arithmetic is exact (the result is
// the exact image hull); callers that need to bound endpoint growth apply
// round_outward() with a bit budget, which only ever widens the interval.

#pragma once

#include "certipoly/numeric.hpp"

#include <optional>

namespace certipoly {

struct PrecisionBudget {
    long working_bits = 128;
    long max_bits = 16384;
    long growth_factor = 2;

    /// Throws InvalidInput unless 0 < working_bits <= max_bits and growth >= 2.
    void validate() const;
    /// Next working precision, or nullopt once max_bits is exhausted.
    std::optional<PrecisionBudget> grown() const;
    PrecisionBudget with_bits(long bits) const;
};

class Interval {
public:
    Interval() = default;
    explicit Interval(const Rational& point) : lo_(point), hi_(point) {}
    Interval(const Rational& lo, const Rational& hi);

    static Interval point(const Rational& q) { return Interval(q); }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }
    bool is_point() const { return lo_ == hi_; }

    bool contains(const Rational& q) const { return lo_ <= q && q <= hi_; }
    bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
    bool contains_zero() const { return lo_ <= 0 && hi_ >= 0; }
    bool intersects(const Interval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }

    /// +1 / -1 when the interval excludes zero, 0 for the point [0,0],
    /// nullopt when the sign is not decided.
    std::optional<int> certified_sign() const;

    friend bool operator==(const Interval&, const Interval&) = default;

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a);
    friend Interval operator*(const Interval& a, const Interval& b);
    /// Throws DomainError when b contains zero.
    friend Interval operator/(const Interval& a, const Interval& b);

private:
    Rational lo_;
    Rational hi_;
};

Interval hull(const Interval& a, const Interval& b);
Interval intersect(const Interval& a, const Interval& b);
Interval pow(const Interval& base, long exponent);
Interval round_outward(const Interval& x, long bits);
/// Smallest interval with endpoints on the decimal grid of `significant`
/// digits (scaled to the magnitude of x) that contains x.
Interval decimal_enclosure(const Interval& x, int significant);

/// Validated elementary functions. Each result contains the exact image of x
/// and has relative width about 2^-working_bits.
Interval interval_ln(const Interval& x, const PrecisionBudget& prec);
Interval interval_sqrt(const Interval& x, const PrecisionBudget& prec);
Interval interval_exp(const Interval& x, const PrecisionBudget& prec);

/// Enclosure of ln 2, computed from the atanh(1/3) series.
Interval ln2_enclosure(long bits);

}  // namespace certipoly
