// SPDX-License-Identifier: Apache-2.0
//
// Sign certificates for expressions, validated bisection on transcendental
// functions, and positivity over an interval by adaptive subdivision.

#pragma once

#include "certipoly/expr.hpp"
#include "certipoly/interval.hpp"
#include "certipoly/logsqrt.hpp"

#include <optional>
#include <string>

namespace certipoly {

enum class Verdict { certified, falsified, indeterminate };

std::string to_string(Verdict v);
/// certified < indeterminate < falsified.
Verdict worst(Verdict a, Verdict b);

struct SignCertificate {
    std::string subject;  // prefix text of the expression
    Interval at;
    Interval value;
    /// nullopt when precision ran out before the sign was decided.
    std::optional<int> sign;
    long bits_used = 0;
    /// Zero-width value: the sign rests on exact evaluation only.
    bool exact = false;
    std::string note;
};

/// Sign of e over `at`. A zero sign is only ever reported for an exact
/// zero-width value. Domain errors that persist at max_bits propagate.
SignCertificate certify_sign(const Expr& e, const Interval& at, const PrecisionBudget& prec);
SignCertificate certify_sign(const Expr& e, const Rational& at, const PrecisionBudget& prec);
SignCertificate certify_sign(const LogSqrtExpression& e, const Rational& at, const PrecisionBudget& prec);

/// Re-evaluates at the recorded precision and confirms the recorded sign.
bool recheck(const SignCertificate& c);

struct SignChangeRoot {
    Verdict verdict = Verdict::indeterminate;
    Rational lo;
    Rational hi;
    std::string detail;
};

/// e is continuous on [lo, hi] with sign(e(lo)) = sign_lo != 0 and
/// sign(e(hi)) = -sign_lo, and changes sign exactly once there. Bisects to
/// width `width`, certifying the sign at each midpoint; a midpoint whose
/// sign cannot be certified is nudged within the middle half.
SignChangeRoot refine_sign_change(const Expr& e, Rational lo, Rational hi, int sign_lo, const Rational& width,
                                  const PrecisionBudget& prec);

struct PositivityResult {
    Verdict verdict = Verdict::indeterminate;
    long boxes = 0;
    /// First box shown nonpositive (falsified) or left undecided.
    std::optional<Interval> witness;
};

/// e > 0 on [lo, hi], by bisection into at most `box_limit` boxes evaluated
/// at prec.working_bits. A falsified verdict needs a point with certified
/// value <= 0.
PositivityResult certify_positive_on(const Expr& e, const Rational& lo, const Rational& hi,
                                     const PrecisionBudget& prec, long box_limit);

enum class EqualityCase {
    /// sqrt(3) s = 10 r - r (2r/R)^lambda, sides 2(x^2-3) : x^2+3 : x^2+3.
    theorem1,
    /// s = 3 sqrt(3) r + k (1 - (2r/R)^5) r, sides 2t : 1 : 1.
    theorem2,
};

/// Enclosure of (lhs - rhs) / lhs for the isosceles triangle given by `param`
/// (x or t) with `constant` (lambda or k). Area by Heron's formula,
/// r = Area/s, R = abc/(4 Area).
Interval equality_gap(EqualityCase which, const Interval& param, const Interval& constant,
                      const PrecisionBudget& prec);

}  // namespace certipoly
