// SPDX-License-Identifier: Apache-2.0
//
// Certification procedures for the two best-constant problems. Each returns
// its verdict together with the claims that support it.

#pragma once

#include "certipoly/claims.hpp"
#include "certipoly/data.hpp"

#include <string>
#include <vector>

namespace certipoly {

/// k-th derivative of a log/sqrt expression as an expression tree.
Expr derivative_expr(const Expr& e, int k, const std::string& var = "x");

struct MonotoneChainCertificate {
    Verdict verdict = Verdict::indeterminate;
    std::string detail;
    /// Roots of g''', g'', g', g on (left, x0), in that order.
    std::vector<Interval> roots;
    Json claims = Json::array();
};

/// Assumes g'''' < 0 on (left, x0). Finds the unique root of g''' from its
/// signs at `left` and at the probe point, then for g'', g' and g in turn:
/// exact zero at `left`, positive at the previous root's upper end and just
/// right of `left`, negative at x0.lo - probe_offset. Each root is refined by
/// validated bisection to `width`; the root of g to `last_width`.
MonotoneChainCertificate certify_monotone_chain(const DataSet& d, const Interval& x0, const Rational& width,
                                                const Rational& last_width, const PrecisionBudget& prec);

struct PowerInequalityResult {
    Verdict verdict = Verdict::indeterminate;
    std::string detail;
    long boxes = 0;
    Json claims = Json::array();
};

/// base(x)^lambda >= rhs(x) for x >= left. The left endpoint is an exact
/// identity; from x0 on rhs <= 0; on (left, x0) the inequality is
/// lambda <= f(x), which follows from lambda <= lambda_max.lo. An independent
/// subdivision proves lambda ln(base) - ln(rhs) > 0 on [left_cut, x0.lo].
/// Throws InvalidInput when lambda > lambda_max.lo.
PowerInequalityResult verify_power_inequality(const DataSet& d, const Interval& x0, const Interval& lambda_max,
                                              const Rational& lambda, long subdivision_limit,
                                              const PrecisionBudget& prec);

}  // namespace certipoly
