// SPDX-License-Identifier: Apache-2.0
//
// Certified real-root counting, isolation and refinement with Sturm chains.
// All sign decisions are exact rational evaluations.

#pragma once

#include "certipoly/polynomial.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace certipoly {

/// Exactly one root of the target polynomial lies in (lo, hi]; neither
/// endpoint is a root of its squarefree part.
struct IsolatingInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Interval as_interval() const { return {lo, hi}; }
    friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

/// Sturm chain of the squarefree part: g, g', then negated pseudo-remainders
/// scaled by positive constants only.
struct SturmChain {
    std::vector<IntPoly> chain;

    int variations_at(const Rational& x) const;
    /// Number of distinct real roots in (lo, hi].
    int count(const Rational& lo, const Rational& hi) const { return variations_at(lo) - variations_at(hi); }
};

/// Raised when a counting endpoint is itself a root.
class EndpointRootError : public Error {
public:
    EndpointRootError(const std::string& what, Rational endpoint) : Error(what), endpoint(std::move(endpoint)) {}
    Rational endpoint;
};

SturmChain sturm_chain(const Polynomial& f);

/// Sign of an integer polynomial at an exact rational point.
int sign_at(const IntPoly& f, const Rational& x);

/// Distinct real roots of f in the open interval (lo, hi). Requires f != 0,
/// lo < hi; throws EndpointRootError when f(lo) = 0 or f(hi) = 0.
int count_roots_in(const Polynomial& f, const Rational& lo, const Rational& hi);

struct AdjustedCount {
    int count = 0;
    Rational lo;
    Rational hi;
    bool adjusted = false;
};

/// Counts the roots in the closed interval [lo, hi]. Endpoints that are roots
/// are moved outward by a certified-safe amount and the move is reported.
AdjustedCount count_roots_in_closed(const Polynomial& f, const Rational& lo, const Rational& hi);

/// Isolating intervals for the distinct real roots of f, sorted ascending.
/// Without a range the search covers (-B, B) for the Cauchy bound B; with a
/// range only roots in the open interval (lo, hi) are returned.
std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& f,
                                                  std::optional<std::pair<Rational, Rational>> range = std::nullopt);

/// Bisects iv until its width is at most `width`. The result is a subset of
/// iv that isolates the same root.
IsolatingInterval refine_root(const Polynomial& f, const IsolatingInterval& iv, const Rational& width);

}  // namespace certipoly
