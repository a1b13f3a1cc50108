// SPDX-License-Identifier: Apache-2.0
//
// Subresultant polynomial remainder sequences over Z (Collins/Brown-Traub).

#pragma once

#include "certipoly/polynomial.hpp"

#include <vector>

namespace certipoly {

struct SubresultantSequence {
    /// f, g and the nonzero reduced pseudo-remainders that follow them.
    std::vector<Polynomial> prs;
    /// Leading coefficient of every prs member.
    std::vector<Rational> principal_coefficients;

    const Polynomial& last() const { return prs.back(); }
};

/// Subresultant PRS of the primitive integer forms of f and g.
/// Requires f, g nonzero and deg f >= deg g; throws InvalidInput otherwise.
SubresultantSequence subresultant_prs(const Polynomial& f, const Polynomial& g);

/// Resultant of two integer polynomials, equal to the determinant of the
/// Sylvester matrix with the rows of f first. Zero if either input is zero.
Integer resultant_int(const IntPoly& f, const IntPoly& g);

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g.
IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g);

/// Integer helpers shared by the fraction-free kernels.
int degree(const IntPoly& f);
void trim(IntPoly& f);
Integer content(const IntPoly& f);
Integer eval(const IntPoly& f, const Integer& x);

}  // namespace certipoly
