// SPDX-License-Identifier: Apache-2.0
//
// Sylvester resultants, elimination of t from pairs of bivariate polynomials
// by evaluation-interpolation in k, and radical elimination.

#pragma once

#include "certipoly/bivariate.hpp"
#include "certipoly/execution.hpp"
#include "certipoly/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace certipoly {

/// (n+m) x (n+m) matrix for F of degree n and G of degree m: the first m rows
/// hold shifted descending coefficients of F, the remaining n rows those of G.
struct SylvesterMatrix {
    std::vector<std::vector<Rational>> entries;
};

SylvesterMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g);
/// Determinant of the Sylvester matrix, computed directly (fraction-free).
Rational sylvester_determinant(const Polynomial& f, const Polynomial& g);

/// Res(F, G) = det SylvesterMatrix(F, G), via the subresultant algorithm.
/// Throws InvalidInput for a zero argument.
Rational resultant_univariate(const Polynomial& f, const Polynomial& g);

/// Res_t(P, Q) as a polynomial in k. Evaluates at integer nodes
/// 0, 1, -1, 2, -2, ... (skipping nodes where a leading t-coefficient
/// vanishes), takes univariate resultants in t and interpolates exactly.
/// Throws InvalidInput if P or Q is zero.
Polynomial resultant_in_t(const BivariatePolynomial& p, const BivariatePolynomial& q,
                          Execution exec = Execution::parallel);
Polynomial resultant_in_t(const Polynomial& p_in_t, const BivariatePolynomial& q,
                          Execution exec = Execution::parallel);

/// Integer interpolation nodes used by resultant_in_t, in evaluation order.
std::vector<long> interpolation_nodes(const BivariatePolynomial& p, const BivariatePolynomial& q);

/// Exact interpolation through (nodes[i], values[i]); nodes distinct.
Polynomial interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values);

struct EliminationResult {
    Polynomial resultant_in_k;
    Rational constant_factor;
    std::vector<Polynomial> declared_factors;
};

struct FactorizationVerdict {
    bool holds = false;
    /// R divided by every factor in turn, when all divisions were exact.
    std::optional<Polynomial> quotient;
    std::string detail;
};

/// True iff each factor divides R exactly in turn and the final quotient is
/// the constant polynomial `constant`. Falsification is a verdict, not an error.
FactorizationVerdict verify_factorization(const Polynomial& r, const std::vector<Polynomial>& factors,
                                          const Rational& constant);

/// a*u + b*v + c = 0 together with u^2 = u_square and v^2 = v_square, all
/// coefficients polynomials in (t, k).
struct RadicalSystem {
    BivariatePolynomial a;
    BivariatePolynomial b;
    BivariatePolynomial c;
    BivariatePolynomial u_square;
    BivariatePolynomial v_square;
};

/// The system (1+t)u - v - D(t)k = 0, u^2 = 1-t^2, v^2 = 27t^2(1-t)^2 with
/// D(t) = t(1-t)(1-(4t(1-t))^5).
RadicalSystem boundary_system_theorem2();

/// Eliminates u then v: Res_v(Res_u(a u + b v + c, u^2 - U), v^2 - V)
/// = (b^2 V + c^2 - a^2 U)^2 - 4 b^2 c^2 V.
BivariatePolynomial eliminate_radicals(const RadicalSystem& system);

struct ReducedElimination {
    BivariatePolynomial raw;       // output of eliminate_radicals
    Polynomial t_content;          // gcd in Q[t] of the k-coefficients of raw
    BivariatePolynomial reduced;   // raw / t_content
};

/// eliminate_radicals on the theorem-2 system, with the pure-t content
/// (the factors inherited from D(t)) divided out.
ReducedElimination eliminate_boundary_radicals();

}  // namespace certipoly
