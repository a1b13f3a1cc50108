// SPDX-License-Identifier: Apache-2.0
//
// Self-contained claims. Each claim is a JSON object carrying its kind, every
// input it needs (polynomials, expressions, intervals, precision) and the
// outcome it asserts under "holds". recheck_claim recomputes the outcome
// from the object alone.

#pragma once

#include "certipoly/bivariate.hpp"
#include "certipoly/certify.hpp"
#include "certipoly/discrimination.hpp"
#include "certipoly/expr.hpp"
#include "certipoly/interval.hpp"
#include "certipoly/logsqrt.hpp"
#include "certipoly/polynomial.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace certipoly {

using Json = nlohmann::ordered_json;

Json to_json(const Polynomial& f);  // ascending coefficient strings
Polynomial polynomial_from_json(const Json& j);
Json to_json(const BivariatePolynomial& f);  // [[t_exp, k_exp, "coefficient"], ...]
BivariatePolynomial bivariate_from_json(const Json& j);
Json to_json(const Interval& iv);  // ["lo", "hi"]
Interval interval_from_json(const Json& j);

namespace claim {

/// The revised sign list of f's discriminant sequence equals `signs`.
Json sign_list(const Polynomial& f, const SignList& signs, bool holds);
/// Sturm count of distinct roots of f in (lo, hi] equals `count`.
Json root_count(const Polynomial& f, const Rational& lo, const Rational& hi, int count);
/// sign(f(at)) = sign, exactly.
Json poly_sign(const Polynomial& f, const Rational& at, int sign);
/// Two polynomial expressions denote the same polynomial.
Json poly_identity(const Expr& lhs, const Expr& rhs, bool holds);
/// The sign certificate re-evaluates to the same sign at the same precision.
Json expr_sign(const SignCertificate& c);
/// eval_expr(e, at) at `bits` lies inside `value`.
Json expr_enclosure(const Expr& e, const Interval& at, long bits, const Interval& value);
/// a < b (strict) or a <= b.
Json rational_order(const std::string& what, const Rational& a, const Rational& b, bool strict);
/// Interval inner lies inside outer (closed).
Json interval_subset(const std::string& what, const Interval& inner, const Interval& outer);
/// A published decimal lies in the decimal enclosure of `digits`
/// significant digits around a certified enclosure.
Json published_decimal(const std::string& what, const Interval& enclosure, int digits, const Rational& published);
/// r = constant * prod(factors) with each division exact.
Json factorization(const Polynomial& r, const std::vector<Polynomial>& factors, const Rational& constant,
                   bool holds);
/// Res_t(p, q) = r, p a polynomial in t, q in (t, k).
Json resultant(const Polynomial& p, const BivariatePolynomial& q, const Polynomial& r);
/// Res(f, g) = value.
Json resultant_value(const Polynomial& f, const Polynomial& g, const Rational& value);
/// d^order/dx^order of e, as a log/sqrt expression, minus `expected` is 0.
Json derivative(const Expr& e, int order, const Expr& expected, bool holds);
/// The k-th derivative of e with every rational function specialized at
/// `at` equals `expected` term by term (same log/sqrt arguments).
Json specialization(const Expr& e, int order, const Rational& at, const Expr& expected, bool holds);
/// The radical elimination of the boundary system, with its t-content
/// divided out, equals constant * p3; the content is `content`.
Json elimination(const BivariatePolynomial& p3, const Polynomial& content, const Rational& constant, bool holds);
/// Outcome of the subdivision proof of e > 0 on [lo, hi] at `bits`.
Json positive_on(const Expr& e, const Rational& lo, const Rational& hi, long bits, long limit,
                 const PositivityResult& result);
/// f' * L1^2 = factor * g where f = ln(A)/ln(B), L1 = ln(B).
Json log_quotient_derivative(const Expr& f, const Expr& factor, const Expr& g, bool holds);
/// h' * den * sqrt(u) = numerator, u the radicand polynomial.
Json radical_derivative(const Expr& h, const Expr& numerator, const Expr& denominator, const Polynomial& radicand,
                        bool holds);
/// A^2 - B^2 * U = rhs where numerator = A + B sqrt(U).
Json rationalization(const Expr& numerator, const Expr& rhs, bool holds);
/// |equality_gap| <= tolerance at `bits`.
Json triangle_equality(EqualityCase which, const Interval& param, const Interval& constant, long bits,
                       const Rational& tolerance, bool holds);

}  // namespace claim

// Exact predicates behind the claims above.
bool logsqrt_equal(const LogSqrtExpression& a, const LogSqrtExpression& b);
bool check_specialization(const Expr& e, int order, const Rational& at, const Expr& expected);
bool check_log_quotient_derivative(const Expr& f, const Expr& factor, const Expr& g);
bool check_radical_derivative(const Expr& h, const Expr& numerator, const Expr& denominator,
                              const Polynomial& radicand);
bool check_rationalization(const Expr& numerator, const Expr& rhs);
bool check_triangle_equality(EqualityCase which, const Interval& param, const Interval& constant, long bits,
                             const Rational& tolerance);

struct ClaimCheck {
    bool ok = false;
    std::string detail;
};

ClaimCheck recheck_claim(const Json& c);

/// Thrown by Evidence once its verdict is no longer certified.
struct EvidenceStop {};

/// Claims gathered by one certification, with the verdict of the first
/// requirement that failed. Failing methods record, then throw EvidenceStop.
class Evidence {
public:
    void add(Json claim) { claims.push_back(std::move(claim)); }
    /// A claim whose "holds" must be true.
    void require(Json claim, const std::string& failure);
    void require(bool ok, Json claim, const std::string& failure);
    /// The certificate must carry `expected` as its sign; an undecided sign
    /// is indeterminate, a different sign falsifies.
    void expect_sign(const SignCertificate& c, int expected, const std::string& what);
    [[noreturn]] void fail(const std::string& why);
    [[noreturn]] void undecided(const std::string& why);
    void line(std::string text) { lines.push_back(std::move(text)); }

    Verdict verdict = Verdict::certified;
    std::string detail;
    Json claims = Json::array();
    std::vector<std::string> lines;
};

}  // namespace certipoly
