// SPDX-License-Identifier: Apache-2.0

#include "certipoly/claims.hpp"

#include "certipoly/logsqrt.hpp"
#include "certipoly/resultant.hpp"
#include "certipoly/root_isolation.hpp"

#include <functional>
#include <map>

namespace certipoly {

Json to_json(const Polynomial& f)
{
    Json out = Json::array();
    for (const Rational& c : f.coefficients())
        out.push_back(to_string(c));
    return out;
}

Polynomial polynomial_from_json(const Json& j)
{
    std::vector<Rational> coeffs;
    for (const auto& c : j)
        coeffs.push_back(parse_rational(c.get<std::string>()));
    return Polynomial(std::move(coeffs));
}

Json to_json(const BivariatePolynomial& f)
{
    Json out = Json::array();
    for (int i = 0; i <= f.degree_t(); ++i) {
        const Polynomial ck = f.coeff_t(static_cast<std::size_t>(i));
        for (int j = 0; j <= ck.degree(); ++j)
            if (ck.coeff(static_cast<std::size_t>(j)) != 0)
                out.push_back(Json::array({i, j, to_string(ck.coeff(static_cast<std::size_t>(j)))}));
    }
    return out;
}

BivariatePolynomial bivariate_from_json(const Json& j)
{
    std::vector<std::vector<Rational>> rows;
    for (const auto& term : j) {
        const auto ti = term.at(0).get<std::size_t>();
        const auto kj = term.at(1).get<std::size_t>();
        if (rows.size() <= ti)
            rows.resize(ti + 1);
        if (rows[ti].size() <= kj)
            rows[ti].resize(kj + 1);
        rows[ti][kj] = parse_rational(term.at(2).get<std::string>());
    }
    std::vector<Polynomial> coeffs;
    for (auto& r : rows)
        coeffs.emplace_back(std::move(r));
    return BivariatePolynomial(std::move(coeffs));
}

Json to_json(const Interval& iv) { return Json::array({to_string(iv.lo()), to_string(iv.hi())}); }

Interval interval_from_json(const Json& j)
{
    return {parse_rational(j.at(0).get<std::string>()), parse_rational(j.at(1).get<std::string>())};
}

namespace {

Json signs_json(const SignList& s)
{
    Json out = Json::array();
    for (int v : s.signs)
        out.push_back(v);
    return out;
}

Json base(const char* kind)
{
    Json j;
    j["kind"] = kind;
    return j;
}

Rational rat(const Json& j, const char* key) { return parse_rational(j.at(key).get<std::string>()); }
Expr expr(const Json& j, const char* key) { return parse_expr(j.at(key).get<std::string>()); }

}  // namespace

namespace claim {

Json sign_list(const Polynomial& f, const SignList& signs, bool holds)
{
    Json j = base("sign_list");
    j["polynomial"] = to_json(f);
    j["signs"] = signs_json(signs);
    j["holds"] = holds;
    return j;
}

Json root_count(const Polynomial& f, const Rational& lo, const Rational& hi, int count)
{
    Json j = base("root_count");
    j["polynomial"] = to_json(f);
    j["lo"] = to_string(lo);
    j["hi"] = to_string(hi);
    j["count"] = count;
    return j;
}

Json poly_sign(const Polynomial& f, const Rational& at, int sign)
{
    Json j = base("poly_sign");
    j["polynomial"] = to_json(f);
    j["at"] = to_string(at);
    j["sign"] = sign;
    return j;
}

Json poly_identity(const Expr& lhs, const Expr& rhs, bool holds)
{
    Json j = base("poly_identity");
    j["lhs"] = to_string(lhs);
    j["rhs"] = to_string(rhs);
    j["holds"] = holds;
    return j;
}

Json expr_sign(const SignCertificate& c)
{
    Json j = base("expr_sign");
    j["expression"] = c.subject;
    j["at"] = to_json(c.at);
    j["bits"] = c.bits_used;
    if (c.sign) {
        j["value"] = to_json(c.value);
        j["sign"] = *c.sign;
    } else {
        j["sign"] = nullptr;
        j["note"] = c.note;
    }
    return j;
}

Json expr_enclosure(const Expr& e, const Interval& at, long bits, const Interval& value)
{
    Json j = base("expr_enclosure");
    j["expression"] = to_string(e);
    j["at"] = to_json(at);
    j["bits"] = bits;
    j["value"] = to_json(value);
    return j;
}

Json rational_order(const std::string& what, const Rational& a, const Rational& b, bool strict)
{
    Json j = base("rational_order");
    j["what"] = what;
    j["a"] = to_string(a);
    j["b"] = to_string(b);
    j["strict"] = strict;
    j["holds"] = strict ? a < b : a <= b;
    return j;
}

Json interval_subset(const std::string& what, const Interval& inner, const Interval& outer)
{
    Json j = base("interval_subset");
    j["what"] = what;
    j["inner"] = to_json(inner);
    j["outer"] = to_json(outer);
    j["holds"] = outer.contains(inner);
    return j;
}

Json published_decimal(const std::string& what, const Interval& enclosure, int digits, const Rational& published)
{
    Json j = base("published_decimal");
    j["what"] = what;
    j["enclosure"] = to_json(enclosure);
    j["digits"] = digits;
    j["published"] = to_string(published);
    j["holds"] = decimal_enclosure(enclosure, digits).contains(published);
    return j;
}

Json factorization(const Polynomial& r, const std::vector<Polynomial>& factors, const Rational& constant, bool holds)
{
    Json j = base("factorization");
    j["polynomial"] = to_json(r);
    j["factors"] = Json::array();
    for (const auto& f : factors)
        j["factors"].push_back(to_json(f));
    j["constant"] = to_string(constant);
    j["holds"] = holds;
    return j;
}

Json resultant(const Polynomial& p, const BivariatePolynomial& q, const Polynomial& r)
{
    Json j = base("resultant");
    j["p"] = to_json(p);
    j["q"] = to_json(q);
    j["result"] = to_json(r);
    return j;
}

Json resultant_value(const Polynomial& f, const Polynomial& g, const Rational& value)
{
    Json j = base("resultant_value");
    j["f"] = to_json(f);
    j["g"] = to_json(g);
    j["value"] = to_string(value);
    return j;
}

Json derivative(const Expr& e, int order, const Expr& expected, bool holds)
{
    Json j = base("derivative");
    j["expression"] = to_string(e);
    j["order"] = order;
    j["expected"] = to_string(expected);
    j["holds"] = holds;
    return j;
}

Json specialization(const Expr& e, int order, const Rational& at, const Expr& expected, bool holds)
{
    Json j = base("specialization");
    j["expression"] = to_string(e);
    j["order"] = order;
    j["at"] = to_string(at);
    j["expected"] = to_string(expected);
    j["holds"] = holds;
    return j;
}

Json elimination(const BivariatePolynomial& p3, const Polynomial& content, const Rational& constant, bool holds)
{
    Json j = base("elimination");
    j["eliminant"] = to_json(p3);
    j["content"] = to_json(content);
    j["constant"] = to_string(constant);
    j["holds"] = holds;
    return j;
}

Json positive_on(const Expr& e, const Rational& lo, const Rational& hi, long bits, long limit,
                 const PositivityResult& result)
{
    Json j = base("positive_on");
    j["expression"] = to_string(e);
    j["lo"] = to_string(lo);
    j["hi"] = to_string(hi);
    j["bits"] = bits;
    j["limit"] = limit;
    j["verdict"] = to_string(result.verdict);
    j["boxes"] = result.boxes;
    if (result.witness)
        j["witness"] = to_json(*result.witness);
    return j;
}

Json log_quotient_derivative(const Expr& f, const Expr& factor, const Expr& g, bool holds)
{
    Json j = base("log_quotient_derivative");
    j["f"] = to_string(f);
    j["factor"] = to_string(factor);
    j["g"] = to_string(g);
    j["holds"] = holds;
    return j;
}

Json radical_derivative(const Expr& h, const Expr& numerator, const Expr& denominator, const Polynomial& radicand,
                        bool holds)
{
    Json j = base("radical_derivative");
    j["h"] = to_string(h);
    j["numerator"] = to_string(numerator);
    j["denominator"] = to_string(denominator);
    j["radicand"] = to_json(radicand);
    j["holds"] = holds;
    return j;
}

Json rationalization(const Expr& numerator, const Expr& rhs, bool holds)
{
    Json j = base("rationalization");
    j["numerator"] = to_string(numerator);
    j["rhs"] = to_string(rhs);
    j["holds"] = holds;
    return j;
}

Json triangle_equality(EqualityCase which, const Interval& param, const Interval& constant, long bits,
                       const Rational& tolerance, bool holds)
{
    Json j = base("triangle_equality");
    j["case"] = which == EqualityCase::theorem1 ? "theorem1" : "theorem2";
    j["parameter"] = to_json(param);
    j["constant"] = to_json(constant);
    j["bits"] = bits;
    j["tolerance"] = to_string(tolerance);
    j["holds"] = holds;
    return j;
}

}  // namespace claim

// ---------------------------------------------------------------------------
// Exact predicates shared by the builders' callers and the rechecker.

bool logsqrt_equal(const LogSqrtExpression& a, const LogSqrtExpression& b)
{
    const LogSqrtExpression d = a - b;
    return d.rational_part.is_zero() && d.log_terms.empty() && d.sqrt_terms.empty();
}

namespace {

/// ln q as a combination of ln(atom) over integer atoms, found by trial
/// division. Unfactored cofactors become atoms of their own, so equal maps
/// imply equal values.
void add_log(std::map<Integer, Rational>& out, const Rational& q, const Rational& coefficient)
{
    if (q <= 0)
        throw DomainError("logarithm of a nonpositive constant");
    auto split = [&](Integer n, const Rational& c) {
        for (Integer p = 2; p * p <= n && p < 1000000; ++p)
            while (n % p == 0) {
                out[p] += c;
                n /= p;
            }
        if (n > 1)
            out[n] += c;
    };
    split(q.get_num(), coefficient);
    split(q.get_den(), -coefficient);
}

struct ConstantForm {
    Rational rational;
    std::map<Integer, Rational> logs;
    std::map<Rational, Rational> roots;

    void tidy()
    {
        std::erase_if(logs, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(roots, [](const auto& kv) { return kv.second == 0; });
    }
};

ConstantForm specialize(const LogSqrtExpression& e, const Rational& at)
{
    ConstantForm out;
    out.rational = e.rational_part(at);
    for (const auto& t : e.log_terms)
        add_log(out.logs, t.argument(at), t.coefficient(at));
    for (const auto& t : e.sqrt_terms) {
        const Rational a = t.argument(at);
        if (a < 0)
            throw DomainError("square root of a negative constant");
        out.roots[a] += t.coefficient(at);
    }
    out.tidy();
    return out;
}

bool constant_forms_equal(const ConstantForm& a, const ConstantForm& b)
{
    return a.rational == b.rational && a.logs == b.logs && a.roots == b.roots;
}

/// The quotient ln(A)/ln(B) behind a log-quotient expression.
std::pair<RationalFunction, RationalFunction> log_quotient_parts(const Expr& f)
{
    if (f->kind != ExprKind::div || f->args[0]->kind != ExprKind::ln || f->args[1]->kind != ExprKind::ln)
        throw InvalidInput("expected (div (ln A) (ln B))");
    auto arg = [](const Expr& l) {
        const LogSqrtExpression e = to_logsqrt(l->args[0]);
        if (!e.log_terms.empty() || !e.sqrt_terms.empty())
            throw InvalidInput("log argument is not rational");
        return e.rational_part;
    };
    return {arg(f->args[0]), arg(f->args[1])};
}

RationalFunction rational_of(const Expr& e)
{
    const LogSqrtExpression l = to_logsqrt(e);
    if (!l.log_terms.empty() || !l.sqrt_terms.empty())
        throw InvalidInput("expected a rational function");
    return l.rational_part;
}

}  // namespace

bool check_specialization(const Expr& e, int order, const Rational& at, const Expr& expected)
{
    const LogSqrtExpression d = differentiate_logsqrt(to_logsqrt(e), order);
    return constant_forms_equal(specialize(d, at), specialize(to_logsqrt(expected), Rational(0)));
}

bool check_log_quotient_derivative(const Expr& f, const Expr& factor, const Expr& g)
{
    const auto [a, b] = log_quotient_parts(f);
    // f' ln(B)^2 = (A'/A) ln B - (B'/B) ln A
    LogSqrtExpression lhs;
    lhs.log_terms.push_back({derivative(a) / a, b});
    lhs.log_terms.push_back({-(derivative(b) / b), a});
    lhs.normalize();
    return logsqrt_equal(lhs, rational_of(factor) * to_logsqrt(g));
}

bool check_radical_derivative(const Expr& h, const Expr& numerator, const Expr& denominator,
                              const Polynomial& radicand)
{
    const LogSqrtExpression dh = differentiate_logsqrt(to_logsqrt(h));
    if (!dh.log_terms.empty() || !dh.rational_part.is_zero())
        return false;
    const RationalFunction u(radicand);
    LogSqrtExpression scaled;  // h' * sqrt(u)
    for (const auto& t : dh.sqrt_terms) {
        if (t.argument == u)
            scaled.rational_part = scaled.rational_part + t.coefficient * u;
        else
            scaled.sqrt_terms.push_back({t.coefficient, t.argument * u});
    }
    scaled.normalize();
    return logsqrt_equal(rational_of(denominator) * scaled, to_logsqrt(numerator));
}

bool check_rationalization(const Expr& numerator, const Expr& rhs)
{
    const LogSqrtExpression n = to_logsqrt(numerator);
    if (!n.log_terms.empty() || n.sqrt_terms.size() != 1)
        return false;
    const auto& s = n.sqrt_terms.front();
    const RationalFunction lhs = n.rational_part * n.rational_part - s.coefficient * s.coefficient * s.argument;
    return lhs == rational_of(rhs);
}

bool check_triangle_equality(EqualityCase which, const Interval& param, const Interval& constant, long bits,
                             const Rational& tolerance)
{
    PrecisionBudget p;
    p.working_bits = bits;
    p.max_bits = bits;
    const Interval gap = equality_gap(which, param, constant, p);
    return -tolerance <= gap.lo() && gap.hi() <= tolerance;
}

// ---------------------------------------------------------------------------

namespace {

using Checker = std::function<ClaimCheck(const Json&)>;

ClaimCheck compare(bool recorded, bool recomputed, const std::string& what = {})
{
    if (recorded == recomputed)
        return {true, what.empty() ? "confirmed" : what};
    return {false, "recorded " + std::string(recorded ? "true" : "false") + ", recomputed " +
                       (recomputed ? "true" : "false") + (what.empty() ? "" : " (" + what + ")")};
}

PrecisionBudget fixed_bits(long bits)
{
    PrecisionBudget p;
    p.working_bits = bits;
    p.max_bits = bits;
    return p;
}

const std::map<std::string, Checker>& checkers()
{
    static const std::map<std::string, Checker> table = {
        {"sign_list",
         [](const Json& c) {
             const SignList got = revise_sign_list(certipoly::sign_list(
                 discriminant_sequence(polynomial_from_json(c.at("polynomial")), Execution::parallel)));
             std::vector<int> expected = c.at("signs").get<std::vector<int>>();
             return compare(c.at("holds").get<bool>(), got.signs == expected, format_sign_list(got));
         }},
        {"root_count",
         [](const Json& c) {
             const int n = sturm_chain(polynomial_from_json(c.at("polynomial"))).count(rat(c, "lo"), rat(c, "hi"));
             return compare(true, n == c.at("count").get<int>(), std::to_string(n) + " roots");
         }},
        {"poly_sign",
         [](const Json& c) {
             const int s = polynomial_from_json(c.at("polynomial")).sign_at(rat(c, "at"));
             return compare(true, s == c.at("sign").get<int>());
         }},
        {"poly_identity",
         [](const Json& c) {
             const auto a = as_polynomial(expr(c, "lhs"));
             const auto b = as_polynomial(expr(c, "rhs"));
             return compare(c.at("holds").get<bool>(), a && b && *a == *b);
         }},
        {"expr_sign",
         [](const Json& c) {
             std::optional<int> s;
             try {
                 s = eval_expr(expr(c, "expression"), interval_from_json(c.at("at")), fixed_bits(c.at("bits").get<long>()))
                         .certified_sign();
             } catch (const DomainError&) {
             }
             if (c.at("sign").is_null())
                 return compare(true, !s.has_value(), "sign undecided");
             return compare(true, s && *s == c.at("sign").get<int>());
         }},
        {"expr_enclosure",
         [](const Json& c) {
             const Interval v =
                 eval_expr(expr(c, "expression"), interval_from_json(c.at("at")), fixed_bits(c.at("bits").get<long>()));
             return compare(true, interval_from_json(c.at("value")).contains(v));
         }},
        {"rational_order",
         [](const Json& c) {
             const Rational a = rat(c, "a");
             const Rational b = rat(c, "b");
             return compare(c.at("holds").get<bool>(), c.at("strict").get<bool>() ? a < b : a <= b);
         }},
        {"interval_subset",
         [](const Json& c) {
             return compare(c.at("holds").get<bool>(),
                            interval_from_json(c.at("outer")).contains(interval_from_json(c.at("inner"))));
         }},
        {"published_decimal",
         [](const Json& c) {
             const Interval d = decimal_enclosure(interval_from_json(c.at("enclosure")), c.at("digits").get<int>());
             return compare(c.at("holds").get<bool>(), d.contains(rat(c, "published")));
         }},
        {"factorization",
         [](const Json& c) {
             std::vector<Polynomial> factors;
             for (const auto& f : c.at("factors"))
                 factors.push_back(polynomial_from_json(f));
             const FactorizationVerdict v =
                 verify_factorization(polynomial_from_json(c.at("polynomial")), factors, rat(c, "constant"));
             return compare(c.at("holds").get<bool>(), v.holds, v.detail);
         }},
        {"resultant",
         [](const Json& c) {
             const Polynomial r =
                 resultant_in_t(polynomial_from_json(c.at("p")), bivariate_from_json(c.at("q")), Execution::parallel);
             return compare(true, r == polynomial_from_json(c.at("result")));
         }},
        {"resultant_value",
         [](const Json& c) {
             const Rational r = resultant_univariate(polynomial_from_json(c.at("f")), polynomial_from_json(c.at("g")));
             return compare(true, r == rat(c, "value"));
         }},
        {"derivative",
         [](const Json& c) {
             const LogSqrtExpression d =
                 differentiate_logsqrt(to_logsqrt(expr(c, "expression")), c.at("order").get<int>());
             return compare(c.at("holds").get<bool>(), logsqrt_equal(d, to_logsqrt(expr(c, "expected"))));
         }},
        {"specialization",
         [](const Json& c) {
             return compare(c.at("holds").get<bool>(), check_specialization(expr(c, "expression"), c.at("order").get<int>(),
                                                                            rat(c, "at"), expr(c, "expected")));
         }},
        {"elimination",
         [](const Json& c) {
             const ReducedElimination e = eliminate_boundary_radicals();
             const bool ok = e.t_content == polynomial_from_json(c.at("content")) &&
                             e.reduced == bivariate_from_json(c.at("eliminant")) * rat(c, "constant");
             return compare(c.at("holds").get<bool>(), ok);
         }},
        {"positive_on",
         [](const Json& c) {
             const PositivityResult r = certify_positive_on(expr(c, "expression"), rat(c, "lo"), rat(c, "hi"),
                                                            fixed_bits(c.at("bits").get<long>()),
                                                            c.at("limit").get<long>());
             return compare(true, to_string(r.verdict) == c.at("verdict").get<std::string>() &&
                                      r.boxes == c.at("boxes").get<long>(),
                            std::to_string(r.boxes) + " boxes");
         }},
        {"log_quotient_derivative",
         [](const Json& c) {
             return compare(c.at("holds").get<bool>(),
                            check_log_quotient_derivative(expr(c, "f"), expr(c, "factor"), expr(c, "g")));
         }},
        {"radical_derivative",
         [](const Json& c) {
             const Polynomial u = polynomial_from_json(c.at("radicand"));
             return compare(c.at("holds").get<bool>(),
                            check_radical_derivative(expr(c, "h"), expr(c, "numerator"), expr(c, "denominator"), u));
         }},
        {"rationalization",
         [](const Json& c) {
             return compare(c.at("holds").get<bool>(), check_rationalization(expr(c, "numerator"), expr(c, "rhs")));
         }},
        {"triangle_equality",
         [](const Json& c) {
             const EqualityCase which =
                 c.at("case").get<std::string>() == "theorem1" ? EqualityCase::theorem1 : EqualityCase::theorem2;
             return compare(c.at("holds").get<bool>(),
                            check_triangle_equality(which, interval_from_json(c.at("parameter")),
                                                    interval_from_json(c.at("constant")), c.at("bits").get<long>(),
                                                    rat(c, "tolerance")));
         }},
    };
    return table;
}

}  // namespace

ClaimCheck recheck_claim(const Json& c)
{
    try {
        const std::string kind = c.at("kind").get<std::string>();
        const auto it = checkers().find(kind);
        if (it == checkers().end())
            return {false, "unknown claim kind " + kind};
        return it->second(c);
    } catch (const Json::exception& e) {
        return {false, std::string("malformed claim: ") + e.what()};
    } catch (const Error& e) {
        return {false, e.what()};
    }
}

void Evidence::require(Json claim, const std::string& failure)
{
    const bool ok = claim.at("holds").get<bool>();
    require(ok, std::move(claim), failure);
}

void Evidence::require(bool ok, Json claim, const std::string& failure)
{
    add(std::move(claim));
    if (!ok)
        fail(failure);
}

void Evidence::expect_sign(const SignCertificate& c, int expected, const std::string& what)
{
    add(claim::expr_sign(c));
    if (!c.sign)
        undecided(what + ": " + c.note);
    if (*c.sign != expected)
        fail(what + ": sign " + std::to_string(*c.sign) + ", expected " + std::to_string(expected));
}

void Evidence::fail(const std::string& why)
{
    verdict = Verdict::falsified;
    detail = why;
    throw EvidenceStop{};
}

void Evidence::undecided(const std::string& why)
{
    verdict = Verdict::indeterminate;
    detail = why;
    throw EvidenceStop{};
}

}  // namespace certipoly
