#include "support.hpp"

#include "certipoly/claims.hpp"

#include <doctest.h>

using namespace certipoly;

namespace {

const Expr x = variable();

std::vector<Json> sample_claims()
{
    const Polynomial f = test::from_roots({Rational(1), Rational(2), Rational(-3)});
    const PrecisionBudget p;
    std::vector<Json> out;
    out.push_back(claim::sign_list(f, revise_sign_list(sign_list(discriminant_sequence(f))), true));
    out.push_back(claim::root_count(f, Rational(0), Rational(5), 2));
    out.push_back(claim::poly_sign(f, Rational(3), 1));
    out.push_back(claim::poly_identity(mul(add(x, constant(1)), sub(x, constant(1))), sub(mul(x, x), constant(1)), true));
    out.push_back(claim::expr_sign(certify_sign(sub(x, sqrt(constant(2))), Rational(3, 2), p)));
    out.push_back(claim::expr_enclosure(ln(x), Interval(Rational(2)), 128, interval_ln(Interval(Rational(2)), p)));
    out.push_back(claim::rational_order("a < b", Rational(1, 3), Rational(1, 2), true));
    out.push_back(claim::interval_subset("inner", Interval(1, 2), Interval(0, 3)));
    out.push_back(claim::published_decimal("v", Interval(Rational(1, 3)), 4, Rational(3333, 10000)));
    out.push_back(claim::factorization(f * Rational(4), {Polynomial{-1, 1}, Polynomial{-2, 1}, Polynomial{3, 1}},
                                       Rational(4), true));
    out.push_back(claim::resultant_value(Polynomial{-2, 1}, Polynomial{1, 0, 1}, Rational(5)));
    out.push_back(claim::derivative(mul(x, ln(x)), 1, add(ln(x), constant(1)), true));
    out.push_back(claim::rationalization(add(x, mul(constant(2), sqrt(sub(constant(1), mul(x, x))))),
                                         sub(mul(constant(5), mul(x, x)), constant(4)), true));
    out.push_back(claim::positive_on(add(mul(x, x), constant(1)), Rational(-1), Rational(1), 128, 1000,
                                     certify_positive_on(add(mul(x, x), constant(1)), Rational(-1), Rational(1), p, 1000)));
    out.push_back(claim::triangle_equality(EqualityCase::theorem2, Interval(Rational(1, 2)), Interval(Rational(1)), 256,
                                           Rational(1, 1000000000), true));
    return out;
}

}  // namespace

TEST_SUITE("claims")
{
    TEST_CASE("every claim kind rechecks from its JSON alone")
    {
        for (const Json& c : sample_claims()) {
            const Json round = Json::parse(c.dump());
            const ClaimCheck r = recheck_claim(round);
            CHECK_MESSAGE(r.ok, c.at("kind").get<std::string>() << ": " << r.detail);
        }
    }

    TEST_CASE("tampered claims are rejected")
    {
        for (Json c : sample_claims()) {
            if (c.contains("holds"))
                c["holds"] = !c["holds"].get<bool>();
            else if (c.contains("count"))
                c["count"] = c["count"].get<int>() + 1;
            else if (c.contains("sign"))
                c["sign"] = -c["sign"].get<int>();
            else if (c.contains("value"))
                c["value"] = to_json(Interval(Rational(100), Rational(101)));
            else if (c.contains("verdict"))
                c["verdict"] = "falsified";
            else if (c.contains("result"))
                c["result"] = to_json(Polynomial{1});
            else
                continue;
            CHECK_FALSE_MESSAGE(recheck_claim(c).ok, c.dump());
        }
    }

    TEST_CASE("malformed claims fail without throwing")
    {
        CHECK_FALSE(recheck_claim(Json{{"kind", "no_such_kind"}}).ok);
        CHECK_FALSE(recheck_claim(Json{{"kind", "root_count"}}).ok);
        CHECK_FALSE(recheck_claim(Json::array()).ok);
    }

    TEST_CASE("json conversions round trip")
    {
        const Polynomial f = test::random_poly(7, 1L << 50) * Rational(1, 7);
        CHECK(polynomial_from_json(to_json(f)) == f);
        const Interval iv(Rational(-1, 3), Rational(5, 7));
        CHECK(interval_from_json(to_json(iv)) == iv);
        BivariatePolynomial q(std::vector<Polynomial>{Polynomial{1, 2}, Polynomial{0, 0, -3}});
        CHECK(bivariate_from_json(to_json(q)) == q);
    }

    TEST_CASE("evidence stops on the first failed requirement")
    {
        Evidence ev;
        ev.require(claim::rational_order("ok", Rational(1), Rational(2), true), "unused");
        CHECK_THROWS_AS(ev.require(claim::rational_order("bad", Rational(3), Rational(2), true), "3 < 2 failed"),
                        EvidenceStop);
        CHECK(ev.verdict == Verdict::falsified);
        CHECK(ev.detail == "3 < 2 failed");
        CHECK(ev.claims.size() == 2);

        Evidence un;
        SignCertificate c;
        CHECK_THROWS_AS(un.expect_sign(c, 1, "undecided"), EvidenceStop);
        CHECK(un.verdict == Verdict::indeterminate);
    }
}
