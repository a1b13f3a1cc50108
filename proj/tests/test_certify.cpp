#include "support.hpp"

#include "certipoly/certify.hpp"

#include <cmath>
#include <doctest.h>

using namespace certipoly;

namespace {

const Expr x = variable();

}  // namespace

TEST_SUITE("certify")
{
    TEST_CASE("signs around sqrt 2")
    {
        const Expr e = sub(x, sqrt(constant(2)));
        const PrecisionBudget p;
        const SignCertificate above = certify_sign(e, Rational(3, 2), p);
        const SignCertificate below = certify_sign(e, Rational(7, 5), p);
        REQUIRE(above.sign);
        REQUIRE(below.sign);
        CHECK(*above.sign == 1);
        CHECK(*below.sign == -1);
        CHECK(recheck(above));
        CHECK(recheck(below));
    }

    TEST_CASE("an exact zero is reported only for a point value")
    {
        const SignCertificate c = certify_sign(sub(mul(x, x), constant(9)), Rational(3), PrecisionBudget{});
        REQUIRE(c.sign);
        CHECK(*c.sign == 0);
        CHECK(c.exact);
    }

    TEST_CASE("precision exhaustion is undecided rather than wrong")
    {
        // sqrt 2 minus its 200-bit truncation is positive but below 2^-200.
        const Interval s = interval_sqrt(Interval(Rational(2)), PrecisionBudget{400, 400, 2});
        const Rational r = round_down(s.lo(), 200);
        const Expr e = sub(sqrt(constant(2)), constant(r));
        const SignCertificate starved = certify_sign(e, Rational(0), PrecisionBudget{32, 64, 2});
        CHECK_FALSE(starved.sign);
        const SignCertificate fed = certify_sign(e, Rational(0), PrecisionBudget{32, 1024, 2});
        REQUIRE(fed.sign);
        CHECK(*fed.sign == 1);
    }

    TEST_CASE("sign change refinement brackets e")
    {
        const Expr e = sub(ln(x), constant(1));
        const Rational w(1, 1000000000);
        const SignChangeRoot r = refine_sign_change(e, Rational(2), Rational(3), -1, w, PrecisionBudget{});
        REQUIRE(r.verdict == Verdict::certified);
        CHECK(r.hi - r.lo <= w);
        CHECK(r.lo.get_d() <= std::exp(1.0) + 1e-15);
        CHECK(r.hi.get_d() >= std::exp(1.0) - 1e-15);
    }

    TEST_CASE("positivity by subdivision")
    {
        const PrecisionBudget p;
        const Expr pos = add(mul(sub(x, constant(1)), sub(x, constant(1))), constant(1));
        CHECK(certify_positive_on(pos, Rational(-5), Rational(5), p, 10000).verdict == Verdict::certified);

        const PositivityResult neg = certify_positive_on(sub(mul(x, x), constant(2)), Rational(0), Rational(2), p, 10000);
        CHECK(neg.verdict == Verdict::falsified);
        REQUIRE(neg.witness);

        const Expr touching = mul(sub(x, constant(1)), sub(x, constant(1)));
        const PositivityResult t = certify_positive_on(touching, Rational(0), Rational(2), p, 200);
        CHECK(t.verdict != Verdict::certified);
    }

    TEST_CASE("equilateral triangles close both equality gaps")
    {
        const PrecisionBudget p{256, 256, 2};
        // x = 3 gives sides 12:12:12; t = 1/2 gives 1:1:1.
        for (const Rational& lambda : {Rational(0), Rational(5), Rational(6)}) {
            const Interval g = equality_gap(EqualityCase::theorem1, Interval(Rational(3)), Interval(lambda), p);
            CHECK(g.contains(Rational(0)));
            CHECK(g.width() < Rational(1, 1000000000000));
        }
        const Interval g2 = equality_gap(EqualityCase::theorem2, Interval(Rational(1, 2)), Interval(Rational(7, 10)), p);
        CHECK(g2.contains(Rational(0)));
    }

    TEST_CASE("verdict ordering")
    {
        CHECK(worst(Verdict::certified, Verdict::indeterminate) == Verdict::indeterminate);
        CHECK(worst(Verdict::falsified, Verdict::indeterminate) == Verdict::falsified);
        CHECK(to_string(Verdict::certified) == "certified");
    }
}
