#include "support.hpp"

#include "certipoly/interval.hpp"

#include <cmath>
#include <doctest.h>

using namespace certipoly;

namespace {

double to_double(const Rational& q)
{
    return q.get_d();
}

Rational positive_sample()
{
    Rational q(test::uniform(1, 1L << 40), test::uniform(1, 1L << 30));
    q.canonicalize();
    return q;
}

}  // namespace

TEST_SUITE("interval")
{
    TEST_CASE("arithmetic encloses point results")
    {
        for (int i = 0; i < 1000; ++i) {
            const Rational a = test::random_rational(1000, 97), b = test::random_rational(1000, 89);
            const Rational c = test::random_rational(1000, 83), d = test::random_rational(1000, 79);
            const Interval x(std::min(a, b), std::max(a, b)), y(std::min(c, d), std::max(c, d));
            for (const Rational& u : {a, b})
                for (const Rational& v : {c, d}) {
                    CHECK((x + y).contains(u + v));
                    CHECK((x - y).contains(u - v));
                    CHECK((x * y).contains(u * v));
                    if (!y.contains_zero())
                        CHECK((x / y).contains(u / v));
                }
        }
        CHECK_THROWS_AS(Interval(1) / Interval(-1, 1), DomainError);
        CHECK_THROWS_AS(Interval(2, 1), InvalidInput);
    }

    TEST_CASE("even powers of intervals straddling zero")
    {
        CHECK(pow(Interval(-2, 3), 2) == Interval(0, 9));
        CHECK(pow(Interval(-3, -2), 2) == Interval(4, 9));
        CHECK(pow(Interval(-2, 3), 3) == Interval(-8, 27));
    }

    TEST_CASE("elementary functions reject points outside the domain")
    {
        PrecisionBudget p;
        CHECK_THROWS_AS(interval_ln(Interval(-1, 2), p), DomainError);
        CHECK_THROWS_AS(interval_sqrt(Interval(-1, 2), p), DomainError);
        CHECK(interval_sqrt(Interval(4), p).contains(Rational(2)));
    }

    TEST_CASE("precision budget growth stops at the ceiling")
    {
        PrecisionBudget p{64, 256, 2};
        auto g = p.grown();
        REQUIRE(g);
        CHECK(g->working_bits == 128);
        g = g->grown();
        REQUIRE(g);
        CHECK(g->working_bits == 256);
        CHECK_FALSE(g->grown());
        CHECK_THROWS_AS((PrecisionBudget{0, 8, 2}).validate(), InvalidInput);
        CHECK_THROWS_AS((PrecisionBudget{16, 8, 2}).validate(), InvalidInput);
    }
}

TEST_SUITE("property")
{
    // Enclosures at b and 2b bits both contain the true value: they must
    // intersect, the finer one must be narrower, and both must agree with
    // libm and with the exact inverse checks below.
    TEST_CASE("containment under precision doubling")
    {
        constexpr int kSamples = 10000;
        int failures = 0;
        for (int i = 0; i < kSamples; ++i) {
            const Rational q = positive_sample();
            const Interval x(q);
            const long bits = 64 + 32 * (i % 4);
            const PrecisionBudget coarse{bits, 4096, 2}, fine{2 * bits, 4096, 2};

            const Interval l1 = interval_ln(x, coarse), l2 = interval_ln(x, fine);
            const Interval s1 = interval_sqrt(x, coarse), s2 = interval_sqrt(x, fine);
            const Rational e_arg = Rational(test::uniform(-4000, 4000), 100);
            const Interval e1 = interval_exp(Interval(e_arg), coarse), e2 = interval_exp(Interval(e_arg), fine);

            bool ok = l1.intersects(l2) && s1.intersects(s2) && e1.intersects(e2);
            ok = ok && l2.width() <= l1.width() && s2.width() <= s1.width() && e2.width() <= e1.width();
            // sqrt: exact squares bracket q.
            ok = ok && s2.lo() * s2.lo() <= q && q <= s2.hi() * s2.hi();
            // libm agreement within double resolution.
            const double ln_ref = std::log(to_double(q));
            ok = ok && std::abs(to_double(l2.midpoint()) - ln_ref) <= 1e-12 * std::max(1.0, std::abs(ln_ref));
            const double exp_ref = std::exp(to_double(e_arg));
            ok = ok && std::abs(to_double(e2.midpoint()) - exp_ref) <= 1e-12 * exp_ref;
            if (!ok)
                ++failures;
        }
        CHECK(failures == 0);
    }

    TEST_CASE("exp of a ln enclosure contains the argument")
    {
        const PrecisionBudget p{160, 4096, 2};
        for (int i = 0; i < 500; ++i) {
            const Rational q = positive_sample();
            CHECK(interval_exp(interval_ln(Interval(q), p), p).contains(q));
        }
    }

    TEST_CASE("outward rounding only widens")
    {
        for (int i = 0; i < 2000; ++i) {
            const Rational a = test::random_rational(1L << 50, 1L << 40);
            const Interval x(a, a + Rational(test::uniform(0, 100), 1L << 45));
            for (long bits : {16L, 64L, 256L}) {
                const Interval r = round_outward(x, bits);
                CHECK(r.contains(x));
            }
        }
    }
}
