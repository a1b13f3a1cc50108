#include "support.hpp"

#include "certipoly/interval.hpp"
#include "certipoly/numeric.hpp"

#include <doctest.h>

using namespace certipoly;

TEST_SUITE("numeric")
{
    TEST_CASE("rational text round trip")
    {
        CHECK(parse_rational("-6/4") == Rational(-3, 2));
        CHECK(parse_rational("12") == 12);
        CHECK(to_string(Rational(-3, 2)) == "-3/2");
        CHECK(parse_decimal("0.6898369707") == Rational(6898369707, 10000000000));
        CHECK(parse_decimal("-1.25") == Rational(-5, 4));
        CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
        CHECK_THROWS_AS(parse_rational("abc"), ParseError);
        for (int i = 0; i < 200; ++i) {
            const Rational q = test::random_rational(1000000, 1000);
            CHECK(parse_rational(to_string(q)) == q);
        }
    }

    TEST_CASE("decimal preview rounds to significant digits")
    {
        CHECK(to_decimal(Rational(2, 3), 4) == "0.6667");
        CHECK(to_decimal(Rational(411353761088, 100000000000), 10) == "4.113537611");
    }

    TEST_CASE("dyadic rounding brackets the value")
    {
        for (int i = 0; i < 500; ++i) {
            const Rational q = test::random_rational(1L << 40, 1L << 30);
            for (long bits : {8L, 53L, 200L}) {
                const Rational lo = round_down(q, bits), hi = round_up(q, bits);
                CHECK(lo <= q);
                CHECK(q <= hi);
                CHECK(hi - lo <= abs(q) * pow2(1 - bits) + pow2(-bits));
            }
        }
    }

    TEST_CASE("decimal enclosure contains the interval on the decimal grid")
    {
        for (int i = 0; i < 500; ++i) {
            const Rational a = test::random_rational(1L << 40, 1L << 20);
            const Rational b = a + Rational(test::uniform(0, 1000), 1L << 40);
            const Interval x(a, b);
            const Interval d = decimal_enclosure(x, 10);
            CHECK(d.contains(x));
            CHECK(d.width() <= x.width() + 2 * abs(a) * Rational(1, 1000000000));
        }
        const Interval d = decimal_enclosure(Interval(Rational(411353761088, 100000000000)), 10);
        CHECK(d.lo() == Rational(411353761, 100000000));
        CHECK(d.hi() == Rational(4113537611, 1000000000));
    }
}
