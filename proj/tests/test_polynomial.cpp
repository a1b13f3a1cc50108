#include "support.hpp"

#include "certipoly/poly_io.hpp"
#include "certipoly/polynomial.hpp"

#include <doctest.h>

using namespace certipoly;

TEST_SUITE("polynomial")
{
    TEST_CASE("ring identities on random polynomials")
    {
        for (int i = 0; i < 200; ++i) {
            const Polynomial a = test::random_poly(test::uniform(0, 8), 50);
            const Polynomial b = test::random_poly(test::uniform(0, 8), 50);
            const Polynomial c = test::random_poly(test::uniform(0, 8), 50);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - a).is_zero());
            CHECK(derivative(a * b) == derivative(a) * b + a * derivative(b));
            const Rational x = test::random_rational(100, 17);
            CHECK((a * b)(x) == a(x) * b(x));
            CHECK(compose(a, b)(x) == a(b(x)));
        }
    }

    TEST_CASE("division with remainder reconstructs the dividend")
    {
        for (int i = 0; i < 200; ++i) {
            const Polynomial f = test::random_poly(test::uniform(0, 12), 1000);
            const Polynomial g = test::random_poly(test::uniform(0, 6), 1000);
            const auto [q, r] = divrem(f, g);
            CHECK(q * g + r == f);
            CHECK(r.degree() < g.degree());
            CHECK(exact_div(f * g, g) == f);
        }
        CHECK_THROWS_AS(exact_div(Polynomial{1, 0, 1}, Polynomial{1, 1}), DivisibilityError);
    }

    TEST_CASE("gcd recovers a planted common factor")
    {
        for (int i = 0; i < 100; ++i) {
            const Polynomial common = test::from_roots({test::random_rational(20, 5), test::random_rational(20, 5)});
            const Polynomial a = test::from_roots({Rational(101), Rational(-103)});
            const Polynomial b = test::from_roots({Rational(107), Rational(1, 109)});
            const Polynomial g = gcd(common * a, common * b);
            CHECK(primitive_part(g) == primitive_part(common));
        }
    }

    TEST_CASE("squarefree part drops repeated roots")
    {
        const Polynomial f = test::from_roots({Rational(1), Rational(1), Rational(2), Rational(2), Rational(2), Rational(-3)});
        CHECK(primitive_part(squarefree_part(f)) == primitive_part(test::from_roots({Rational(1), Rational(2), Rational(-3)})));
    }

    TEST_CASE("Cauchy bound exceeds every root")
    {
        const Polynomial f = test::from_roots({Rational(-50), Rational(3, 7), Rational(49)});
        CHECK(cauchy_bound(f) > 50);
    }

    TEST_CASE("polynomial file round trip")
    {
        for (int i = 0; i < 50; ++i) {
            Polynomial f = test::random_poly(test::uniform(0, 30), 1L << 40) * Rational(1, test::uniform(1, 9));
            CHECK(parse_polynomial(format_polynomial(f)) == f);
            const std::string text = format_polynomial(f);
            CHECK(format_polynomial(parse_polynomial(text)) == text);
        }
        BivariatePolynomial q(std::vector<Polynomial>{Polynomial{1, 2}, Polynomial{}, Polynomial{0, 0, -3}});
        CHECK(parse_bivariate(format_bivariate(q)) == q);
    }

    TEST_CASE("malformed polynomial text reports the line")
    {
        try {
            parse_polynomial("degree 2\n2 1\nx 3\n");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
        CHECK_THROWS_AS(parse_polynomial("degree 2\n3 1\n"), ParseError);
        CHECK_THROWS_AS(parse_polynomial("degree 2\n-1 1\n"), ParseError);
    }
}
