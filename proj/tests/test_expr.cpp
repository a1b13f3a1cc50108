#include "support.hpp"

#include "certipoly/expr.hpp"
#include "certipoly/logsqrt.hpp"
#include "certipoly/theorems.hpp"

#include <doctest.h>

using namespace certipoly;

namespace {

// Positive on the real line: q^2 + c with c > 0.
Expr positive_poly()
{
    const Polynomial q = test::random_poly(static_cast<int>(test::uniform(0, 2)), 5);
    return poly_expr(q * q + Polynomial::constant(test::uniform(1, 9)));
}

Expr random_rational_function()
{
    return div(poly_expr(test::random_poly(static_cast<int>(test::uniform(0, 3)), 9)), positive_poly());
}

// R + c1 ln(a1) + d1 sqrt(b1), all pieces defined on the whole line.
Expr random_logsqrt_expr()
{
    return add(add(random_rational_function(), mul(random_rational_function(), ln(positive_poly()))),
               mul(random_rational_function(), sqrt(positive_poly())));
}

Rational value_at(const Expr& e, const Rational& x, long bits)
{
    return eval_expr(e, Interval(x), PrecisionBudget{bits, bits, 2}).midpoint();
}

}  // namespace

TEST_SUITE("expr")
{
    TEST_CASE("prefix text round trip")
    {
        for (int i = 0; i < 50; ++i) {
            const Expr e = random_logsqrt_expr();
            CHECK(to_string(parse_expr(to_string(e))) == to_string(e));
        }
        CHECK_THROWS_AS(parse_expr("(add x"), ParseError);
        CHECK_THROWS_AS(parse_expr("(frob x 1)"), ParseError);
    }

    TEST_CASE("polynomial subexpressions collapse exactly")
    {
        const Polynomial f = test::random_poly(6, 100);
        const auto back = as_polynomial(poly_expr(f));
        REQUIRE(back);
        CHECK(*back == f);
        CHECK_FALSE(as_polynomial(ln(variable())));
    }

    TEST_CASE("evaluation reports the failing subtree on a domain error")
    {
        const Expr e = add(variable(), ln(sub(variable(), constant(2))));
        try {
            eval_expr(e, Interval(Rational(1)), PrecisionBudget{});
            FAIL("expected a domain error");
        } catch (const ExprDomainError& err) {
            CHECK(err.subtree == "(sub x 2)");
            CHECK(std::string(err.what()).find("ln") != std::string::npos);
        }
    }

    TEST_CASE("nested transcendental terms are outside the closed form")
    {
        CHECK_THROWS_AS(to_logsqrt(ln(ln(positive_poly()))), InvalidInput);
        CHECK_THROWS_AS(to_logsqrt(mul(ln(positive_poly()), ln(positive_poly()))), InvalidInput);
    }

    TEST_CASE("rational function arithmetic stays reduced")
    {
        const RationalFunction a(Polynomial{-1, 0, 1}, Polynomial{1, 1});
        CHECK(a.num() == Polynomial{-1, 1});
        CHECK(a.den() == Polynomial{1});
        CHECK(derivative(RationalFunction(Polynomial{0, 1}, Polynomial{1, 1})) ==
              RationalFunction(Polynomial{1}, Polynomial{1, 2, 1}));
    }
}

TEST_SUITE("property")
{
    // Central difference with h = 2^-40 at 512 bits has error ~h^2, far
    // below the 1e-15 tolerance for these smooth expressions.
    TEST_CASE("symbolic derivatives match finite differences")
    {
        const Rational h(1, Integer(1) << 40);
        int mismatches = 0;
        for (int i = 0; i < 60; ++i) {
            const Expr e = random_logsqrt_expr();
            const Expr d1 = derivative_expr(e, 1);
            const Expr d2 = derivative_expr(e, 2);
            for (int j = 0; j < 3; ++j) {
                const Rational x = test::random_rational(30, 7);
                const Rational fd1 = (value_at(e, x + h, 512) - value_at(e, x - h, 512)) / (2 * h);
                const Rational fd2 = (value_at(d1, x + h, 512) - value_at(d1, x - h, 512)) / (2 * h);
                const Rational tol(1, 1000000000000000);
                const Rational s1 = value_at(d1, x, 512), s2 = value_at(d2, x, 512);
                if (abs(fd1 - s1) > tol * (1 + abs(s1)) || abs(fd2 - s2) > tol * (1 + abs(s2)))
                    ++mismatches;
            }
        }
        CHECK(mismatches == 0);
    }

    TEST_CASE("differentiation is linear and composes")
    {
        for (int i = 0; i < 30; ++i) {
            const LogSqrtExpression a = to_logsqrt(random_logsqrt_expr());
            const LogSqrtExpression b = to_logsqrt(random_logsqrt_expr());
            const Rational x = test::random_rational(10, 3);
            const PrecisionBudget p{256, 256, 2};
            const Interval lhs = eval_expr(to_expr(differentiate_logsqrt(a + b)), Interval(x), p);
            const Interval rhs = eval_expr(to_expr(differentiate_logsqrt(a) + differentiate_logsqrt(b)), Interval(x), p);
            CHECK(lhs.intersects(rhs));
            CHECK(differentiate_logsqrt(differentiate_logsqrt(a)) == differentiate_logsqrt(a, 2));
        }
    }
}
