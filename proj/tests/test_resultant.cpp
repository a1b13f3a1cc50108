#include "support.hpp"

#include "certipoly/data.hpp"
#include "certipoly/resultant.hpp"

#include <doctest.h>

using namespace certipoly;

namespace {

BivariatePolynomial random_bivariate(int deg_t, int deg_k, long bound)
{
    std::vector<Polynomial> c;
    for (int i = 0; i <= deg_t; ++i)
        c.push_back(test::random_poly(deg_k, bound));
    return BivariatePolynomial(c);
}

}  // namespace

TEST_SUITE("resultant")
{
    TEST_CASE("interpolation reproduces the polynomial")
    {
        const Polynomial f = test::random_poly(9, 1000);
        std::vector<Rational> nodes, values;
        for (long x = -5; x <= 4; ++x) {
            nodes.push_back(x);
            values.push_back(f(Rational(x)));
        }
        CHECK(interpolate(nodes, values) == f);
    }

    TEST_CASE("Res_t specialises to the univariate resultant at unused k")
    {
        for (int i = 0; i < 20; ++i) {
            const BivariatePolynomial p = random_bivariate(static_cast<int>(test::uniform(1, 4)), 2, 20);
            const BivariatePolynomial q = random_bivariate(static_cast<int>(test::uniform(1, 4)), 3, 20);
            const Polynomial r = resultant_in_t(p, q);
            for (const Rational& k : {Rational(1, 3), Rational(-7, 2), Rational(1000)}) {
                const Polynomial pk = p.at_k(k), qk = q.at_k(k);
                if (pk.degree() != p.degree_t() || qk.degree() != q.degree_t())
                    continue;
                CHECK(r(k) == test::sylvester_oracle(pk, qk));
            }
            CHECK(resultant_in_t(p, q, Execution::serial) == r);
        }
        CHECK_THROWS_AS(resultant_in_t(BivariatePolynomial{}, random_bivariate(2, 2, 5)), InvalidInput);
    }

    TEST_CASE("factorization verdicts")
    {
        const Polynomial a{1, 2}, b{-3, 0, 1};
        CHECK(verify_factorization(a * b * Rational(6), {a, b}, Rational(6)).holds);
        const FactorizationVerdict wrong_constant = verify_factorization(a * b * Rational(6), {a, b}, Rational(5));
        CHECK_FALSE(wrong_constant.holds);
        CHECK(wrong_constant.quotient);
        const FactorizationVerdict not_dividing = verify_factorization(a * b + Polynomial{1}, {a, b}, Rational(1));
        CHECK_FALSE(not_dividing.holds);
        CHECK_FALSE(not_dividing.quotient);
    }

    TEST_CASE("radical elimination vanishes on solutions")
    {
        // u = sqrt 2, v = sqrt 3 solve u + v - c = 0 with c = u + v; the
        // eliminant must vanish at that c without radicals.
        RadicalSystem s;
        s.a = BivariatePolynomial::from_t(Polynomial{1});
        s.b = BivariatePolynomial::from_t(Polynomial{1});
        s.c = BivariatePolynomial::from_k(Polynomial{0, -1});
        s.u_square = BivariatePolynomial::from_t(Polynomial{2});
        s.v_square = BivariatePolynomial::from_t(Polynomial{3});
        const BivariatePolynomial e = eliminate_radicals(s);
        // Minimal polynomial of sqrt2 + sqrt3 is k^4 - 10k^2 + 1.
        const Polynomial in_k = e.at_t(Rational(0));
        CHECK(primitive_part(in_k) == primitive_part(Polynomial{1, 0, -10, 0, 1}));
    }
}

TEST_SUITE("property")
{
    TEST_CASE("boundary elimination reproduces p3 and splits off the t content")
    {
        const DataSet d = load_data_set(CERTIPOLY_DATA_DIR);
        const ReducedElimination r = eliminate_boundary_radicals();
        CHECK(r.reduced == d.p3);
        BivariatePolynomial back = r.reduced;
        back *= BivariatePolynomial::from_t(r.t_content);
        CHECK(back == r.raw);
    }
}
