#include "support.hpp"

#include "certipoly/resultant.hpp"
#include "certipoly/subresultant.hpp"

#include <doctest.h>

using namespace certipoly;

TEST_SUITE("subresultant")
{
    TEST_CASE("resultant of planted roots is the product of values")
    {
        for (int i = 0; i < 100; ++i) {
            std::vector<Rational> roots;
            for (int k = 0, n = static_cast<int>(test::uniform(1, 5)); k < n; ++k)
                roots.push_back(test::uniform(-9, 9));
            const Polynomial f = test::from_roots(roots);
            const Polynomial g = test::random_poly(test::uniform(1, 6), 20);
            Rational expected = 1;
            for (const auto& r : roots)
                expected *= g(r);
            CHECK(resultant_univariate(f, g) == expected);
            CHECK(Rational(resultant_int(primitive_integer(f), primitive_integer(g))) ==
                  test::sylvester_oracle(Polynomial(primitive_integer(f)), Polynomial(primitive_integer(g))));
        }
    }

    TEST_CASE("gcd degree from the PRS")
    {
        const Polynomial common = test::from_roots({Rational(2), Rational(-5)});
        const Polynomial f = common * test::from_roots({Rational(7), Rational(1), Rational(0)});
        const Polynomial g = common * test::from_roots({Rational(-1), Rational(3)});
        const SubresultantSequence s = subresultant_prs(f, g);
        CHECK(primitive_part(s.last()) == primitive_part(common));
        CHECK(resultant_int(primitive_integer(f), primitive_integer(g)) == 0);
        CHECK_THROWS_AS(subresultant_prs(g, f), InvalidInput);
    }
}

TEST_SUITE("property")
{
    TEST_CASE("subresultant resultant equals the Sylvester determinant on 1000 random pairs")
    {
        int mismatches = 0;
        for (int i = 0; i < 1000; ++i) {
            const Polynomial f = test::random_poly(test::uniform(1, 7), 1L << test::uniform(2, 20));
            const Polynomial g = test::random_poly(test::uniform(1, 7), 1L << test::uniform(2, 20));
            const Rational oracle = test::sylvester_oracle(f, g);
            const IntPoly pf = primitive_integer(f), pg = primitive_integer(g);
            if (Rational(resultant_int(pf, pg)) != test::sylvester_oracle(Polynomial(pf), Polynomial(pg)))
                ++mismatches;
            if (resultant_univariate(f, g) != oracle)
                ++mismatches;
        }
        CHECK(mismatches == 0);
    }
}
