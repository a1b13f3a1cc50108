#include "support.hpp"

#include "certipoly/data.hpp"
#include "certipoly/discrimination.hpp"
#include "certipoly/root_isolation.hpp"

#include <doctest.h>

using namespace certipoly;

namespace {

struct Planted {
    Polynomial f;
    RootCount truth;
};

// Distinct rational roots, some repeated, times irreducible quadratics x^2 + a.
Planted planted(int real, int pairs)
{
    std::vector<Rational> roots;
    while (static_cast<int>(roots.size()) < real) {
        const Rational r = test::random_rational(40, 7);
        if (std::find(roots.begin(), roots.end(), r) == roots.end())
            roots.push_back(r);
    }
    Polynomial f = test::from_roots(roots);
    if (real > 0 && test::uniform(0, 2) == 0)
        f *= test::from_roots({roots.front()});
    std::vector<long> used;
    for (int i = 0; i < pairs; ++i) {
        long a;
        do
            a = test::uniform(1, 60);
        while (std::find(used.begin(), used.end(), a) != used.end());
        used.push_back(a);
        f *= Polynomial{a, 0, 1};
    }
    f *= Rational(test::uniform(1, 5));
    return {f, {real, pairs}};
}

}  // namespace

TEST_SUITE("discrimination")
{
    TEST_CASE("revision replaces internal zero runs with the period-4 pattern")
    {
        CHECK(revise_sign_list(SignList{{1, 0, 0, -1}}).signs == std::vector<int>{1, -1, -1, -1});
        CHECK(revise_sign_list(SignList{{1, 0, 0, 0, 0, 1}}).signs == std::vector<int>{1, -1, -1, 1, 1, 1});
        CHECK(revise_sign_list(SignList{{1, -1, 0, 0}}).signs == std::vector<int>{1, -1, 0, 0});
        CHECK(nonvanishing(SignList{{1, -1, 0, 0}}) == 2);
        CHECK(sign_changes(SignList{{1, -1, -1, 1}}) == 2);
    }

    TEST_CASE("bracketed format round trip")
    {
        const SignList s{{1, 1, -1, 0}};
        CHECK(format_sign_list(s) == "[1, 1, -1, 0]");
        CHECK(parse_sign_list(" [1,1 , -1,0] ").signs == s.signs);
        CHECK_THROWS_AS(parse_sign_list("[1, 2]"), ParseError);
    }

    TEST_CASE("quadratics follow the discriminant")
    {
        CHECK(count_roots(Polynomial{1, 0, 1}) == RootCount{0, 1});
        CHECK(count_roots(Polynomial{-1, 0, 1}) == RootCount{2, 0});
        CHECK(count_roots(Polynomial{1, 2, 1}) == RootCount{1, 0});
        CHECK_THROWS_AS(discriminant_sequence(Polynomial{5}), InvalidInput);
    }

    TEST_CASE("Bareiss determinant matches Gaussian elimination")
    {
        for (int i = 0; i < 100; ++i) {
            const std::size_t n = static_cast<std::size_t>(test::uniform(1, 7));
            IntMatrix m(n, std::vector<Integer>(n));
            std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    m[r][c] = test::uniform(-3, 3);
                    q[r][c] = Rational(m[r][c]);
                }
            CHECK(Rational(determinant(m)) == test::gauss_det(q));
        }
    }

    TEST_CASE("serial and parallel kernels agree")
    {
        for (int i = 0; i < 20; ++i) {
            const Polynomial f = test::random_poly(test::uniform(2, 14), 1000);
            CHECK(discriminant_sequence(f, Execution::serial).values ==
                  discriminant_sequence(f, Execution::parallel).values);
        }
    }
}

TEST_SUITE("property")
{
    TEST_CASE("discrimination agrees with planted roots and with isolation")
    {
        int mismatches = 0;
        for (int i = 0; i < 150; ++i) {
            const Planted p = planted(static_cast<int>(test::uniform(0, 6)), static_cast<int>(test::uniform(0, 3)));
            if (p.f.degree() < 1)
                continue;
            const RootCount rc = count_roots(p.f);
            const int isolated = static_cast<int>(isolate_real_roots(p.f).size());
            if (rc != p.truth || isolated != p.truth.distinct_real)
                ++mismatches;
        }
        CHECK(mismatches == 0);
    }

    TEST_CASE("discrimination agrees with isolation on random and data polynomials")
    {
        std::vector<Polynomial> polys;
        for (int i = 0; i < 60; ++i)
            polys.push_back(test::random_poly(test::uniform(1, 12), 1L << 20));
        const DataSet d = load_data_set(CERTIPOLY_DATA_DIR);
        for (const Polynomial* f : {&d.p, &d.p2, &d.p4, &d.p5, &d.c})
            polys.push_back(*f);
        for (const auto& f : polys) {
            const RootCount rc = count_roots(f);
            CHECK(rc.distinct_real == static_cast<int>(isolate_real_roots(f).size()));
            CHECK(rc.distinct_real + 2 * rc.imaginary_pairs <= f.degree());
        }
    }
}
