#include "doctest.h"

#include "seqcert/exact/power_series.hpp"
#include "support/generators.hpp"

using namespace seqcert::exact;

TEST_CASE("sqrt and inverse sqrt of 1")
{
    const PowerSeries one(Polynomial{1}, 10);
    CHECK(series_sqrt(one) == one);
    CHECK(series_inv_sqrt(one) == one);
}

TEST_CASE("sqrt(1 - 2x - 3x^2)")
{
    const PowerSeries s(Polynomial{1, -2, -3}, 40);
    const PowerSeries t = series_sqrt(s);
    const std::vector<Rational> head{1, -1, -2, -2, -4};
    for (std::size_t i = 0; i < head.size(); ++i) CHECK(t[i] == head[i]);
    CHECK(t * t == s);
}

TEST_CASE("inverse sqrt(1 - 6x + x^2)")
{
    const PowerSeries s(Polynomial{1, -6, 1}, 30);
    const PowerSeries u = series_inv_sqrt(s);
    CHECK(u[0] == 1);
    CHECK(u[1] == 3);
    CHECK(u[2] == 13);
    CHECK(u[3] == 63);
    CHECK(u * u * s == PowerSeries(Polynomial{1}, 30));
}

TEST_CASE("series roots square back on random inputs")
{
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> c(20);
        c[0] = 1;
        for (std::size_t i = 1; i < c.size(); ++i) c[i] = seqcert::testing::random_rational(9, 5);
        const PowerSeries s(c, 20);
        const PowerSeries t = series_sqrt(s);
        CHECK(t * t == s);
        const PowerSeries u = series_inv_sqrt(s);
        CHECK(u * u * s == PowerSeries(Polynomial{1}, 20));
        CHECK(series_inverse(s) * s == PowerSeries(Polynomial{1}, 20));
    }
}

TEST_CASE("constant term must be 1")
{
    CHECK_THROWS_AS(series_sqrt(PowerSeries(Polynomial{4, 1}, 5)), std::domain_error);
    CHECK_THROWS_AS(series_inv_sqrt(PowerSeries(Polynomial{0, 1}, 5)), std::domain_error);
}
