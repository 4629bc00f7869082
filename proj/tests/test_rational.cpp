#include "doctest.h"

#include "seqcert/errors.hpp"
#include "seqcert/exact/rational.hpp"

using namespace seqcert::exact;

TEST_CASE("parse and print rationals")
{
    CHECK(parse_rational("7/2") == Rational(7, 2));
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK(parse_rational("12") == 12);
    CHECK(parse_rational("1/1000000000000") == Rational(1, Integer("1000000000000")));
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");

    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e5"), std::invalid_argument);
}

TEST_CASE("decimal rendering rounds half to even")
{
    CHECK(to_decimal(Rational(1, 8), 2) == "0.12");   // 0.125 -> 0.12
    CHECK(to_decimal(Rational(3, 8), 2) == "0.38");   // 0.375 -> 0.38
    CHECK(to_decimal(Rational(5, 2), 0) == "2");
    CHECK(to_decimal(Rational(7, 2), 0) == "4");
    CHECK(to_decimal(Rational(-1, 3), 4) == "-0.3333");
    CHECK(to_decimal(Rational(2, 3), 4) == "0.6667");
    CHECK(to_decimal(Rational(1, 1000), 2) == "0.00");
    CHECK(to_decimal(Rational(267, 100), 3) == "2.670");
}

TEST_CASE("integer helpers")
{
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(60, 30) == Integer("118264581564861424"));
    CHECK(to_integer(Rational(12, 3)) == 4);
    CHECK_THROWS_AS(to_integer(Rational(1, 3)), seqcert::ConsistencyError);
    CHECK(rpow(Rational(2, 3), 3) == Rational(8, 27));
}
