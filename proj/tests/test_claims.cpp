#include "doctest.h"

#include "seqcert/certify/claims.hpp"
#include "seqcert/errors.hpp"
#include "seqcert/sequences/sequences.hpp"

using namespace seqcert::cert;
namespace seq = seqcert::seq;
using seqcert::exact::golden_ratio_squared;

TEST_CASE("interlacing")
{
    const auto x = seq::ratio_sequence(seq::motzkin_short(20));
    CHECK(interlace_term(InterlaceBound::motzkin, 3) == QuadraticSurd::rational(2));
    CHECK(interlace_term(InterlaceBound::motzkin, 4) == QuadraticSurd::rational(Rational(24, 11)));
    const auto m = interlace_check(x, InterlaceBound::motzkin, 3, 4);
    CHECK(m.holds());
    CHECK(m.records.size() == 2);
    CHECK(interlace_term(InterlaceBound::rank1, 6) == golden_ratio_squared() * Rational(12, 15));

    const auto y = seq::ratio_sequence(seq::sec_struct_rank1(40));
    CHECK(y.at(6) == Rational(17, 8));
    CHECK(interlace_check(y, InterlaceBound::rank1, 6, 6).holds());
    CHECK(interlace_check(y, InterlaceBound::rank1, 6).holds());
    // below the threshold the lower bound fails for Motzkin at n = 2
    CHECK_FALSE(interlace_check(x, InterlaceBound::motzkin, 1, 2).holds());
    CHECK_THROWS_AS(interlace_check(x, InterlaceBound::motzkin, 3, 25), std::out_of_range);
}

TEST_CASE("alpha roots")
{
    const Rational tol(1, 1000000000000);
    const auto a0 = alpha_root(0, tol);
    CHECK(a0.exact);
    CHECK(a0.lo == 3);
    CHECK(a0.hi == 3);
    const auto a1 = alpha_root(1, tol);
    CHECK(surd_in_interval(golden_ratio_squared(), a1));
    CHECK(a1.hi - a1.lo <= tol);
    const auto a2 = alpha_root(2, tol);
    CHECK(surd_in_interval(QuadraticSurd(1, 1, 2), a2));
    CHECK_FALSE(surd_in_interval(golden_ratio_squared(), a2));
    // dyadic endpoints
    CHECK(boost::multiprecision::msb(seqcert::exact::denominator_of(a2.lo)) <= 40);
    RootInterval prev = a0;
    for (int l = 1; l <= 6; ++l) {
        const auto a = alpha_root(l, tol);
        CHECK(a.hi < prev.lo);
        CHECK(a.lo > 2);
        prev = a;
    }
    CHECK_THROWS_AS(alpha_root(-1, tol), std::invalid_argument);
    CHECK_THROWS_AS(alpha_root(1, 0), std::invalid_argument);
}

TEST_CASE("limits")
{
    const auto m = limit_report(seq::ratio_sequence(seq::motzkin_short(2000)), QuadraticSurd::rational(3), Rational(1, 100));
    CHECK(m.within);
    CHECK(m.side < 0);
    CHECK(m.n == 2000);
    const auto d = limit_report(seq::ratio_sequence(seq::delannoy(2000)), QuadraticSurd(3, 2, 2), Rational(1, 100));
    CHECK(d.within);
    const auto tight = limit_report(seq::ratio_sequence(seq::motzkin_short(2000)), QuadraticSurd::rational(3), Rational(1, 100000));
    CHECK_FALSE(tight.within);
    seq::SequenceTable c{"c", {5, 5, 5}, 0, seq::Provenance::closed_form};
    const auto flat = limit_report(seq::ratio_sequence(c), QuadraticSurd::rational(1), 0);
    CHECK(flat.within);
    CHECK(flat.side == 0);
    CHECK(flat.gap_decimal == "0.000000000000000000000000000000");
}

TEST_CASE("Motzkin asymptotics")
{
    const auto t = seq::motzkin_short(2000);
    const auto r2000 = asymptotic_check_motzkin(t, 2000);
    const auto r1000 = asymptotic_check_motzkin(t, 1000);
    CHECK(r2000.positive);
    CHECK(r2000.deviation_bound <= Rational(1, 100));
    CHECK(r2000.deviation_bound < r1000.deviation_bound);
    const auto r100 = asymptotic_check_motzkin(t, 100);
    const auto r200 = asymptotic_check_motzkin(t, 200);
    const Rational ratio = r100.deviation_bound / r200.deviation_bound;
    CHECK(ratio > Rational(3, 2));
    CHECK(ratio < Rational(5, 2));
    CHECK(asymptotic_check_motzkin(t, 1).positive);
    CHECK_THROWS_AS(asymptotic_check_motzkin(t, 2000, 10), seqcert::PrecisionError);
    CHECK_THROWS_AS(asymptotic_check_motzkin(t, 2000, 20000), seqcert::PrecisionError);
    CHECK_THROWS_AS(asymptotic_check_motzkin(t, 3000), std::out_of_range);
}

TEST_CASE("generating functions")
{
    CHECK(series_identity_check(SeriesKind::motzkin_gf, 50).holds());
    CHECK(series_identity_check(SeriesKind::delannoy_gf, 51).holds());
    CHECK(series_identity_check(SeriesKind::motzkin_gf, 1).holds());
    CHECK(series_identity_check(SeriesKind::delannoy_gf, 1).holds());
    CHECK_THROWS_AS(series_identity_check(SeriesKind::motzkin_gf, 0), std::invalid_argument);
}
