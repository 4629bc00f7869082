#include "doctest.h"

#include "seqcert/certify/log_behavior.hpp"
#include "seqcert/sequences/sequences.hpp"

using namespace seqcert::cert;
namespace seq = seqcert::seq;
using seqcert::exact::Integer;
using seqcert::exact::Polynomial;
using seqcert::exact::Rational;

namespace {

seq::SequenceTable table(std::vector<Rational> v, int start = 0)
{
    return {"t", std::move(v), start, seq::Provenance::closed_form};
}

}  // namespace

TEST_CASE("log behavior examples")
{
    const auto b = check_log_behavior(seq::binomial_row(10));
    CHECK(b.property == LogProperty::log_concave);
    CHECK(b.peak == 5);
    CHECK_FALSE(b.plateau);
    CHECK_FALSE(b.first_violation);

    const auto odd = check_log_behavior(seq::binomial_row(9));
    CHECK(odd.peak == 4);
    CHECK(odd.plateau);

    const auto g = check_log_behavior(table({1, 2, 4, 8}));
    CHECK(g.property == LogProperty::log_straight);

    const auto m = check_log_behavior(seq::motzkin_short(1000));
    CHECK(m.property == LogProperty::log_convex);
    CHECK_FALSE(m.first_violation);
    CHECK_FALSE(m.peak);

    const auto mixed = check_log_behavior(table({1, 2, 5, 6, 6}));
    CHECK(mixed.property == LogProperty::neither);
    CHECK(mixed.first_violation == 2);

    CHECK_THROWS_AS(check_log_behavior(table({1, 0, 1})), std::domain_error);
    CHECK(check_log_behavior(table({3})).property == LogProperty::log_straight);
}

TEST_CASE("log behavior matches brute-force reasoning on random sequences")
{
    // geometric sequences multiplied by a strictly log-convex factor stay log-convex
    for (int r = 1; r <= 5; ++r) {
        std::vector<Rational> v;
        Integer fact = 1;
        for (int n = 0; n < 20; ++n) {
            if (n > 0) fact *= n;
            v.emplace_back(fact * seqcert::exact::ipow(r, static_cast<unsigned>(n)));
        }
        CHECK(check_log_behavior(table(v)).property == LogProperty::log_convex);
    }
}

TEST_CASE("row families")
{
    const auto s1 = seq::stirling1(60);
    const auto s2 = seq::stirling2(60);
    for (int n = 1; n <= 60; ++n) {
        CHECK(check_log_behavior(seq::triangle_row(s1, n, "c")).property != LogProperty::log_convex);
        const auto r = check_log_behavior(seq::triangle_row(s2, n, "S"));
        CHECK((r.property == LogProperty::log_concave || r.property == LogProperty::log_straight));
        CHECK(check_log_behavior(seq::narayana_row(n)).peak.has_value());
    }
}

TEST_CASE("Newton normalized log-concavity")
{
    CHECK(newton_normalized_logconcavity(Polynomial{1, 4, 6, 4, 1}));
    CHECK(newton_normalized_logconcavity(Polynomial{0, 6, 11, 6, 1}));
    CHECK(newton_normalized_logconcavity(seq::bell_poly_coeffs(5)));
    for (int n = 0; n <= 30; ++n) CHECK(newton_normalized_logconcavity(seq::bell_poly_coeffs(n)));
    CHECK_FALSE(newton_normalized_logconcavity(Polynomial{1, 0, 1}));
    CHECK_FALSE(newton_normalized_logconcavity(Polynomial{1, -1}));
}

// Observed, not claimed: higher ranks look log-convex as far as we compute.
TEST_CASE("secondary structures of rank 2..4 up to 500")
{
    for (int l = 2; l <= 4; ++l) {
        const auto r = check_log_behavior(seq::sec_struct_general(l, 500));
        CHECK(r.property == LogProperty::log_convex);
        CHECK_FALSE(r.first_violation.has_value());
    }
}
