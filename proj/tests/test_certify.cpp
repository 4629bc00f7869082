#include "doctest.h"

#include "seqcert/certify/certificate.hpp"
#include "seqcert/certify/log_behavior.hpp"
#include "seqcert/exact/sturm.hpp"
#include "seqcert/sequences/sequences.hpp"
#include "support/generators.hpp"

using namespace seqcert::cert;
namespace seq = seqcert::seq;
using nlohmann::json;

namespace {

const Patchwork& rank1_30()
{
    static const Patchwork pw = build_patchwork(rank1_spec(), 30, ContinuityPolicy::report);
    return pw;
}

}  // namespace

TEST_CASE("positivity primitives")
{
    // (x - 3)^2 (x + 1): zero at 3, nonnegative on (2, 4)
    const Polynomial p = Polynomial{-3, 1} * Polynomial{-3, 1} * Polynomial{1, 1};
    CHECK(nonnegative_on_open(p, 2, 4));
    CHECK_FALSE(nonnegative_on_open(Polynomial{-3, 1}, 2, 4));
    CHECK_FALSE(nonnegative_on_open(-p, 2, 4));
    // a triple root changes sign
    CHECK_FALSE(nonnegative_on_open(Polynomial{-3, 1} * Polynomial{-3, 1} * Polynomial{-3, 1}, 2, 4));
    CHECK(shift_certifies(Polynomial{-4, 1}, 4));
    CHECK_FALSE(shift_certifies(Polynomial{-4, 1}, 3));
    CHECK_FALSE(shift_certifies(Polynomial{}, 3));

    const auto weak = prove_nonnegative(p, 2, 4, {0, 0}, PositivityMode::weak);
    CHECK(weak.method == ProofMethod::sturm);
    CHECK(weak.verdict);
    CHECK_FALSE(prove_nonnegative(p, 2, 4, {0, 0}, PositivityMode::strict).verdict);
    const auto zero = prove_nonnegative(Polynomial{}, 2, 3, {}, PositivityMode::weak);
    CHECK(zero.method == ProofMethod::zero);
    CHECK(zero.verdict);
    CHECK_FALSE(prove_nonnegative(Polynomial{}, 2, 3, {}, PositivityMode::strict).verdict);
    const auto s = prove_nonnegative(Polynomial{-9, 1}, 10, 11, {}, PositivityMode::strict);
    CHECK(s.method == ProofMethod::shift);
    CHECK(s.k == 0);
    CHECK(s.anchor == 10);
}

TEST_CASE("Motzkin monotonicity")
{
    const auto pw = build_patchwork(motzkin_spec(), 30);
    const auto cert = certify_increasing(pw);
    CHECK(cert.verdict);
    const auto& r3 = cert.intervals[1];
    CHECK(r3.n == 3);
    CHECK(r3.numerator == Polynomial{15});
    CHECK(r3.proof.method == ProofMethod::shift);
    CHECK(r3.proof.k == 0);
    CHECK(cert.intervals[0].proof.method == ProofMethod::zero);
    for (const auto& r : cert.intervals) CHECK(r.denominator_positive);
    // f' numerator times a positive constant is the quotient-rule numerator
    CHECK(derivative_numerator(RationalFunction(Polynomial{-1, 7}, Polynomial{4, 2})) == Polynomial{15});
}

TEST_CASE("rank-1 monotonicity with offset 2")
{
    CertifyOptions o;
    o.shifts = {2, 2};
    const auto cert = certify_increasing(rank1_30(), o);
    CHECK(cert.verdict);
    for (const auto& r : cert.intervals) {
        if (r.n < 5) {
            CHECK(r.proof.method == ProofMethod::zero);
        } else {
            CHECK(r.proof.method == ProofMethod::shift);
            CHECK(r.proof.anchor == r.n - 2);
        }
    }
}

TEST_CASE("the literal reading, anchor 2 for every interval, fails from n = 7")
{
    const auto cert = certify_increasing(rank1_30());
    for (const auto& r : cert.intervals)
        if (r.n >= 5) CHECK(shift_certifies(r.numerator, 2) == (r.n <= 6));
}

TEST_CASE("strict mode and the constant patchwork")
{
    const auto flat = build_patchwork(legendre_spec(1), 10);
    CHECK(certify_increasing(flat).verdict);
    CertifyOptions strict;
    strict.mode = PositivityMode::strict;
    const auto c = certify_increasing(flat, strict);
    CHECK_FALSE(c.verdict);
    CHECK(c.intervals[0].proof.method == ProofMethod::zero);
}

TEST_CASE("shift and Sturm verdicts agree")
{
    const auto cert = certify_increasing(build_patchwork(motzkin_spec(), 25));
    const auto r1 = certify_increasing(rank1_30());
    for (const auto* c : {&cert, &r1})
        for (const auto& r : c->intervals)
            if (r.proof.method == ProofMethod::shift)
                CHECK(seqcert::exact::sturm_positive_on_interval(r.numerator, r.n, r.n + 1));
    // random polynomials positive at a shifted anchor are Sturm-positive past it
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = seqcert::testing::random_polynomial(6, 9);
        const int n = static_cast<int>(seqcert::testing::random_int(-3, 6));
        const auto proof = prove_nonnegative(p, n, n + 1, {0, 3}, PositivityMode::strict);
        if (proof.method == ProofMethod::shift)
            CHECK(seqcert::exact::sturm_positive_on_interval(p, n, n + 1));
        if (proof.method == ProofMethod::sturm)
            CHECK(proof.verdict == seqcert::exact::sturm_positive_on_interval(p, n, n + 1));
    }
}

TEST_CASE("monotone patchworks give log-convex sequences")
{
    CHECK(certify_increasing(build_patchwork(motzkin_spec(), 40)).verdict);
    CHECK(check_log_behavior(seq::motzkin_short(41)).property == LogProperty::log_convex);
    for (const Rational t : {Rational(2), Rational(7, 2)}) {
        CHECK(certify_increasing(build_patchwork(legendre_spec(t), 40)).verdict);
        CHECK(check_log_behavior(seq::legendre_values(t, 41)).property == LogProperty::log_convex);
    }
    CHECK(certify_increasing(rank1_30()).verdict);
    const auto s = seq::sec_struct_rank1(31);
    CHECK(check_log_behavior(s).property == LogProperty::log_convex);
}

TEST_CASE("bounds")
{
    const auto motz = build_patchwork(motzkin_spec(), 30);
    CHECK(certify_bounds(motz, Rational(2), std::nullopt, 2).verdict);
    const auto b = certify_bounds(rank1_30(), Rational(2), Rational(3), 2);
    CHECK(b.verdict);
    CHECK(b.intervals.size() == rank1_30().pieces.size());
    // a false bound is a result, not an error
    CHECK_FALSE(certify_bounds(motz, Rational(5, 2), std::nullopt, 2).verdict);
    const auto mid = certify_bounds(motz, std::nullopt, Rational(3), Rational(7, 2));
    CHECK(mid.intervals.front().n == 3);
    CHECK(mid.intervals.front().lo == Rational(7, 2));
    CHECK_THROWS_AS(certify_bounds(motz, std::nullopt, std::nullopt, 2), std::invalid_argument);
    CHECK_THROWS_AS(certify_bounds(motz, Rational(2), std::nullopt, 40), std::invalid_argument);
}

TEST_CASE("certificates round-trip through the verifier")
{
    const auto mono = to_json(certify_increasing(rank1_30()));
    const auto v = verify_certificate(json::parse(mono.dump()));
    CHECK(v.ok);
    CHECK(v.claimed_verdict);
    CHECK(v.records_checked == static_cast<int>(rank1_30().pieces.size()));
    CHECK(mono["patchwork"]["continuous"] == false);
    CHECK(mono["intervals"][3]["proof"]["method"] == "shift");

    const auto bounds = to_json(certify_bounds(rank1_30(), Rational(2), Rational(3), 2));
    CHECK(verify_certificate(bounds).ok);

    const auto legendre = to_json(certify_increasing(build_patchwork(legendre_spec(Rational(7, 2)), 12)));
    CHECK(verify_certificate(legendre).ok);

    // an honest failing certificate verifies, with a false verdict
    const auto failing = to_json(certify_bounds(build_patchwork(motzkin_spec(), 10), Rational(5, 2), std::nullopt, 2));
    const auto vf = verify_certificate(failing);
    CHECK(vf.ok);
    CHECK_FALSE(vf.claimed_verdict);
}

TEST_CASE("Sturm records are re-checked")
{
    // force Sturm on every interval with an empty shift range
    CertifyOptions o;
    o.shifts = {1, 0};
    const auto cert = certify_increasing(build_patchwork(motzkin_spec(), 12), o);
    CHECK(cert.verdict);
    auto doc = to_json(cert);
    CHECK(doc["intervals"][2]["proof"]["method"] == "sturm");
    CHECK(verify_certificate(doc).ok);
    doc["intervals"][2]["proof"]["sturm"]["roots"] = 1;
    CHECK_FALSE(verify_certificate(doc).ok);
}

TEST_CASE("mutating any single coefficient breaks verification")
{
    const auto original = to_json(certify_increasing(build_patchwork(rank1_spec(), 12, ContinuityPolicy::report)));
    REQUIRE(verify_certificate(original).ok);
    int mutations = 0;
    auto mutate_all = [&](const json::json_pointer& where) {
        const std::size_t count = original.at(where).size();
        for (std::size_t i = 0; i < count; ++i) {
            json doc = original;
            auto& c = doc.at(where)[i];
            const auto v = seqcert::exact::parse_rational(c.get<std::string>());
            c = seqcert::exact::to_string(v + 1);
            ++mutations;
            CHECK_MESSAGE(!verify_certificate(doc).ok, where.to_string() << "/" << i);
        }
    };
    for (std::size_t p = 0; p < original["patchwork"]["pieces"].size(); ++p) {
        mutate_all(json::json_pointer("/patchwork/pieces/" + std::to_string(p) + "/num"));
        mutate_all(json::json_pointer("/patchwork/pieces/" + std::to_string(p) + "/den"));
    }
    for (std::size_t r = 0; r < original["intervals"].size(); ++r)
        mutate_all(json::json_pointer("/intervals/" + std::to_string(r) + "/numerator"));
    CHECK(mutations > 100);

    json flipped = original;
    flipped["verdict"] = false;
    CHECK_FALSE(verify_certificate(flipped).ok);
    json wrong_k = original;
    wrong_k["intervals"][5]["proof"]["anchor"] = "0";
    CHECK_FALSE(verify_certificate(wrong_k).ok);
    json junk = original;
    junk["patchwork"]["pieces"][4]["num"][0] = "1.5";
    CHECK_FALSE(verify_certificate(junk).ok);
    CHECK_FALSE(verify_certificate(json::object()).ok);
}

TEST_CASE("parallel and serial certificates are identical")
{
    CertifyOptions serial, parallel;
    serial.threads = 1;
    parallel.threads = 4;
    const auto pw = build_patchwork(motzkin_spec(), 25);
    CHECK(to_json(certify_increasing(pw, serial)).dump() == to_json(certify_increasing(pw, parallel)).dump());
}
