#include "seqcert/certify/positivity.hpp"

#include "seqcert/exact/sturm.hpp"

#include <vector>

namespace seqcert::cert {

namespace {

Integer floor_of(const Rational& q)
{
    const Integer num = exact::numerator_of(q);
    const Integer den = exact::denominator_of(q);
    Integer f = num / den;
    if (num < 0 && f * den != num) f -= 1;
    return f;
}

// Yun's algorithm: factors[i] is the product of the irreducible factors of
// multiplicity i + 1.
std::vector<Polynomial> square_free_factors(const Polynomial& p)
{
    std::vector<Polynomial> factors;
    const Polynomial dp = p.derivative();
    const Polynomial c = exact::gcd(p, dp);
    Polynomial w = exact::exact_quotient(p, c);
    Polynomial y = exact::exact_quotient(dp, c);
    Polynomial z = y - w.derivative();
    while (w.degree() > 0) {
        const Polynomial g = exact::gcd(w, z);
        factors.push_back(g);
        w = exact::exact_quotient(w, g);
        y = exact::exact_quotient(z, g);
        z = y - w.derivative();
    }
    return factors;
}

bool endpoints_nonnegative(const Polynomial& p, const Rational& lo, const Rational& hi)
{
    return p.sign_at(lo) >= 0 && p.sign_at(hi) >= 0;
}

}  // namespace

std::string to_string(ProofMethod m)
{
    switch (m) {
    case ProofMethod::zero: return "zero";
    case ProofMethod::shift: return "shift";
    case ProofMethod::sturm: return "sturm";
    case ProofMethod::none: return "none";
    }
    return "unknown";
}

std::string to_string(PositivityMode m)
{
    return m == PositivityMode::weak ? "weak" : "strict";
}

bool shift_certifies(const Polynomial& p, const Integer& anchor)
{
    if (p.is_zero()) return false;
    const Polynomial q = exact::poly_shift(p, anchor);
    for (const auto& c : q.coefficients())
        if (c < 0) return false;
    return true;
}

bool nonnegative_on_open(const Polynomial& p, const Rational& lo, const Rational& hi)
{
    if (p.is_zero()) return true;
    if (p.is_constant()) return p.leading() > 0;
    const auto factors = square_free_factors(p);
    for (std::size_t i = 0; i < factors.size(); i += 2)
        if (exact::count_roots_open(factors[i], lo, hi) > 0) return false;
    // No sign change inside; find a point where p does not vanish.
    Rational x = (lo + hi) / 2;
    Rational step = (hi - lo) / 4;
    while (p.sign_at(x) == 0) {
        x += step;
        step /= 2;
    }
    return p.sign_at(x) > 0;
}

PositivityProof prove_nonnegative(const Polynomial& p, const Rational& lo, const Rational& hi,
                                  const ShiftRange& range, PositivityMode mode, bool closed)
{
    PositivityProof proof;
    if (p.is_zero()) {
        proof.method = ProofMethod::zero;
        proof.verdict = mode == PositivityMode::weak;
        return proof;
    }
    const Integer base = floor_of(lo);
    for (int k = range.k_min; k <= range.k_max; ++k) {
        const Integer anchor = base - k;
        if (shift_certifies(p, anchor)) {
            proof.method = ProofMethod::shift;
            proof.k = k;
            proof.anchor = anchor;
            proof.verdict = true;
            return proof;
        }
    }
    const auto w = exact::sturm_analyze(p, lo, hi);
    proof.method = ProofMethod::sturm;
    proof.sturm = SturmSummary{w.chain_length, w.roots_in_interval, w.sample, w.sample_sign};
    bool ok = w.roots_in_interval == 0 && w.sample_sign > 0;
    if (!ok && mode == PositivityMode::weak) ok = nonnegative_on_open(p, lo, hi);
    if (ok && closed) ok = endpoints_nonnegative(p, lo, hi);
    proof.verdict = ok;
    return proof;
}

}  // namespace seqcert::cert
