#pragma once

// Exact nonnegativity proofs for polynomials on unit intervals.
//
// Shift test: if every coefficient of p(x + a) is >= 0 and one is > 0,
// then p > 0 on (a, oo). The anchor is a = floor(lo) - k for a shift
// offset k, so the proof covers the interval [lo, hi].

#include "seqcert/exact/polynomial.hpp"

#include <optional>
#include <string>

namespace seqcert::cert {

using exact::Integer;
using exact::Polynomial;
using exact::Rational;

enum class PositivityMode {
    weak,    // p >= 0 (isolated zeros and the zero polynomial allowed)
    strict,  // p > 0 on the open interval
};

enum class ProofMethod { zero, shift, sturm, none };

std::string to_string(ProofMethod m);
std::string to_string(PositivityMode m);

struct ShiftRange {
    int k_min = 0;
    int k_max = 8;
};

struct SturmSummary {
    int chain_length = 0;
    int roots = 0;  // distinct roots in the open interval
    Rational sample;
    int sample_sign = 0;
};

struct PositivityProof {
    ProofMethod method = ProofMethod::none;
    int k = 0;       // shift offset, meaningful for ProofMethod::shift
    Integer anchor;  // floor(lo) - k
    std::optional<SturmSummary> sturm;
    bool verdict = false;
};

// All coefficients of p(x + anchor) are >= 0 and at least one is > 0.
bool shift_certifies(const Polynomial& p, const Integer& anchor);

// p >= 0 on (lo, hi): no root of odd multiplicity inside and a positive
// value somewhere. Decided exactly through a square-free decomposition.
bool nonnegative_on_open(const Polynomial& p, const Rational& lo, const Rational& hi);

// Proves p > 0 (strict) or p >= 0 (weak) on (lo, hi); with `closed` the
// endpoints must also satisfy p >= 0. Tries the zero polynomial, then shift
// offsets k_min..k_max in order, then Sturm root counting.
PositivityProof prove_nonnegative(const Polynomial& p, const Rational& lo, const Rational& hi,
                                  const ShiftRange& range, PositivityMode mode, bool closed = false);

}  // namespace seqcert::cert
