#pragma once

#include "seqcert/certify/patchwork.hpp"
#include "seqcert/certify/positivity.hpp"

#include <optional>
#include <vector>

namespace seqcert::cert {

struct CertifyOptions {
    ShiftRange shifts;
    PositivityMode mode = PositivityMode::weak;
    // Worker threads; 0 reads SEQCERT_THREADS and falls back to the
    // hardware concurrency.
    int threads = 0;
};

// Threads used for a given request (never less than 1).
int resolve_threads(int requested);

// Derivative numerator N = num' den - num den', divided by the positive
// integer gcd of its content and the content of den^2. This is the
// numerator of f' = N / den^2 in lowest integer terms without cancelling
// common polynomial factors, so its sign on the interval is the sign of f'.
Polynomial derivative_numerator(const RationalFunction& f);

// den > 0 on the closed interval [lo, hi].
bool denominator_positive(const RationalFunction& f, const Rational& lo, const Rational& hi);

struct IntervalRecord {
    int n = 0;
    Polynomial numerator;
    bool denominator_positive = false;
    PositivityProof proof;
    bool verdict = false;
};

struct MonotonicityCertificate {
    Patchwork patchwork;
    CertifyOptions options;
    std::vector<IntervalRecord> intervals;  // ascending n
    bool verdict = false;
};

// One record per piece: f' >= 0 (weak) or f' > 0 (strict) on (n, n+1).
MonotonicityCertificate certify_increasing(const Patchwork& p, const CertifyOptions& options = {});

struct BoundRecord {
    int n = 0;
    Rational lo;  // left end of the checked part of [n, n+1]
    bool denominator_positive = false;
    // num - lower den and upper den - num, primitive with positive content
    std::optional<Polynomial> lower_numerator;
    std::optional<Polynomial> upper_numerator;
    std::optional<PositivityProof> lower_proof;
    std::optional<PositivityProof> upper_proof;
    bool verdict = false;
};

struct BoundCertificate {
    Patchwork patchwork;
    std::optional<Rational> lower;
    std::optional<Rational> upper;
    Rational from_x;
    CertifyOptions options;
    std::vector<BoundRecord> intervals;
    bool verdict = false;
};

// lower <= f <= upper on [from_x, last + 1], each side optional.
// Throws std::invalid_argument when from_x is outside the patchwork or both
// bounds are missing.
BoundCertificate certify_bounds(const Patchwork& p, const std::optional<Rational>& lower,
                                const std::optional<Rational>& upper, const Rational& from_x,
                                const CertifyOptions& options = {});

}  // namespace seqcert::cert
