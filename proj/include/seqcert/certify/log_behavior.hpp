#pragma once

#include "seqcert/exact/polynomial.hpp"
#include "seqcert/sequences/sequence_table.hpp"

#include <optional>
#include <string>

namespace seqcert::cert {

enum class LogProperty { log_convex, log_concave, log_straight, neither };

std::string to_string(LogProperty p);

struct ConvexityReport {
    std::string name;
    LogProperty property = LogProperty::log_straight;
    // First index n whose comparison of a_n^2 with a_{n-1} a_{n+1} goes
    // against the direction seen before it.
    std::optional<int> first_violation;
    // For log-concave (and log-straight) sequences: smallest index of the
    // maximum, and whether the maximum repeats.
    std::optional<int> peak;
    bool plateau = false;
    int from = 0;
    int to = 0;
};

// Exact cross-product comparisons, no division. Throws std::domain_error on a
// non-positive term.
ConvexityReport check_log_behavior(const seq::SequenceTable& t);

// With a_k the coefficients of p and n = deg p, the sequence a_k / binom(n,k)
// is log-concave. False for negative coefficients.
bool newton_normalized_logconcavity(const exact::Polynomial& p);

}  // namespace seqcert::cert
