#pragma once

// Certificate documents. Keys are emitted in sorted order and every
// coefficient is an exact integer (or p/q rational) string.

#include "seqcert/certify/monotonicity.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace seqcert::cert {

inline constexpr int kCertificateSchemaVersion = 1;
inline constexpr const char* kCertificateSchema = "seqcert-certificate";

nlohmann::json to_json(const Patchwork& p);
nlohmann::json to_json(const MonotonicityCertificate& c);
nlohmann::json to_json(const BoundCertificate& c);

struct Verification {
    bool ok = false;
    bool claimed_verdict = false;
    int records_checked = 0;
    std::vector<std::string> problems;
};

// Re-checks a serialized certificate without reusing the prover: it carries
// its own recurrence table and its own binomial Taylor shift, and trusts
// nothing in the document beyond the piece coefficients it re-derives.
// ok is true when the document is internally valid and every stored verdict
// is reproduced.
Verification verify_certificate(const nlohmann::json& doc);

}  // namespace seqcert::cert
