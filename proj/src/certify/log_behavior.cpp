#include "seqcert/certify/log_behavior.hpp"

#include <stdexcept>

namespace seqcert::cert {

using exact::Rational;

std::string to_string(LogProperty p)
{
    switch (p) {
    case LogProperty::log_convex: return "log-convex";
    case LogProperty::log_concave: return "log-concave";
    case LogProperty::log_straight: return "log-straight";
    case LogProperty::neither: return "neither";
    }
    return "unknown";
}

ConvexityReport check_log_behavior(const seq::SequenceTable& t)
{
    ConvexityReport r;
    r.name = t.name;
    r.from = t.start_index;
    r.to = t.end_index();
    for (const auto& v : t.values)
        if (v <= 0) throw std::domain_error(t.name + ": log behavior needs positive terms");

    bool convex_seen = false, concave_seen = false;
    for (int n = t.start_index + 1; n < t.end_index(); ++n) {
        const Rational sq = t.at(n) * t.at(n);
        const Rational cross = t.at(n - 1) * t.at(n + 1);
        if (sq < cross) {
            if (concave_seen && !r.first_violation) r.first_violation = n;
            convex_seen = true;
        } else if (sq > cross) {
            if (convex_seen && !r.first_violation) r.first_violation = n;
            concave_seen = true;
        }
    }
    if (convex_seen && concave_seen)
        r.property = LogProperty::neither;
    else if (convex_seen)
        r.property = LogProperty::log_convex;
    else if (concave_seen)
        r.property = LogProperty::log_concave;

    if (r.property == LogProperty::log_concave || r.property == LogProperty::log_straight) {
        int best = t.start_index;
        for (int n = t.start_index + 1; n <= t.end_index(); ++n)
            if (t.at(n) > t.at(best)) best = n;
        r.peak = best;
        for (int n = best + 1; n <= t.end_index(); ++n)
            if (t.at(n) == t.at(best)) r.plateau = true;
    }
    return r;
}

bool newton_normalized_logconcavity(const exact::Polynomial& p)
{
    const auto& a = p.coefficients();
    for (const auto& c : a)
        if (c < 0) return false;
    const long n = p.degree();
    std::vector<Rational> b;
    for (long k = 0; k <= n; ++k) b.push_back(a[static_cast<std::size_t>(k)] / exact::binomial(n, k));
    for (std::size_t k = 1; k + 1 < b.size(); ++k)
        if (b[k] * b[k] < b[k - 1] * b[k + 1]) return false;
    return true;
}

}  // namespace seqcert::cert
