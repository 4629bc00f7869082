#include "seqcert/certify/certificate.hpp"

#include "seqcert/version.hpp"

namespace seqcert::cert {

using nlohmann::json;

namespace {

json coefficients(const Polynomial& p)
{
    json out = json::array();
    for (const auto& c : p.coefficients()) out.push_back(exact::to_string(c));
    return out;
}

json header(const char* claim)
{
    return json{{"schema", kCertificateSchema},
                {"schema_version", kCertificateSchemaVersion},
                {"tool_version", kVersion},
                {"claim", claim}};
}

json options_json(const CertifyOptions& o)
{
    return json{{"k_min", o.shifts.k_min}, {"k_max", o.shifts.k_max}};
}

json proof_json(const PositivityProof& p)
{
    json out{{"method", to_string(p.method)}, {"verdict", p.verdict}, {"k", nullptr}, {"anchor", nullptr}, {"sturm", nullptr}};
    if (p.method == ProofMethod::shift) {
        out["k"] = p.k;
        out["anchor"] = p.anchor.str();
    }
    if (p.sturm) {
        out["sturm"] = json{{"chain_length", p.sturm->chain_length},
                            {"roots", p.sturm->roots},
                            {"sample", exact::to_string(p.sturm->sample)},
                            {"sample_sign", p.sturm->sample_sign}};
    }
    return out;
}

json optional_rational(const std::optional<Rational>& q)
{
    return q ? json(exact::to_string(*q)) : json(nullptr);
}

}  // namespace

json to_json(const Patchwork& p)
{
    json pieces = json::array();
    for (const auto& piece : p.pieces)
        pieces.push_back(json{{"n", piece.n}, {"num", coefficients(piece.f.num())}, {"den", coefficients(piece.f.den())}});
    json junctions = json::array();
    for (const auto& j : p.junctions)
        junctions.push_back(json{{"x", j.x},
                                 {"left", exact::to_string(j.left)},
                                 {"right", exact::to_string(j.right)},
                                 {"equal", j.equal()}});
    json out{{"family", to_string(p.spec.kind)},
             {"base", json{{"lo", p.spec.base_lo}, {"hi", p.spec.base_hi}, {"value", exact::to_string(p.spec.base_value)}}},
             {"upto", p.last()},
             {"continuous", p.continuous()},
             {"junctions", junctions},
             {"pieces", pieces}};
    if (p.spec.kind == PatchworkKind::legendre) out["t"] = exact::to_string(p.spec.t);
    return out;
}

json to_json(const MonotonicityCertificate& c)
{
    json out = header("increasing");
    out["mode"] = to_string(c.options.mode);
    out["shift_range"] = options_json(c.options);
    out["patchwork"] = to_json(c.patchwork);
    json intervals = json::array();
    for (const auto& r : c.intervals) {
        json rec{{"n", r.n},
                 {"numerator", coefficients(r.numerator)},
                 {"denominator_positive", r.denominator_positive},
                 {"proof", proof_json(r.proof)},
                 {"verdict", r.verdict}};
        intervals.push_back(std::move(rec));
    }
    out["intervals"] = intervals;
    out["verdict"] = c.verdict;
    return out;
}

json to_json(const BoundCertificate& c)
{
    json out = header("bounds");
    out["shift_range"] = options_json(c.options);
    out["lower"] = optional_rational(c.lower);
    out["upper"] = optional_rational(c.upper);
    out["from"] = exact::to_string(c.from_x);
    out["patchwork"] = to_json(c.patchwork);
    json intervals = json::array();
    for (const auto& r : c.intervals) {
        json rec{{"n", r.n},
                 {"lo", exact::to_string(r.lo)},
                 {"denominator_positive", r.denominator_positive},
                 {"lower", nullptr},
                 {"upper", nullptr},
                 {"verdict", r.verdict}};
        if (r.lower_proof) {
            rec["lower"] = proof_json(*r.lower_proof);
            rec["lower"]["numerator"] = coefficients(*r.lower_numerator);
        }
        if (r.upper_proof) {
            rec["upper"] = proof_json(*r.upper_proof);
            rec["upper"]["numerator"] = coefficients(*r.upper_numerator);
        }
        intervals.push_back(std::move(rec));
    }
    out["intervals"] = intervals;
    out["verdict"] = c.verdict;
    return out;
}

}  // namespace seqcert::cert
