#include "seqcert/cli/run.hpp"

#include "seqcert/certify/certificate.hpp"
#include "seqcert/certify/claims.hpp"
#include "seqcert/certify/log_behavior.hpp"
#include "seqcert/errors.hpp"
#include "seqcert/oracles/oracles.hpp"
#include "seqcert/sequences/sequences.hpp"
#include "seqcert/version.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace seqcert::cli {

using exact::Integer;
using exact::QuadraticSurd;
using exact::Rational;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A command result: a JSON document, a CSV rendering of it, and a status.
struct Output {
    json doc;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    int status = kOk;
    Format natural = Format::json;
};

std::string str(const Rational& q) { return exact::to_string(q); }
std::string str(const Integer& z) { return z.str(); }
std::string str(int v) { return std::to_string(v); }
std::string str(bool b) { return b ? "true" : "false"; }

json versioned(json doc)
{
    doc["tool_version"] = kVersion;
    return doc;
}

int n_or(const RunConfig& c, int fallback)
{
    const int n = c.n.value_or(fallback);
    if (n < 0) throw UsageError("--n must be nonnegative");
    return n;
}

// ---------------------------------------------------------------- seq

seq::SequenceTable build_table(const RunConfig& c, const std::string& name, int default_n = 50)
{
    const int n = n_or(c, default_n);
    static const std::map<std::string, std::function<seq::SequenceTable(const RunConfig&, int)>> builders{
        {"motzkin", [](const RunConfig&, int n) { return seq::motzkin_short(n); }},
        {"motzkin-long", [](const RunConfig&, int n) { return seq::motzkin_long(n); }},
        {"motzkin-catalan", [](const RunConfig&, int n) { return seq::motzkin_via_catalan(n); }},
        {"catalan", [](const RunConfig&, int n) { return seq::catalan(n); }},
        {"catalan-motzkin", [](const RunConfig&, int n) { return seq::catalan_via_motzkin(n); }},
        {"rank1", [](const RunConfig&, int n) { return seq::sec_struct_rank1(n); }},
        {"secondary",
         [](const RunConfig& c, int n) {
             const int l = c.rank.value_or(1);
             if (l < 0) throw UsageError("secondary tables need --rank >= 0");
             return seq::sec_struct_general(l, n);
         }},
        {"legendre",
         [](const RunConfig& c, int n) {
             if (!c.t) throw UsageError("legendre needs --t p/q");
             return seq::legendre_values(*c.t, n);
         }},
        {"delannoy", [](const RunConfig&, int n) { return seq::delannoy(n); }},
        {"schroeder", [](const RunConfig&, int n) { return seq::schroeder(n); }},
        {"binomial", [](const RunConfig&, int n) { return seq::binomial_row(n); }},
        {"narayana", [](const RunConfig&, int n) { return seq::narayana_row(n); }},
        {"stirling1", [](const RunConfig&, int n) { return seq::triangle_row(seq::stirling1(n), n, "stirling1(" + std::to_string(n) + ")"); }},
        {"stirling2", [](const RunConfig&, int n) { return seq::triangle_row(seq::stirling2(n), n, "stirling2(" + std::to_string(n) + ")"); }},
        {"bell",
         [](const RunConfig&, int n) {
             const auto p = seq::bell_poly_coeffs(n);
             return seq::SequenceTable{"bell(" + std::to_string(n) + ")", p.coefficients(), 0,
                                       seq::Provenance::short_recursion};
         }},
    };
    const auto it = builders.find(name);
    if (it == builders.end()) throw UsageError("unknown sequence '" + name + "'");
    return it->second(c, n);
}

Output cmd_seq(const RunConfig& c)
{
    const auto t = build_table(c, c.selector);
    Output o;
    o.natural = Format::csv;
    json values = json::array();
    if (c.ratios) {
        const auto r = seq::ratio_sequence(t);
        o.header = {"n", "ratio"};
        for (int n = r.start_index; n <= r.end_index(); ++n) {
            o.rows.push_back({str(n), str(r.at(n))});
            values.push_back(str(r.at(n)));
        }
        o.doc = versioned({{"name", t.name}, {"kind", "ratios"}, {"start_index", r.start_index}, {"values", values}});
        return o;
    }
    o.header = {"n", "value"};
    for (int n = t.start_index; n <= t.end_index(); ++n) {
        o.rows.push_back({str(n), str(t.at(n))});
        values.push_back(str(t.at(n)));
    }
    o.doc = versioned({{"name", t.name},
                       {"kind", "values"},
                       {"provenance", std::string(seq::to_string(t.provenance))},
                       {"start_index", t.start_index},
                       {"values", values}});
    return o;
}

// ---------------------------------------------------------------- oracle

Output cmd_oracle(const RunConfig& c)
{
    const oracle::Budget budget;
    const std::string& f = c.selector;
    Output o;
    o.natural = Format::csv;
    json rows = json::array();
    std::optional<std::string> mismatch;
    auto record = [&](int n, std::optional<int> k, const Integer& got, const Integer& want) {
        const bool ok = got == want;
        std::vector<std::string> row{str(n)};
        json r{{"n", n}, {"oracle", str(got)}, {"recursion", str(want)}, {"match", ok}};
        if (k) {
            row.push_back(str(*k));
            r["k"] = *k;
        }
        row.insert(row.end(), {str(got), str(want), str(ok)});
        o.rows.push_back(row);
        rows.push_back(r);
        if (!ok && !mismatch)
            mismatch = f + " oracle mismatch at n = " + std::to_string(n) + (k ? ", k = " + std::to_string(*k) : "");
    };

    if (f == "dyck") {
        const int n_max = n_or(c, budget.dyck);
        const auto cat = seq::catalan(n_max);
        o.header = {"n", "k", "oracle", "recursion", "match"};
        for (int n = 0; n <= n_max; ++n) {
            const auto d = oracle::enum_dyck(n, budget);
            for (int k = n == 0 ? 0 : 1; k <= n; ++k) {
                const auto it = d.peaks.find(k);
                record(n, k, it == d.peaks.end() ? Integer(0) : it->second, seq::narayana(n, k));
            }
            if (d.count != cat.integer_at(n) && !mismatch) mismatch = "dyck count mismatch at n = " + std::to_string(n);
        }
    } else if (f == "permutations" || f == "partitions") {
        const int n_max = n_or(c, budget.set_family);
        const auto tri = f == "permutations" ? seq::stirling1(n_max) : seq::stirling2(n_max);
        o.header = {"n", "k", "oracle", "recursion", "match"};
        for (int n = 0; n <= n_max; ++n) {
            const auto row = f == "permutations" ? oracle::enum_permutations_by_cycles(n, budget)
                                                 : oracle::enum_partitions_by_blocks(n, budget);
            for (int k = 0; k <= n; ++k)
                record(n, k, row[static_cast<std::size_t>(k)], tri[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
        }
    } else {
        o.header = {"n", "oracle", "recursion", "match"};
        std::function<Integer(int)> enumerate;
        seq::SequenceTable ref;
        int offset = 0;
        if (f == "motzkin") {
            const int n_max = n_or(c, budget.motzkin);
            enumerate = [&](int n) { return oracle::enum_motzkin(n, budget); };
            ref = seq::motzkin_short(n_max);
        } else if (f == "secondary") {
            const int n_max = n_or(c, budget.secondary);
            const int l = c.rank.value_or(1);
            if (l < -1) throw UsageError("--rank must be >= -1");
            enumerate = [&, l](int n) { return oracle::enum_secondary(l, n, budget); };
            if (l == -1) {
                ref = seq::catalan(n_max + 1);  // loops allowed: C_{n+1}
                offset = 1;
            } else {
                ref = l == 1 ? seq::sec_struct_rank1(n_max) : seq::sec_struct_general(l, n_max);
            }
        } else if (f == "delannoy") {
            const int n_max = n_or(c, budget.lattice);
            enumerate = [&](int n) { return oracle::enum_delannoy(n, budget); };
            ref = seq::delannoy(n_max);
        } else if (f == "schroeder") {
            const int n_max = n_or(c, budget.lattice);
            enumerate = [&](int n) { return oracle::enum_schroeder(n, budget); };
            ref = seq::schroeder(n_max);
        } else {
            throw UsageError("unknown oracle family '" + f + "'");
        }
        for (int n = 0; n + offset <= ref.end_index(); ++n) record(n, std::nullopt, enumerate(n), ref.integer_at(n + offset));
    }
    o.doc = versioned({{"family", f}, {"rows", rows}, {"match", !mismatch}});
    if (mismatch) throw ConsistencyError(*mismatch);
    return o;
}

// ---------------------------------------------------------------- check

Output report_output(json doc, bool holds)
{
    Output o;
    o.header = {"key", "value"};
    for (const auto& [k, v] : doc.items()) o.rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
    o.doc = versioned(std::move(doc));
    o.status = holds ? kOk : kPropertyFailed;
    return o;
}

json convexity_json(const cert::ConvexityReport& r)
{
    return json{{"name", r.name},
                {"property", cert::to_string(r.property)},
                {"violation", r.first_violation ? json(*r.first_violation) : json(nullptr)},
                {"peak", r.peak ? json(*r.peak) : json(nullptr)},
                {"plateau", r.plateau},
                {"from", r.from},
                {"to", r.to}};
}

QuadraticSurd limit_target(const std::string& name)
{
    if (name == "motzkin") return QuadraticSurd::rational(3);
    if (name == "delannoy") return QuadraticSurd(3, 2, 2);
    if (name == "rank1") return exact::golden_ratio_squared();
    throw UsageError("no known limit for '" + name + "'");
}

json surd_json(const QuadraticSurd& s)
{
    return json{{"a", str(s.a())}, {"b", str(s.b())}, {"d", str(s.d())}};
}

Output cmd_check(const RunConfig& c)
{
    const std::string& p = c.selector;
    const std::string& target = c.target;
    if (p == "log") {
        const auto r = cert::check_log_behavior(build_table(c, target, 1000));
        json doc = convexity_json(r);
        bool ok = true;
        if (!c.expect.empty()) {
            ok = cert::to_string(r.property) == c.expect;
            doc["expected"] = c.expect;
        }
        return report_output(doc, ok);
    }
    if (p == "interlace") {
        const auto bound = target == "motzkin" ? cert::InterlaceBound::motzkin
                         : target == "rank1"   ? cert::InterlaceBound::rank1
                                               : throw UsageError("interlace needs motzkin or rank1");
        const int from = bound == cert::InterlaceBound::motzkin ? 3 : 6;
        const int n = n_or(c, 1000);
        const auto base = bound == cert::InterlaceBound::motzkin ? seq::motzkin_short(n) : seq::sec_struct_rank1(n);
        const auto r = cert::interlace_check(seq::ratio_sequence(base), bound, from);
        return report_output({{"sequence", target},
                              {"from", from},
                              {"to", n},
                              {"holds", r.holds()},
                              {"first_failure", r.first_failure ? json(*r.first_failure) : json(nullptr)}},
                             r.holds());
    }
    if (p == "limit") {
        const int n = n_or(c, 2000);
        const Rational tol = c.tol.value_or(Rational(1, 100));
        const auto r = cert::limit_report(seq::ratio_sequence(build_table(c, target, n)), limit_target(target), tol);
        return report_output({{"sequence", target},
                              {"n", r.n},
                              {"x_n", str(r.x_n)},
                              {"target", surd_json(r.target)},
                              {"tol", str(tol)},
                              {"within", r.within},
                              {"side", r.side},
                              {"gap", r.gap_decimal}},
                             r.within);
    }
    if (p == "series") {
        const auto kind = target == "motzkin"    ? cert::SeriesKind::motzkin_gf
                        : target == "delannoy" ? cert::SeriesKind::delannoy_gf
                                               : throw UsageError("series needs motzkin or delannoy");
        const int order = n_or(c, 50);
        if (order < 1) throw UsageError("series order must be >= 1");
        const auto r = cert::series_identity_check(kind, order);
        return report_output({{"series", target},
                              {"order", order},
                              {"holds", r.holds()},
                              {"first_mismatch", r.first_mismatch ? json(*r.first_mismatch) : json(nullptr)}},
                             r.holds());
    }
    if (p == "asymptotic") {
        if (target != "motzkin") throw UsageError("asymptotic check is available for motzkin only");
        const int n = n_or(c, 2000);
        if (n < 1) throw UsageError("asymptotic check needs n >= 1");
        const Rational tol = c.tol.value_or(Rational(1, 100));
        const auto r = cert::asymptotic_check_motzkin(seq::motzkin_short(n), n, static_cast<unsigned>(c.digits));
        const bool ok = r.positive && r.deviation_bound <= tol;
        return report_output({{"n", n},
                              {"precision_digits", r.digits},
                              {"ratio", r.ratio},
                              {"deviation", r.deviation},
                              {"deviation_bound", str(r.deviation_bound)},
                              {"tol", str(tol)},
                              {"within", ok}},
                             ok);
    }
    if (p == "bounds") {
        const int n = n_or(c, 2000);
        std::optional<int> failure;
        json doc{{"sequence", target}, {"to", n}};
        if (target == "motzkin") {
            const auto m = seq::motzkin_short(n);
            const auto x = seq::ratio_sequence(m);
            for (int i = 2; i <= n && !failure; ++i)
                if (x.at(i) < 2 || x.at(i) > Rational(7, 2)) failure = i;
            for (int i = 1; i <= n && !failure; ++i)
                if (m.at(i) > 3 * m.at(i - 1)) failure = i;
            doc["claims"] = {"2 <= x_n <= 7/2 (n >= 2)", "M_n <= 3 M_{n-1} (n >= 1)"};
        } else if (target == "rank1") {
            const auto x = seq::ratio_sequence(seq::sec_struct_rank1(n));
            for (int i = 3; i <= n && !failure; ++i)
                if (x.at(i) < 2 || x.at(i) > 3) failure = i;
            for (int i = 53; i <= n && !failure; ++i)
                if (x.at(i) < Rational(5, 2) || x.at(i) > Rational(267, 100)) failure = i;
            doc["claims"] = {"2 <= x_n <= 3 (n >= 3)", "5/2 <= x_n <= 267/100 (n >= 53)"};
        } else {
            throw UsageError("bounds needs motzkin or rank1");
        }
        doc["holds"] = !failure;
        doc["first_failure"] = failure ? json(*failure) : json(nullptr);
        return report_output(doc, !failure);
    }
    if (p == "pipelines") {
        const int n = n_or(c, 300);
        const auto a = seq::motzkin_short(n);
        for (const auto& other : {seq::motzkin_long(n), seq::motzkin_via_catalan(n)})
            if (other.values != a.values) throw ConsistencyError("motzkin pipelines disagree (" + std::string(seq::to_string(other.provenance)) + ")");
        if (seq::catalan_via_motzkin(n).values != seq::catalan(n).values) throw ConsistencyError("catalan pipelines disagree");
        return report_output({{"sequence", "motzkin"}, {"to", n}, {"holds", true}}, true);
    }
    if (p == "determinant") {
        const int n_max = n_or(c, 60);
        std::optional<std::pair<int, int>> failure;
        for (int n = 2; n <= n_max && !failure; ++n)
            for (int k = 1; k < n && !failure; ++k)
                if (exact::binomial(n, k) * exact::binomial(n, k) - exact::binomial(n, k - 1) * exact::binomial(n, k + 1)
                    != seq::narayana(n + 1, k + 1))
                    failure = std::make_pair(n, k);
        return report_output({{"to", n_max},
                              {"holds", !failure},
                              {"first_failure", failure ? json{failure->first, failure->second} : json(nullptr)}},
                             !failure);
    }
    if (p == "newton") {
        if (target != "bell") throw UsageError("newton check is available for bell");
        const int n = n_or(c, 10);
        const bool ok = cert::newton_normalized_logconcavity(seq::bell_poly_coeffs(n));
        return report_output({{"polynomial", "bell(" + std::to_string(n) + ")"}, {"holds", ok}}, ok);
    }
    throw UsageError("unknown check '" + p + "'");
}

// ---------------------------------------------------------------- certify

cert::PatchworkKind patchwork_kind(std::string name)
{
    const std::string suffix = "-patchwork";
    if (name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
        name.resize(name.size() - suffix.size());
    const auto k = cert::parse_patchwork_kind(name);
    if (!k) throw UsageError("unknown patchwork '" + name + "'");
    return *k;
}

cert::CertifyOptions certify_options(const RunConfig& c)
{
    if (c.k_min < 0 || c.k_max < c.k_min) throw UsageError("need 0 <= --kmin <= --kmax");
    cert::CertifyOptions o;
    o.shifts = {c.k_min, c.k_max};
    o.mode = c.strict ? cert::PositivityMode::strict : cert::PositivityMode::weak;
    o.threads = c.threads;
    return o;
}

cert::Patchwork patchwork_for(const RunConfig& c)
{
    const auto kind = patchwork_kind(c.selector);
    if (kind == cert::PatchworkKind::legendre && !c.t) throw UsageError("legendre patchwork needs --t p/q");
    const auto spec = cert::make_spec(kind, c.t.value_or(0));
    const int upto = c.to.value_or(60);
    if (upto < spec.base_hi - 1) throw UsageError("--to is before the end of the base interval");
    return cert::build_patchwork(spec, upto, cert::default_policy(kind));
}

std::vector<std::string> proof_cells(const cert::PositivityProof& p)
{
    return {cert::to_string(p.method), p.method == cert::ProofMethod::shift ? str(p.k) : "",
            p.method == cert::ProofMethod::shift ? str(p.anchor) : "", str(p.verdict)};
}

Output cmd_certify(const RunConfig& c)
{
    const auto pw = patchwork_for(c);
    const auto options = certify_options(c);
    Output o;
    if (c.lower || c.upper) {
        const Rational from = c.from.value_or(Rational(pw.first()));
        if (from < pw.first() || from >= pw.last() + 1) throw UsageError("--from outside the patchwork");
        const auto b = cert::certify_bounds(pw, c.lower, c.upper, from, options);
        o.doc = cert::to_json(b);
        o.header = {"n", "lo", "side", "method", "k", "anchor", "verdict"};
        for (const auto& r : b.intervals) {
            for (const auto& [side, proof] : {std::pair{"lower", &r.lower_proof}, std::pair{"upper", &r.upper_proof}}) {
                if (!*proof) continue;
                std::vector<std::string> row{str(r.n), str(r.lo), side};
                for (auto& cell : proof_cells(**proof)) row.push_back(cell);
                o.rows.push_back(row);
            }
        }
        o.status = b.verdict ? kOk : kPropertyFailed;
        for (const auto& r : b.intervals)
            if (!r.verdict) {
                o.doc["first_failure"] = r.n;
                break;
            }
        return o;
    }
    const auto m = cert::certify_increasing(pw, options);
    o.doc = cert::to_json(m);
    o.header = {"n", "method", "k", "anchor", "verdict"};
    for (const auto& r : m.intervals) {
        std::vector<std::string> row{str(r.n)};
        for (auto& cell : proof_cells(r.proof)) row.push_back(cell);
        row.back() = str(r.verdict);
        o.rows.push_back(row);
    }
    o.status = m.verdict ? kOk : kPropertyFailed;
    for (const auto& r : m.intervals)
        if (!r.verdict) {
            o.doc["first_failure"] = r.n;
            break;
        }
    return o;
}

// ---------------------------------------------------------------- alpha

Output cmd_alpha(const RunConfig& c)
{
    const int l = c.rank.value_or(1);
    if (l < 0) throw UsageError("--rank must be >= 0");
    const Rational tol = c.tol.value_or(Rational(1, 1000000000000));
    if (tol <= 0) throw UsageError("--tol must be positive");
    const auto r = cert::alpha_root(l, tol);
    json doc{{"rank", l},
             {"lo", str(r.lo)},
             {"hi", str(r.hi)},
             {"width", str(r.hi - r.lo)},
             {"tol", str(tol)},
             {"exact", r.exact},
             {"iterations", r.iterations},
             {"lo_decimal", exact::to_decimal(r.lo, 15)}};
    bool ok = true;
    std::optional<QuadraticSurd> closed;
    if (l == 0) closed = QuadraticSurd::rational(3);
    if (l == 1) closed = exact::golden_ratio_squared();
    if (l == 2) closed = QuadraticSurd(1, 1, 2);
    if (closed) {
        ok = cert::surd_in_interval(*closed, r);
        doc["closed_form"] = surd_json(*closed);
        doc["contains_closed_form"] = ok;
    }
    return report_output(doc, ok);
}

// ---------------------------------------------------------------- report

Output cmd_report(const RunConfig& c)
{
    const std::string& name = c.selector;
    const int n = n_or(c, 1000);
    json doc{{"sequence", name}, {"to", n}};
    bool ok = true;
    if (name == "motzkin" || name == "rank1" || name == "delannoy" || name == "legendre" || name == "schroeder") {
        const auto t = build_table(c, name, n);
        const auto lb = cert::check_log_behavior(t);
        doc["log_behavior"] = convexity_json(lb);
        ok = lb.property == cert::LogProperty::log_convex || lb.property == cert::LogProperty::log_straight;
        if (name != "legendre" && name != "schroeder") {
            const auto lim = cert::limit_report(seq::ratio_sequence(t), limit_target(name), c.tol.value_or(Rational(1, 100)));
            doc["limit"] = {{"target", surd_json(lim.target)}, {"gap", lim.gap_decimal}, {"within", lim.within}, {"n", lim.n}};
        }
        if (name == "motzkin" || name == "rank1") {
            const auto bound = name == "motzkin" ? cert::InterlaceBound::motzkin : cert::InterlaceBound::rank1;
            const auto il = cert::interlace_check(seq::ratio_sequence(t), bound, name == "motzkin" ? 3 : 6);
            doc["interlace"] = {{"holds", il.holds()},
                                {"first_failure", il.first_failure ? json(*il.first_failure) : json(nullptr)}};
            ok = ok && il.holds();
        }
        if (name == "motzkin" || name == "rank1" || name == "legendre") {
            RunConfig pc = c;
            pc.selector = name;
            pc.to = std::min(n, name == "rank1" ? 40 : 60);
            const auto pw = patchwork_for(pc);
            const auto mono = cert::certify_increasing(pw, certify_options(c));
            doc["patchwork"] = {{"to", pw.last()}, {"continuous", pw.continuous()}, {"increasing", mono.verdict}};
            if (name == "motzkin") {
                // Reported, not claimed: a continuous upper bound f <= 3.
                const auto up = cert::certify_bounds(pw, std::nullopt, Rational(3), pw.first(), certify_options(c));
                doc["patchwork"]["unclaimed_upper_bound_3"] = up.verdict;
            }
        }
    } else {
        throw UsageError("no report for '" + name + "'");
    }
    doc["holds"] = ok;
    return report_output(doc, ok);
}

// ---------------------------------------------------------------- verify

Output cmd_verify(const RunConfig& c)
{
    std::ifstream in(c.selector);
    if (!in) throw UsageError("cannot read certificate '" + c.selector + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError(std::string("certificate is not JSON: ") + e.what());
    }
    const auto v = cert::verify_certificate(doc);
    json problems = v.problems;
    return report_output({{"file", c.selector},
                          {"valid", v.ok},
                          {"claimed_verdict", v.claimed_verdict},
                          {"records_checked", v.records_checked},
                          {"problems", problems}},
                         v.ok && v.claimed_verdict);
}

void emit(const Output& o, Format f, std::ostream& out)
{
    if (f == Format::json) {
        out << o.doc.dump(2) << '\n';
        return;
    }
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << '\n';
    };
    line(o.header);
    for (const auto& r : o.rows) line(r);
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        Output o;
        switch (config.command) {
        case Command::seq: o = cmd_seq(config); break;
        case Command::oracle: o = cmd_oracle(config); break;
        case Command::check: o = cmd_check(config); break;
        case Command::certify: o = cmd_certify(config); break;
        case Command::alpha: o = cmd_alpha(config); break;
        case Command::report: o = cmd_report(config); break;
        case Command::verify: o = cmd_verify(config); break;
        }
        const Format f = config.format.value_or(o.natural);
        if (config.out.empty()) {
            emit(o, f, out);
        } else {
            std::ofstream file(config.out);
            if (!file) throw UsageError("cannot write '" + config.out + "'");
            emit(o, f, file);
            if (!file) throw UsageError("write to '" + config.out + "' failed");
        }
        return o.status;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kUsage;
    } catch (const PrecisionError& e) {
        err << "precision error: " << e.what() << '\n';
        return kUsage;
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << '\n';
        return kConsistency;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kConsistency;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact sequences, oracles and certificates", "seqcert"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    RunConfig c;
    std::string format, t, tol, lower, upper, from;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", c.out, "output file (default: standard output)");
    };
    auto seq_opts = [&](CLI::App* sub) {
        sub->add_option("--n", c.n, "size or last index");
        sub->add_option("--rank", c.rank, "secondary-structure rank");
        sub->add_option("--t", t, "Legendre parameter p/q");
    };

    auto* s_seq = app.add_subcommand("seq", "print a sequence table");
    s_seq->add_option("sequence", c.selector)->required();
    seq_opts(s_seq);
    s_seq->add_flag("--ratios", c.ratios, "print x_n = a_n / a_{n-1}");
    common(s_seq);

    auto* s_oracle = app.add_subcommand("oracle", "compare exhaustive enumeration with the recursion");
    s_oracle->add_option("family", c.selector)->required();
    s_oracle->add_option("--n", c.n, "largest size (default: family budget)");
    s_oracle->add_option("--rank", c.rank, "secondary-structure rank");
    common(s_oracle);

    auto* s_check = app.add_subcommand("check", "check a property");
    s_check->add_option("property", c.selector,
                        "log, interlace, limit, series, asymptotic, bounds, pipelines, determinant, newton")
        ->required();
    s_check->add_option("target", c.target, "sequence the property is about");
    seq_opts(s_check);
    s_check->add_option("--tol", tol, "tolerance p/q");
    s_check->add_option("--expect", c.expect, "expected log property (exit 1 if different)");
    s_check->add_option("--digits", c.digits, "working precision for the asymptotic check");
    common(s_check);

    auto* s_cert = app.add_subcommand("certify", "certify a patchwork");
    s_cert->add_option("patchwork", c.selector, "motzkin-patchwork, rank1-patchwork, legendre-patchwork")->required();
    s_cert->add_option("--to", c.to, "left end of the last interval (default 60)");
    s_cert->add_option("--kmin", c.k_min, "smallest shift offset");
    s_cert->add_option("--kmax", c.k_max, "largest shift offset");
    s_cert->add_flag("--strict", c.strict, "require f' > 0 instead of f' >= 0");
    s_cert->add_option("--t", t, "Legendre parameter p/q");
    s_cert->add_option("--lower", lower, "certify f >= lower instead of monotonicity");
    s_cert->add_option("--upper", upper, "certify f <= upper instead of monotonicity");
    s_cert->add_option("--from", from, "start of the bound range (default: first piece)");
    s_cert->add_option("--threads", c.threads, "worker threads (default: SEQCERT_THREADS or all cores)");
    common(s_cert);

    auto* s_alpha = app.add_subcommand("alpha", "enclose the growth constant of rank-l structures");
    s_alpha->add_option("--rank", c.rank, "rank l >= 0");
    s_alpha->add_option("--tol", tol, "interval width p/q");
    common(s_alpha);

    auto* s_report = app.add_subcommand("report", "summary of the claims about one sequence");
    s_report->add_option("sequence", c.selector)->required();
    seq_opts(s_report);
    s_report->add_option("--tol", tol, "limit tolerance p/q");
    common(s_report);

    auto* s_verify = app.add_subcommand("verify", "re-check a certificate file");
    s_verify->add_option("certificate", c.selector)->required();
    common(s_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion& e) {
        out << kVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    const std::map<CLI::App*, Command> commands{{s_seq, Command::seq},       {s_oracle, Command::oracle},
                                                {s_check, Command::check},   {s_cert, Command::certify},
                                                {s_alpha, Command::alpha},   {s_report, Command::report},
                                                {s_verify, Command::verify}};
    c.command = commands.at(app.get_subcommands().front());
    try {
        auto rational = [](const std::string& s, const char* flag) -> std::optional<Rational> {
            if (s.empty()) return std::nullopt;
            try {
                return exact::parse_rational(s);
            } catch (const std::exception&) {
                throw UsageError(std::string(flag) + " expects p/q, got '" + s + "'");
            }
        };
        c.t = rational(t, "--t");
        c.tol = rational(tol, "--tol");
        c.lower = rational(lower, "--lower");
        c.upper = rational(upper, "--upper");
        c.from = rational(from, "--from");
        if (!format.empty()) c.format = format == "csv" ? Format::csv : Format::json;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }
    return run(c, out, err);
}

}  // namespace seqcert::cli
