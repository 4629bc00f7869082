#include "seqcert/certify/certificate.hpp"

#include "seqcert/exact/sturm.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <map>
#include <stdexcept>

namespace seqcert::cert {

using nlohmann::json;

namespace {

struct Malformed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw Malformed(std::string("missing field '") + key + "'");
    return j.at(key);
}

Rational rational(const json& j)
{
    if (!j.is_string()) throw Malformed("expected a rational string");
    try {
        return exact::parse_rational(j.get<std::string>());
    } catch (const std::exception&) {
        throw Malformed("bad rational '" + j.get<std::string>() + "'");
    }
}

Integer integer(const json& j)
{
    const Rational q = rational(j);
    if (!exact::is_integer(q)) throw Malformed("expected an integer, got " + exact::to_string(q));
    return exact::numerator_of(q);
}

int small_int(const json& j)
{
    if (!j.is_number_integer()) throw Malformed("expected an integer");
    return j.get<int>();
}

bool boolean(const json& j)
{
    if (!j.is_boolean()) throw Malformed("expected a boolean");
    return j.get<bool>();
}

Polynomial polynomial(const json& j)
{
    if (!j.is_array()) throw Malformed("expected a coefficient array");
    std::vector<Rational> c;
    for (const auto& e : j) c.emplace_back(integer(e));
    if (!c.empty() && c.back() == 0) throw Malformed("coefficient array has a trailing zero");
    return Polynomial(std::move(c));
}

// p(x + a) by the binomial theorem, coefficient by coefficient.
Polynomial taylor(const Polynomial& p, const Integer& a)
{
    const auto& c = p.coefficients();
    std::vector<Rational> out(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
        Rational sum = 0;
        Integer power = 1;
        for (std::size_t i = j; i < c.size(); ++i) {
            sum += c[i] * exact::binomial(static_cast<long>(i), static_cast<long>(j)) * power;
            power *= a;
        }
        out[j] = sum;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return Polynomial(std::move(out));
}

bool all_nonnegative_some_positive(const Polynomial& p)
{
    bool positive = false;
    for (const auto& c : p.coefficients()) {
        if (c < 0) return false;
        if (c > 0) positive = true;
    }
    return positive;
}

// p scaled by the positive rational that makes the coefficients of p and
// companion coprime integers, jointly.
Polynomial lowest_terms(const Polynomial& p, const Polynomial& companion)
{
    Integer l = 1, g = 0;
    for (const auto* q : {&p, &companion})
        for (const auto& c : q->coefficients()) l = boost::multiprecision::lcm(l, exact::denominator_of(c));
    for (const auto* q : {&p, &companion})
        for (const auto& c : q->coefficients()) g = boost::multiprecision::gcd(g, exact::numerator_of(c * l));
    return g == 0 ? p : p * Rational(l, g);
}

// Distinct roots of odd multiplicity in (lo, hi), as an alternating sum of
// the counts of roots with multiplicity >= i.
int odd_multiplicity_roots(const Polynomial& p, const Rational& lo, const Rational& hi)
{
    int total = 0;
    int parity = 1;
    Polynomial q = p;
    while (q.degree() > 0) {
        total += parity * exact::count_roots_open(q, lo, hi);
        parity = -parity;
        q = exact::gcd(q, q.derivative());
    }
    return total;
}

struct Rule {
    Polynomial lead;
    std::vector<Polynomial> steps;
    int lo = 0;
    int hi = 0;
    Rational value;
};

Rule rule_for(const std::string& family, const json& patchwork)
{
    const Polynomial x{0, 1};
    if (family == "motzkin") return {x + Polynomial{2}, {2 * x + Polynomial{1}, 3 * x - Polynomial{3}}, 2, 3, 2};
    if (family == "rank1")
        return {x + Polynomial{2},
                {2 * x + Polynomial{1}, x - Polynomial{1}, 2 * x - Polynomial{5}, Polynomial{4} - x},
                2, 5, 2};
    if (family == "legendre") {
        const Rational t = rational(field(patchwork, "t"));
        return {x, {t * (2 * x - Polynomial{1}), Polynomial{1} - x}, 0, 1, t};
    }
    throw Malformed("unknown family '" + family + "'");
}

struct PieceData {
    Polynomial num;
    Polynomial den;
    bool den_positive = false;  // on the closed unit interval
};

class Checker {
public:
    explicit Checker(Verification& v) : v_(v) {}

    void problem(const std::string& what) { v_.problems.push_back(what); }

    std::map<int, PieceData> pieces;
    Rule rule;

    void load_patchwork(const json& pw)
    {
        const std::string family = field(pw, "family").get<std::string>();
        rule = rule_for(family, pw);
        const json& base = field(pw, "base");
        if (small_int(field(base, "lo")) != rule.lo || small_int(field(base, "hi")) != rule.hi
            || rational(field(base, "value")) != rule.value)
            problem("base interval or value does not match the " + family + " recurrence");
        const int upto = small_int(field(pw, "upto"));
        int expect = rule.lo;
        for (const auto& p : field(pw, "pieces")) {
            const int n = small_int(field(p, "n"));
            if (n != expect) throw Malformed("pieces are not consecutive at n = " + std::to_string(n));
            ++expect;
            PieceData d{polynomial(field(p, "num")), polynomial(field(p, "den"))};
            if (d.den.is_zero()) throw Malformed("zero denominator at n = " + std::to_string(n));
            pieces.emplace(n, std::move(d));
        }
        if (expect - 1 != upto) problem("pieces do not end at upto = " + std::to_string(upto));
        if (upto < rule.hi - 1) problem("patchwork does not cover its base interval");

        for (auto& [n, d] : pieces) {
            d.den_positive = d.den.sign_at(n) > 0 && exact::count_roots_closed(d.den, n, n + 1) == 0;
            if (!d.den_positive)
                problem("piece " + std::to_string(n) + ": denominator not positive on its interval");
            if (n < rule.hi) {
                if (d.num != d.den * rule.value) problem("base piece " + std::to_string(n) + " is not the base value");
            } else if (!recurrence_holds(n)) {
                problem("piece " + std::to_string(n) + " does not satisfy the recurrence");
            }
        }

        bool continuous = true;
        int jx = rule.lo + 1;
        for (const auto& j : field(pw, "junctions")) {
            const int x = small_int(field(j, "x"));
            if (x != jx++ || !pieces.count(x) || !pieces.count(x - 1)) throw Malformed("bad junction list");
            const Rational left = value(x - 1, x);
            const Rational right = value(x, x);
            if (rational(field(j, "left")) != left || rational(field(j, "right")) != right)
                problem("junction " + std::to_string(x) + ": stored values differ from the pieces");
            if (boolean(field(j, "equal")) != (left == right))
                problem("junction " + std::to_string(x) + ": wrong equality flag");
            continuous = continuous && left == right;
        }
        if (jx != upto + 1) problem("junction list incomplete");
        if (boolean(field(pw, "continuous")) != continuous) problem("wrong continuity flag");
    }

    Rational value(int n, const Rational& x) const
    {
        const auto& d = pieces.at(n);
        return d.num(x) / d.den(x);
    }

    // a_n lead A = b_n sum_j p_j prod_{i<j} b_i prod_{j<=i<m} a_i, A = prod_{i<m} a_i,
    // where a_i / b_i is piece n-i evaluated at x - i.
    bool recurrence_holds(int n) const
    {
        const std::size_t m = rule.steps.size();
        std::vector<Polynomial> a(m), b(m);
        for (std::size_t i = 1; i < m; ++i) {
            const auto& d = pieces.at(n - static_cast<int>(i));
            if (d.num.is_zero()) return false;
            a[i] = taylor(d.num, -static_cast<long>(i));
            b[i] = taylor(d.den, -static_cast<long>(i));
        }
        Polynomial lhs = pieces.at(n).num * rule.lead;
        for (std::size_t i = 1; i < m; ++i) lhs = lhs * a[i];
        Polynomial sum;
        for (std::size_t j = 1; j <= m; ++j) {
            Polynomial term = rule.steps[j - 1];
            for (std::size_t i = 1; i < j; ++i) term = term * b[i];
            for (std::size_t i = j; i < m; ++i) term = term * a[i];
            sum = sum + term;
        }
        return lhs == pieces.at(n).den * sum;
    }

    // Re-derives the verdict of a stored positivity proof for N on [lo, hi].
    bool check_proof(const json& proof, const Polynomial& N, const Rational& lo, const Rational& hi, int k_min,
                     int k_max, bool weak, bool closed, const std::string& label)
    {
        const std::string method = field(proof, "method").get<std::string>();
        bool verdict = false;
        if (method == "zero") {
            if (!N.is_zero()) problem(label + ": method zero on a nonzero numerator");
            verdict = weak;
        } else if (method == "shift") {
            const int k = small_int(field(proof, "k"));
            const Integer anchor = integer(field(proof, "anchor"));
            Integer floor_lo = exact::numerator_of(lo) / exact::denominator_of(lo);
            if (floor_lo > lo) floor_lo -= 1;
            if (k < k_min || k > k_max) problem(label + ": shift offset outside the declared range");
            if (anchor != floor_lo - k) problem(label + ": anchor does not match the offset");
            verdict = anchor <= lo && all_nonnegative_some_positive(taylor(N, anchor));
            if (!verdict) problem(label + ": shifted coefficients are not all nonnegative");
        } else if (method == "sturm") {
            const json& s = field(proof, "sturm");
            const auto w = exact::sturm_analyze(N, lo, hi);
            if (small_int(field(s, "roots")) != w.roots_in_interval || small_int(field(s, "sample_sign")) != w.sample_sign
                || rational(field(s, "sample")) != w.sample || small_int(field(s, "chain_length")) != w.chain_length)
                problem(label + ": Sturm summary does not reproduce");
            verdict = w.roots_in_interval == 0 && w.sample_sign > 0;
            if (!verdict && weak && !N.is_zero() && odd_multiplicity_roots(N, lo, hi) == 0) {
                Rational x = (lo + hi) / 2, step = (hi - lo) / 4;
                while (N.sign_at(x) == 0) {
                    x += step;
                    step /= 2;
                }
                verdict = N.sign_at(x) > 0;
            }
            if (verdict && closed) verdict = N.sign_at(lo) >= 0 && N.sign_at(hi) >= 0;
        } else if (method != "none") {
            throw Malformed(label + ": unknown method '" + method + "'");
        }
        if (boolean(field(proof, "verdict")) != verdict) problem(label + ": stored verdict does not reproduce");
        ++v_.records_checked;
        return verdict;
    }

private:
    Verification& v_;
};

void verify_increasing(const json& doc, Checker& c, bool& overall)
{
    const bool weak = field(doc, "mode").get<std::string>() == "weak";
    const json& range = field(doc, "shift_range");
    const int k_min = small_int(field(range, "k_min")), k_max = small_int(field(range, "k_max"));
    auto it = c.pieces.begin();
    for (const auto& r : field(doc, "intervals")) {
        const int n = small_int(field(r, "n"));
        if (it == c.pieces.end() || it->first != n) throw Malformed("intervals do not follow the pieces");
        const PieceData& d = it->second;
        ++it;
        const std::string label = "interval " + std::to_string(n);
        const Polynomial N = polynomial(field(r, "numerator"));
        if (N != lowest_terms(d.num.derivative() * d.den - d.num * d.den.derivative(), d.den * d.den))
            c.problem(label + ": numerator is not the derivative numerator of the piece");
        const bool den_ok = d.den_positive;
        if (boolean(field(r, "denominator_positive")) != den_ok) c.problem(label + ": wrong denominator flag");
        const bool ok = c.check_proof(field(r, "proof"), N, n, n + 1, k_min, k_max, weak, false, label) && den_ok;
        if (boolean(field(r, "verdict")) != ok) c.problem(label + ": stored verdict does not reproduce");
        overall = overall && ok;
    }
    if (it != c.pieces.end()) c.problem("intervals do not cover every piece");
}

void verify_bounds(const json& doc, Checker& c, bool& overall)
{
    const json& range = field(doc, "shift_range");
    const int k_min = small_int(field(range, "k_min")), k_max = small_int(field(range, "k_max"));
    const json& lj = field(doc, "lower");
    const json& uj = field(doc, "upper");
    const std::optional<Rational> lower = lj.is_null() ? std::nullopt : std::optional<Rational>(rational(lj));
    const std::optional<Rational> upper = uj.is_null() ? std::nullopt : std::optional<Rational>(rational(uj));
    if (!lower && !upper) throw Malformed("bound certificate without bounds");
    const Rational from = rational(field(doc, "from"));
    auto it = c.pieces.begin();
    while (it != c.pieces.end() && it->first + 1 <= from) ++it;
    if (it == c.pieces.end() || from < c.pieces.begin()->first) throw Malformed("bound start outside the patchwork");
    for (const auto& r : field(doc, "intervals")) {
        const int n = small_int(field(r, "n"));
        if (it == c.pieces.end() || it->first != n) throw Malformed("bound intervals do not follow the pieces");
        const PieceData& d = it->second;
        ++it;
        const std::string label = "bound interval " + std::to_string(n);
        const Rational lo = std::max(from, Rational(n));
        if (rational(field(r, "lo")) != lo) c.problem(label + ": wrong left end");
        const bool den_ok =
            d.den_positive || (d.den.sign_at(lo) > 0 && exact::count_roots_closed(d.den, lo, n + 1) == 0);
        if (boolean(field(r, "denominator_positive")) != den_ok) c.problem(label + ": wrong denominator flag");
        bool ok = den_ok;
        auto side = [&](const char* key, const std::optional<Rational>& bound, const Polynomial& fresh) {
            const json& s = field(r, key);
            if (!bound) {
                if (!s.is_null()) c.problem(label + ": unexpected " + key + " record");
                return;
            }
            const Polynomial N = polynomial(field(s, "numerator"));
            if (N != lowest_terms(fresh, Polynomial{})) c.problem(label + ": " + key + " numerator does not match the piece");
            ok = c.check_proof(s, N, lo, n + 1, k_min, k_max, true, true, label + " " + key) && ok;
        };
        side("lower", lower, lower ? d.num - d.den * *lower : Polynomial{});
        side("upper", upper, upper ? d.den * *upper - d.num : Polynomial{});
        if (boolean(field(r, "verdict")) != ok) c.problem(label + ": stored verdict does not reproduce");
        overall = overall && ok;
    }
    if (it != c.pieces.end()) c.problem("bound intervals do not reach the last piece");
}

}  // namespace

Verification verify_certificate(const json& doc)
{
    Verification v;
    try {
        if (field(doc, "schema") != kCertificateSchema) throw Malformed("not a seqcert certificate");
        if (small_int(field(doc, "schema_version")) != kCertificateSchemaVersion)
            throw Malformed("unsupported schema version");
        v.claimed_verdict = boolean(field(doc, "verdict"));
        Checker c(v);
        c.load_patchwork(field(doc, "patchwork"));
        bool overall = true;
        const std::string claim = field(doc, "claim").get<std::string>();
        if (claim == "increasing")
            verify_increasing(doc, c, overall);
        else if (claim == "bounds")
            verify_bounds(doc, c, overall);
        else
            throw Malformed("unknown claim '" + claim + "'");
        if (overall != v.claimed_verdict) v.problems.push_back("overall verdict does not reproduce");
    } catch (const Malformed& e) {
        v.problems.push_back(std::string("malformed certificate: ") + e.what());
    } catch (const nlohmann::json::exception& e) {
        v.problems.push_back(std::string("malformed certificate: ") + e.what());
    }
    v.ok = v.problems.empty();
    return v;
}

}  // namespace seqcert::cert
