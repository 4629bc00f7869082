#include "seqcert/certify/patchwork.hpp"

#include "seqcert/errors.hpp"
#include "seqcert/exact/sturm.hpp"

#include <stdexcept>

namespace seqcert::cert {

std::string to_string(PatchworkKind k)
{
    switch (k) {
    case PatchworkKind::motzkin: return "motzkin";
    case PatchworkKind::rank1: return "rank1";
    case PatchworkKind::legendre: return "legendre";
    }
    return "unknown";
}

std::optional<PatchworkKind> parse_patchwork_kind(std::string_view s)
{
    if (s == "motzkin") return PatchworkKind::motzkin;
    if (s == "rank1") return PatchworkKind::rank1;
    if (s == "legendre") return PatchworkKind::legendre;
    return std::nullopt;
}

std::string PatchworkSpec::name() const
{
    if (kind == PatchworkKind::legendre) return "legendre(" + exact::to_string(t) + ")";
    return to_string(kind);
}

PatchworkSpec motzkin_spec()
{
    PatchworkSpec s;
    s.kind = PatchworkKind::motzkin;
    s.base_lo = 2;
    s.base_hi = 3;
    s.base_value = 2;
    s.lead = Polynomial::linear(2, 1);
    s.steps = {Polynomial::linear(1, 2), Polynomial::linear(-3, 3)};
    return s;
}

PatchworkSpec rank1_spec()
{
    PatchworkSpec s;
    s.kind = PatchworkKind::rank1;
    s.base_lo = 2;
    s.base_hi = 5;
    s.base_value = 2;
    s.lead = Polynomial::linear(2, 1);
    s.steps = {Polynomial::linear(1, 2), Polynomial::linear(-1, 1), Polynomial::linear(-5, 2),
               Polynomial::linear(4, -1)};
    return s;
}

PatchworkSpec legendre_spec(const Rational& t)
{
    PatchworkSpec s;
    s.kind = PatchworkKind::legendre;
    s.t = t;
    s.base_lo = 0;
    s.base_hi = 1;
    s.base_value = t;
    s.lead = Polynomial::linear(0, 1);
    s.steps = {Polynomial::linear(-t, 2 * t), Polynomial::linear(1, -1)};
    return s;
}

PatchworkSpec make_spec(PatchworkKind kind, const Rational& t)
{
    switch (kind) {
    case PatchworkKind::motzkin: return motzkin_spec();
    case PatchworkKind::rank1: return rank1_spec();
    case PatchworkKind::legendre: return legendre_spec(t);
    }
    throw std::invalid_argument("unknown patchwork kind");
}

bool Patchwork::continuous() const
{
    for (const auto& j : junctions)
        if (!j.equal()) return false;
    return true;
}

const Piece& Patchwork::piece(int n) const
{
    if (pieces.empty() || n < first() || n > last())
        throw std::out_of_range("patchwork has no piece on [" + std::to_string(n) + ", " + std::to_string(n + 1) + "]");
    return pieces[static_cast<std::size_t>(n - first())];
}

Rational Patchwork::operator()(const Rational& x) const
{
    if (pieces.empty() || x < first() || x > last() + 1) throw std::out_of_range("point outside the patchwork");
    const Integer num = exact::numerator_of(x);
    const Integer den = exact::denominator_of(x);
    Integer fl = num / den;
    if (num < 0 && fl * den != num) fl -= 1;
    int n = static_cast<int>(fl);
    if (den == 1 && n > first()) n -= 1;
    if (n > last()) n = last();
    return piece(n).f(x);
}

ContinuityPolicy default_policy(PatchworkKind kind)
{
    return kind == PatchworkKind::rank1 ? ContinuityPolicy::report : ContinuityPolicy::enforce;
}

Patchwork build_patchwork(const PatchworkSpec& spec, int upto, ContinuityPolicy policy)
{
    if (upto < spec.base_hi - 1)
        throw std::invalid_argument("patchwork must extend at least to the end of the base interval");
    if (spec.steps.empty()) throw std::invalid_argument("patchwork spec without step rule");
    const int m = static_cast<int>(spec.steps.size());
    if (spec.base_hi - spec.base_lo < m - 1)
        throw std::invalid_argument("base interval too short for the step rule");

    Patchwork pw{spec, {}, {}};
    for (int n = spec.base_lo; n < spec.base_hi; ++n) pw.pieces.push_back({n, RationalFunction(spec.base_value)});

    for (int n = spec.base_hi; n <= upto; ++n) {
        RationalFunction g(spec.steps[static_cast<std::size_t>(m - 1)]);
        for (int j = m - 1; j >= 1; --j) {
            const RationalFunction fj = pw.piece(n - j).f.shifted(Integer(-j));
            g = RationalFunction(spec.steps[static_cast<std::size_t>(j - 1)]) + g / fj;
        }
        RationalFunction f = g / RationalFunction(spec.lead);
        if (exact::count_roots_closed(f.den(), n, n + 1) > 0)
            throw ConsistencyError(spec.name() + " patchwork: pole in [" + std::to_string(n) + ", "
                                   + std::to_string(n + 1) + "]");
        pw.pieces.push_back({n, std::move(f)});
    }

    for (int x = pw.first() + 1; x <= upto; ++x) {
        Junction j{x, pw.piece(x - 1).f(x), pw.piece(x).f(x)};
        if (!j.equal() && policy == ContinuityPolicy::enforce)
            throw ConsistencyError(spec.name() + " patchwork: jump at x = " + std::to_string(x) + " ("
                                   + exact::to_string(j.left) + " vs " + exact::to_string(j.right) + ")");
        pw.junctions.push_back(std::move(j));
    }
    return pw;
}

}  // namespace seqcert::cert
