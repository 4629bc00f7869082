#include "seqcert/certify/claims.hpp"

#include "seqcert/errors.hpp"
#include "seqcert/exact/power_series.hpp"
#include "seqcert/sequences/sequences.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <stdexcept>

namespace seqcert::cert {

namespace {

int sign_of(std::strong_ordering o)
{
    return o < 0 ? -1 : (o > 0 ? 1 : 0);
}

// sign of x^l (x-2)^2 - 1
int alpha_sign(int l, const Rational& x)
{
    const Rational v = exact::rpow(x, static_cast<unsigned>(l)) * (x - 2) * (x - 2) - 1;
    return v.sign();
}

}  // namespace

QuadraticSurd interlace_term(InterlaceBound bound, int n)
{
    const Rational q(n, 2 * n + 3);
    if (bound == InterlaceBound::motzkin) return QuadraticSurd::rational(6 * q);
    return QuadraticSurd(3 * q, q, 5);
}

InterlaceReport interlace_check(const seq::RatioSequence& r, InterlaceBound bound, int n_from, std::optional<int> n_to)
{
    const int last = n_to.value_or(r.end_index());
    InterlaceReport rep;
    for (int n = n_from; n <= last; ++n) {
        const Rational& x = r.at(n);
        InterlaceRecord rec{n, exact::surd_compare(x, interlace_term(bound, n)) >= 0,
                            exact::surd_compare(x, interlace_term(bound, n + 1)) <= 0};
        if ((!rec.lower_ok || !rec.upper_ok) && !rep.first_failure) rep.first_failure = n;
        rep.records.push_back(rec);
    }
    return rep;
}

RootInterval alpha_root(int l, const Rational& tol)
{
    if (l < 0) throw std::invalid_argument("alpha_root: rank must be >= 0");
    if (tol <= 0) throw std::invalid_argument("alpha_root: tolerance must be positive");
    RootInterval r{2, 3, false, 0};
    // g(2) = -1 and g(3) = 3^l - 1 >= 0, g increasing on (2, 3].
    if (alpha_sign(l, r.hi) == 0) return {r.hi, r.hi, true, 0};
    while (r.hi - r.lo > tol) {
        const Rational mid = (r.lo + r.hi) / 2;
        ++r.iterations;
        const int s = alpha_sign(l, mid);
        if (s == 0) return {mid, mid, true, r.iterations};
        (s < 0 ? r.lo : r.hi) = mid;
    }
    return r;
}

bool surd_in_interval(const QuadraticSurd& s, const RootInterval& r)
{
    return exact::surd_compare(r.lo, s) <= 0 && exact::surd_compare(r.hi, s) >= 0;
}

LimitReport limit_report(const seq::RatioSequence& r, const QuadraticSurd& target, const Rational& tol)
{
    LimitReport rep;
    rep.name = r.base_name;
    rep.n = r.end_index();
    rep.x_n = r.at(rep.n);
    rep.target = target;
    rep.tol = tol;
    rep.side = sign_of(exact::surd_compare(rep.x_n, target));
    rep.within = exact::surd_compare(rep.x_n, target - tol) >= 0 && exact::surd_compare(rep.x_n, target + tol) <= 0;
    // |x_n - target| as a surd
    const QuadraticSurd gap = rep.side >= 0 ? QuadraticSurd(rep.x_n - target.a(), -target.b(), target.d())
                                            : QuadraticSurd(target.a() - rep.x_n, target.b(), target.d());
    rep.gap_decimal = gap.to_decimal(30);
    return rep;
}

AsymptoticReport asymptotic_check_motzkin(const seq::SequenceTable& t, int n, unsigned digits)
{
    using boost::multiprecision::mpfr_float;
    if (n < 1) throw std::invalid_argument("asymptotic check needs n >= 1");
    const Integer m = t.integer_at(n);
    if (digits > 10000) throw PrecisionError("asymptotic check: precision budget of 10000 digits exceeded");
    // log M_n has about log10(n) integer digits; 25 more keep 20 after cancellation.
    const unsigned needed = static_cast<unsigned>(std::ceil(std::log10(static_cast<double>(n) + 1))) + 25;
    if (digits < needed)
        throw PrecisionError("asymptotic check at n = " + std::to_string(n) + " needs at least "
                             + std::to_string(needed) + " digits");

    const auto saved = mpfr_float::default_precision();
    mpfr_float::default_precision(digits);
    const mpfr_float nn(n);
    const mpfr_float logm = log(mpfr_float(m));
    const mpfr_float three(3);
    const mpfr_float logref = log(three / (4 * boost::math::constants::pi<mpfr_float>())) / 2
                              + (nn + 1) * log(three) - (mpfr_float(3) / 2) * log(nn);
    const mpfr_float ratio = exp(logm - logref);
    const mpfr_float dev = ratio - 1;

    AsymptoticReport rep;
    rep.n = n;
    rep.digits = digits;
    rep.positive = ratio > 0;
    rep.ratio = ratio.str(20, std::ios_base::fixed);
    rep.deviation = dev.str(20, std::ios_base::scientific);
    const mpfr_float scaled = ceil(abs(dev) * pow(mpfr_float(10), 20));
    Integer bound;
    mpfr_get_z(bound.backend().data(), scaled.backend().data(), MPFR_RNDU);
    rep.deviation_bound = Rational(bound, exact::ipow(10, 20));
    mpfr_float::default_precision(saved);
    return rep;
}

SeriesReport series_identity_check(SeriesKind kind, int order)
{
    if (order < 1) throw std::invalid_argument("series check needs order >= 1");
    SeriesReport rep;
    rep.order = order;
    const auto n = static_cast<std::size_t>(order);
    if (kind == SeriesKind::motzkin_gf) {
        // M(x) = (1 - x - sqrt(1 - 2x - 3x^2)) / (2x^2): M_k is half the
        // coefficient of x^{k+2} in -sqrt(...), for k >= 0.
        const auto root = exact::series_sqrt(exact::PowerSeries(exact::Polynomial{1, -2, -3}, n + 2));
        const auto m = seq::motzkin_short(order - 1);
        for (int k = 0; k < order; ++k) {
            const Rational c = -root[static_cast<std::size_t>(k) + 2] / 2;
            if (c != m.at(k)) {
                rep.first_mismatch = k;
                break;
            }
        }
    } else {
        const auto d = exact::series_inv_sqrt(exact::PowerSeries(exact::Polynomial{1, -6, 1}, n));
        const auto ref = seq::delannoy(order - 1);
        for (int k = 0; k < order; ++k) {
            if (d[static_cast<std::size_t>(k)] != ref.at(k)) {
                rep.first_mismatch = k;
                break;
            }
        }
    }
    return rep;
}

}  // namespace seqcert::cert
