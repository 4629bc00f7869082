#include "seqcert/certify/monotonicity.hpp"

#include "seqcert/exact/sturm.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <stdexcept>
#include <thread>

namespace seqcert::cert {

namespace {

// Runs body(i) for i in [0, count) on `threads` workers. Results are written
// by index, so the outcome does not depend on scheduling.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body)
{
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < count; i = next++) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace

int resolve_threads(int requested)
{
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SEQCERT_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

Polynomial derivative_numerator(const RationalFunction& f)
{
    const Polynomial n = f.num().derivative() * f.den() - f.num() * f.den().derivative();
    if (n.is_zero()) return n;
    const Rational a = exact::content(n);
    const Rational b = exact::content(f.den() * f.den());
    // both contents are integers because the pieces have integer coefficients
    const Integer g = boost::multiprecision::gcd(exact::numerator_of(a), exact::numerator_of(b));
    return n * Rational(1, g);
}

bool denominator_positive(const RationalFunction& f, const Rational& lo, const Rational& hi)
{
    return f.den().sign_at(lo) > 0 && exact::count_roots_closed(f.den(), lo, hi) == 0;
}

MonotonicityCertificate certify_increasing(const Patchwork& p, const CertifyOptions& options)
{
    MonotonicityCertificate cert{p, options, std::vector<IntervalRecord>(p.pieces.size()), false};
    parallel_for(p.pieces.size(), resolve_threads(options.threads), [&](std::size_t i) {
        const Piece& piece = p.pieces[i];
        IntervalRecord r;
        r.n = piece.n;
        r.numerator = derivative_numerator(piece.f);
        r.denominator_positive = denominator_positive(piece.f, piece.n, piece.n + 1);
        r.proof = prove_nonnegative(r.numerator, piece.n, piece.n + 1, options.shifts, options.mode);
        r.verdict = r.denominator_positive && r.proof.verdict;
        cert.intervals[i] = std::move(r);
    });
    cert.verdict = std::all_of(cert.intervals.begin(), cert.intervals.end(),
                               [](const IntervalRecord& r) { return r.verdict; });
    return cert;
}

BoundCertificate certify_bounds(const Patchwork& p, const std::optional<Rational>& lower,
                                const std::optional<Rational>& upper, const Rational& from_x,
                                const CertifyOptions& options)
{
    if (!lower && !upper) throw std::invalid_argument("certify_bounds needs a lower or an upper bound");
    if (from_x < p.first() || from_x >= p.last() + 1)
        throw std::invalid_argument("bound start outside the patchwork");

    std::vector<const Piece*> covered;
    for (const auto& piece : p.pieces)
        if (from_x < piece.n + 1) covered.push_back(&piece);

    BoundCertificate cert{p, lower, upper, from_x, options, std::vector<BoundRecord>(covered.size()), false};
    parallel_for(covered.size(), resolve_threads(options.threads), [&](std::size_t i) {
        const Piece& piece = *covered[i];
        BoundRecord r;
        r.n = piece.n;
        r.lo = std::max(from_x, Rational(piece.n));
        const Rational hi = piece.n + 1;
        r.denominator_positive = denominator_positive(piece.f, r.lo, hi);
        bool ok = r.denominator_positive;
        // Bounds are weak inequalities on the closed interval.
        if (lower) {
            r.lower_numerator = exact::primitive_part(piece.f.num() - piece.f.den() * *lower);
            r.lower_proof = prove_nonnegative(*r.lower_numerator, r.lo, hi, options.shifts, PositivityMode::weak, true);
            ok = ok && r.lower_proof->verdict;
        }
        if (upper) {
            r.upper_numerator = exact::primitive_part(piece.f.den() * *upper - piece.f.num());
            r.upper_proof = prove_nonnegative(*r.upper_numerator, r.lo, hi, options.shifts, PositivityMode::weak, true);
            ok = ok && r.upper_proof->verdict;
        }
        r.verdict = ok;
        cert.intervals[i] = std::move(r);
    });
    cert.verdict = std::all_of(cert.intervals.begin(), cert.intervals.end(),
                               [](const BoundRecord& r) { return r.verdict; });
    return cert;
}

}  // namespace seqcert::cert
