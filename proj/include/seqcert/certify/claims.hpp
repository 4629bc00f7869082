#pragma once

// Interlacing, growth-constant roots, limits, Motzkin asymptotics and
// generating-function identities.

#include "seqcert/exact/quadratic_surd.hpp"
#include "seqcert/sequences/sequence_table.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seqcert::cert {

using exact::Integer;
using exact::QuadraticSurd;
using exact::Rational;

enum class InterlaceBound {
    motzkin,  // a_n = 6n / (2n+3)
    rank1,    // a_n = 2n phi^2 / (2n+3) = n (3 + sqrt 5) / (2n+3)
};

QuadraticSurd interlace_term(InterlaceBound bound, int n);

struct InterlaceRecord {
    int n;
    bool lower_ok;  // a_n <= x_n
    bool upper_ok;  // x_n <= a_{n+1}
};

struct InterlaceReport {
    std::vector<InterlaceRecord> records;
    std::optional<int> first_failure;
    bool holds() const { return !first_failure; }
};

// Checks a_n <= x_n <= a_{n+1} for n_from <= n <= n_to (default: the last
// ratio). Throws std::out_of_range outside the ratio table.
InterlaceReport interlace_check(const seq::RatioSequence& r, InterlaceBound bound, int n_from,
                                std::optional<int> n_to = std::nullopt);

// Enclosure of the largest real root of x^l (x-2)^2 = 1 with dyadic endpoints.
struct RootInterval {
    Rational lo;
    Rational hi;
    bool exact = false;  // an endpoint hit the root
    int iterations = 0;
};

// Bisection on [2, 3]. Throws std::invalid_argument for l < 0 or tol <= 0.
RootInterval alpha_root(int l, const Rational& tol);

bool surd_in_interval(const QuadraticSurd& s, const RootInterval& r);

struct LimitReport {
    std::string name;
    int n = 0;
    Rational x_n;
    QuadraticSurd target = QuadraticSurd::rational(0);
    Rational tol;
    bool within = false;     // |x_n - target| <= tol
    int side = 0;            // sign of x_n - target
    std::string gap_decimal; // |x_n - target| truncated to 30 digits
};

// Gap between the last ratio and the target, decided exactly.
LimitReport limit_report(const seq::RatioSequence& r, const QuadraticSurd& target, const Rational& tol);

struct AsymptoticReport {
    int n = 0;
    unsigned digits = 0;  // working precision, decimal digits
    std::string ratio;    // M_n / (sqrt(3/(4 pi)) 3^{n+1} n^{-3/2}), 20 digits
    std::string deviation;
    Rational deviation_bound;  // |ratio - 1| rounded up at 10^-20
    bool positive = false;
};

// The one floating-point computation in the library, done in MPFR at the
// given precision. Throws PrecisionError when the precision is below what the
// size of M_n needs or above 10000 digits, std::out_of_range when n is not in
// the table, std::invalid_argument for n < 1.
AsymptoticReport asymptotic_check_motzkin(const seq::SequenceTable& t, int n, unsigned digits = 60);

enum class SeriesKind { motzkin_gf, delannoy_gf };

struct SeriesReport {
    int order = 0;
    std::optional<int> first_mismatch;
    bool holds() const { return !first_mismatch; }
};

// Expands the closed-form generating function to `order` coefficients and
// compares with the recursion. Throws std::invalid_argument for order < 1.
SeriesReport series_identity_check(SeriesKind kind, int order);

}  // namespace seqcert::cert
