#pragma once

// Continuous piecewise-rational extensions of ratio recursions.
//
// A ratio recursion comes from a linear recurrence
//   lead(n) a_n = sum_{j=1}^{m} p_j(n) a_{n-j}
// divided by a_{n-1}. Writing f for the extension of x_n = a_n / a_{n-1},
//   f(x) = (p_1 + p_2 / f(x-1) + p_3 / (f(x-1) f(x-2)) + ...) / lead
// on each unit interval past the base, which is constant.

#include "seqcert/exact/rational_function.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seqcert::cert {

using exact::Integer;
using exact::Polynomial;
using exact::Rational;
using exact::RationalFunction;

enum class PatchworkKind { motzkin, rank1, legendre };

std::string to_string(PatchworkKind k);
// Accepts "motzkin", "rank1", "legendre"; std::nullopt otherwise.
std::optional<PatchworkKind> parse_patchwork_kind(std::string_view s);

struct PatchworkSpec {
    PatchworkKind kind = PatchworkKind::motzkin;
    Rational t;  // legendre parameter, zero for the other kinds
    int base_lo = 0;
    int base_hi = 1;
    Rational base_value;
    Polynomial lead;
    std::vector<Polynomial> steps;  // p_1..p_m

    std::string name() const;
};

PatchworkSpec motzkin_spec();
PatchworkSpec rank1_spec();
PatchworkSpec legendre_spec(const Rational& t);
PatchworkSpec make_spec(PatchworkKind kind, const Rational& t = 0);

// Piece on [n, n+1].
struct Piece {
    int n;
    RationalFunction f;
};

// Values of the pieces meeting at integer x.
struct Junction {
    int x;
    Rational left;
    Rational right;
    bool equal() const { return left == right; }
};

enum class ContinuityPolicy {
    enforce,  // a jump throws ConsistencyError
    report,   // jumps are recorded in the junction list
};

struct Patchwork {
    PatchworkSpec spec;
    std::vector<Piece> pieces;  // consecutive, starting at spec.base_lo
    std::vector<Junction> junctions;

    int first() const { return pieces.front().n; }
    int last() const { return pieces.back().n; }
    bool continuous() const;
    // Throws std::out_of_range when n has no piece.
    const Piece& piece(int n) const;
    // Evaluates on the piece with n <= x <= n+1, taking the left piece at a
    // shared endpoint. Throws std::out_of_range outside [first, last + 1].
    Rational operator()(const Rational& x) const;
};

// Builds pieces on [base_lo, upto + 1]. Throws std::invalid_argument when
// upto < base_hi - 1, ConsistencyError on a pole inside a closed interval and,
// under ContinuityPolicy::enforce, on a jump at a junction.
Patchwork build_patchwork(const PatchworkSpec& spec, int upto,
                          ContinuityPolicy policy = ContinuityPolicy::enforce);

// The policy each family is built with by default: rank1 jumps at every
// junction from 5 on, so it is built in report mode.
ContinuityPolicy default_policy(PatchworkKind kind);

}  // namespace seqcert::cert
