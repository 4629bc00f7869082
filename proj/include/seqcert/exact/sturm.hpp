#pragma once

#include "seqcert/exact/polynomial.hpp"

#include <vector>

namespace seqcert::exact {

// Sturm chain of the square-free part of p: p0 = sqf(p), p1 = p0',
// p_{i+1} = -rem(p_{i-1}, p_i), each scaled by a positive constant to
// integer coefficients with content 1.
std::vector<Polynomial> sturm_chain(const Polynomial& p);

// Sign variations of the chain at x, zeros skipped.
int sign_variations(const std::vector<Polynomial>& chain, const Rational& x);

// Number of distinct real roots of p in the open interval (lo, hi).
// Requires lo < hi and p nonzero.
int count_roots_open(const Polynomial& p, const Rational& lo, const Rational& hi);
// Number of distinct real roots in [lo, hi].
int count_roots_closed(const Polynomial& p, const Rational& lo, const Rational& hi);

struct SturmWitness {
    int chain_length = 0;
    int roots_in_interval = 0;  // distinct roots in the open interval
    Rational sample;            // midpoint of the interval
    int sample_sign = 0;        // sign of p at the sample
};

// Throws std::invalid_argument unless lo < hi.
SturmWitness sturm_analyze(const Polynomial& p, const Rational& lo, const Rational& hi);

// True iff p(x) > 0 for every x in (lo, hi). The zero polynomial is not positive.
bool sturm_positive_on_interval(const Polynomial& p, const Rational& lo, const Rational& hi);

}  // namespace seqcert::exact
