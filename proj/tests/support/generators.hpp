#pragma once

// Deterministic random generators for property-style tests.

#include "seqcert/exact/polynomial.hpp"

#include <random>

namespace seqcert::testing {

inline std::mt19937_64& rng()
{
    static std::mt19937_64 engine(20240917);
    return engine;
}

inline long random_int(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline exact::Rational random_rational(long magnitude = 20, long max_den = 9)
{
    return exact::Rational(random_int(-magnitude, magnitude), random_int(1, max_den));
}

inline exact::Polynomial random_polynomial(int max_degree, long magnitude = 20, long max_den = 1)
{
    std::vector<exact::Rational> c(static_cast<std::size_t>(random_int(0, max_degree) + 1));
    for (auto& x : c) x = random_rational(magnitude, max_den);
    return exact::Polynomial(std::move(c));
}

}  // namespace seqcert::testing
