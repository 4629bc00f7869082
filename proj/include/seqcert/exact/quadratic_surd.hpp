#pragma once

#include "seqcert/exact/rational.hpp"

#include <compare>
#include <string>

namespace seqcert::exact {

// a + b*sqrt(d) with rational a, b and square-free d >= 1. Comparisons with
// rationals are decided exactly by isolating the radical and squaring once.
class QuadraticSurd {
public:
    // Throws std::invalid_argument unless d is a positive square-free integer.
    QuadraticSurd(Rational a, Rational b, Integer d);
    // The rational a (b = 0, d = 1).
    static QuadraticSurd rational(const Rational& a);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Integer& d() const { return d_; }

    QuadraticSurd operator+(const Rational& q) const { return {a_ + q, b_, d_}; }
    QuadraticSurd operator-(const Rational& q) const { return {a_ - q, b_, d_}; }
    QuadraticSurd operator*(const Rational& q) const { return {a_ * q, b_ * q, d_}; }
    QuadraticSurd operator/(const Rational& q) const { return {a_ / q, b_ / q, d_}; }

    // Truncated (toward -infinity) decimal approximation with `digits`
    // fractional digits, computed with integer square roots.
    std::string to_decimal(int digits) const;

    friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

private:
    Rational a_;
    Rational b_;
    Integer d_;
};

bool is_square_free(const Integer& d);

// Ordering of q relative to s.
std::strong_ordering surd_compare(const Rational& q, const QuadraticSurd& s);

// floor(s * 10^digits) as an exact integer.
Integer surd_floor_scaled(const QuadraticSurd& s, int digits);

// Useful constants.
QuadraticSurd golden_ratio();          // (1 + sqrt 5)/2
QuadraticSurd golden_ratio_squared();  // (3 + sqrt 5)/2

}  // namespace seqcert::exact
