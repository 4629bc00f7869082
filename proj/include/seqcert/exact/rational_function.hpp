#pragma once

#include "seqcert/exact/polynomial.hpp"

#include <string>

namespace seqcert::exact {

// num/den in canonical form:
//   * num and den have integer coefficients whose joint gcd is 1,
//   * gcd(num, den) = 1,
//   * den has a positive leading coefficient.
// Zero is 0/1. Equality is structural on canonical forms.
class RationalFunction {
public:
    RationalFunction() : den_(Polynomial::constant(1)) {}
    RationalFunction(const Rational& c);  // NOLINT(google-explicit-constructor)
    explicit RationalFunction(Polynomial p);
    // Throws std::domain_error when den is zero.
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    // Throws std::domain_error at a pole.
    Rational operator()(const Rational& x) const;

    RationalFunction derivative() const;
    // x -> f(x + s)
    RationalFunction shifted(const Integer& s) const;
    // Throws std::domain_error for the zero function.
    RationalFunction reciprocal() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    // Throws std::domain_error when b is zero.
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    struct Canonical {};
    RationalFunction(Canonical, Polynomial num, Polynomial den)
        : num_(std::move(num)), den_(std::move(den)) {}
    // Fixes scale and sign only; the caller guarantees gcd(num, den) = 1.
    static RationalFunction from_coprime(Polynomial num, Polynomial den);

    Polynomial num_;
    Polynomial den_;
};

enum class ArithOp { add, sub, mul, div };

RationalFunction ratfunc_arith(const RationalFunction& a, const RationalFunction& b, ArithOp op);
inline RationalFunction ratfunc_derivative(const RationalFunction& a) { return a.derivative(); }
inline RationalFunction ratfunc_substitute_shift(const RationalFunction& a, const Integer& s)
{
    return a.shifted(s);
}

std::string to_string(const RationalFunction& f, std::string_view var = "x");

}  // namespace seqcert::exact
