#pragma once

#include "seqcert/exact/rational.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace seqcert::exact {

// Dense univariate polynomial over the rationals. coefficients()[i] is the
// coefficient of x^i. The zero polynomial is the empty coefficient vector;
// every other polynomial has a nonzero last coefficient. Two polynomials
// are equal iff their coefficient vectors are equal.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t degree);
    // c0 + c1 x
    static Polynomial linear(const Rational& c0, const Rational& c1);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    // Zero beyond the degree.
    Rational coefficient(std::size_t i) const;
    // Throws std::domain_error on the zero polynomial.
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;
    int sign_at(const Rational& x) const { return (*this)(x).sign(); }

    Polynomial derivative() const;
    // p(x + k), by iterated synthetic division (Taylor shift).
    Polynomial shifted(const Rational& k) const;

    bool has_integer_coefficients() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(Polynomial lhs, const Rational& c) { return lhs *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial rhs) { return rhs *= c; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

struct PolyDivision {
    Polynomial quotient;
    Polynomial remainder;
};

// Euclidean division over the rationals. Throws std::domain_error when b is zero.
PolyDivision divmod(const Polynomial& a, const Polynomial& b);

// a / b; throws ConsistencyError if the remainder is nonzero.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

// Positive rational c such that p / c has coprime integer coefficients.
// The content of the zero polynomial is 0.
Rational content(const Polynomial& p);

// p / content(p): integer coefficients with gcd 1 and the sign of p kept.
Polynomial primitive_part(const Polynomial& p);

// Greatest common divisor, normalized to a primitive integer polynomial with
// positive leading coefficient. gcd(0, 0) = 0. Computed on integer
// polynomials by the subresultant remainder sequence.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// q(x) = p(x + k).
Polynomial poly_shift(const Polynomial& p, const Integer& k);

// Square-free part, primitive with positive leading coefficient.
Polynomial square_free_part(const Polynomial& p);

// "7*x - 1", "2*x^2 + 8*x + 8", "0".
std::string to_string(const Polynomial& p, std::string_view var = "x");

}  // namespace seqcert::exact
