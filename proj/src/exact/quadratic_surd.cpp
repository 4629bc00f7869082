#include "seqcert/exact/quadratic_surd.hpp"

#include <boost/multiprecision/integer.hpp>

#include <stdexcept>

namespace seqcert::exact {

bool is_square_free(const Integer& d)
{
    if (d < 1) return false;
    Integer rest = d;
    for (Integer p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            rest /= p;
            if (rest % p == 0) return false;
        }
    }
    return true;
}

QuadraticSurd::QuadraticSurd(Rational a, Rational b, Integer d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d))
{
    if (!is_square_free(d_)) throw std::invalid_argument("radicand must be positive and square-free");
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
    }
}

QuadraticSurd QuadraticSurd::rational(const Rational& a) { return {a, Rational(0), Integer(1)}; }

std::strong_ordering surd_compare(const Rational& q, const QuadraticSurd& s)
{
    // sign(q - s) = sign(u - b sqrt d) with u = q - a.
    const Rational u = q - s.a();
    const Rational& b = s.b();
    if (b == 0) return compare(u, Rational(0));
    const Rational lhs = u * u;
    const Rational rhs = b * b * Rational(s.d());
    if (b > 0) {
        if (u <= 0) return std::strong_ordering::less;
        // u > 0 and b sqrt d > 0: compare squares.
        return compare(lhs, rhs);
    }
    if (u >= 0) return std::strong_ordering::greater;
    // Both negative: the larger square is the smaller number.
    return compare(rhs, lhs);
}

Integer surd_floor_scaled(const QuadraticSurd& s, int digits)
{
    const Integer scale = ipow(Integer(10), static_cast<unsigned>(digits));
    // s * scale = A + B sqrt(d) with A = a*scale, B = b*scale.
    // Work over a common denominator m: s*scale = (P + Q sqrt d)/m.
    const Rational A = s.a() * scale;
    const Rational B = s.b() * scale;
    const Integer m = boost::multiprecision::lcm(denominator_of(A), denominator_of(B));
    const Integer P = numerator_of(A) * (m / denominator_of(A));
    const Integer Q = numerator_of(B) * (m / denominator_of(B));
    // floor(Q sqrt d) = sign(Q) * isqrt(Q^2 d), adjusted downward when negative and inexact.
    const Integer sq = Q * Q * s.d();
    Integer root = boost::multiprecision::sqrt(sq);
    Integer qsqrt = Q >= 0 ? root : Integer(-root);
    if (Q < 0 && root * root != sq) qsqrt -= 1;
    // floor((P + x)/m) where floor(x) = qsqrt and x is irrational unless exact:
    // floor((P + x)/m) = floor((P + floor(x))/m) for integers P, m > 0.
    Integer num = P + qsqrt;
    Integer result = num / m;
    if (num % m != 0 && num < 0) result -= 1;
    return result;
}

std::string QuadraticSurd::to_decimal(int digits) const
{
    Integer scaled = surd_floor_scaled(*this, digits);
    const bool negative = scaled < 0;
    std::string body = (negative ? Integer(-scaled) : scaled).str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits))
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    return negative ? "-" + body : body;
}

QuadraticSurd golden_ratio() { return {Rational(1, 2), Rational(1, 2), Integer(5)}; }
QuadraticSurd golden_ratio_squared() { return {Rational(3, 2), Rational(1, 2), Integer(5)}; }

}  // namespace seqcert::exact
