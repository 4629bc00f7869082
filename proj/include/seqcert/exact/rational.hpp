#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace seqcert::exact {

// GMP-backed integers and rationals. Expression templates are disabled so
// that `auto` always yields a value.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

// Throws ConsistencyError when q is not integral.
Integer to_integer(const Rational& q, std::string_view what = "value");

// Accepts "p", "-p", "p/q" with q != 0. Anything else (including decimal
// points and exponents) throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

// Fixed-point rendering with `digits` fractional digits, rounded half to
// even. The rounding is done on exact integers.
std::string to_decimal(const Rational& q, int digits);

// Exact sign: -1, 0 or 1.
inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const Integer& z) { return z.sign(); }

inline std::strong_ordering compare(const Rational& a, const Rational& b)
{
    const int c = a.compare(b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Integer binomial(long n, long k);

Integer ipow(const Integer& base, unsigned exponent);
Rational rpow(const Rational& base, unsigned exponent);

}  // namespace seqcert::exact
