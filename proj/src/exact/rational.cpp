#include "seqcert/exact/rational.hpp"

#include "seqcert/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace seqcert::exact {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!is_integer_literal(s))
        throw std::invalid_argument("not an integer literal: '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s));
}

}  // namespace

Integer to_integer(const Rational& q, std::string_view what)
{
    if (!is_integer(q))
        throw ConsistencyError(std::string(what) + " is not an integer: " + to_string(q));
    return numerator_of(q);
}

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-')
        throw std::invalid_argument("denominator must be positive: '" + std::string(text) + "'");
    Integer den = parse_integer(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& q)
{
    if (is_integer(q)) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

std::string to_decimal(const Rational& q, int digits)
{
    if (digits < 0) throw std::invalid_argument("negative digit count");
    const Integer scale = ipow(Integer(10), static_cast<unsigned>(digits));
    const Integer num = abs(numerator_of(q)) * scale;
    const Integer den = denominator_of(q);
    Integer quot = num / den;
    const Integer twice_rem = 2 * (num - quot * den);
    if (twice_rem > den || (twice_rem == den && quot % 2 == 1)) quot += 1;

    std::string body = quot.str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits))
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    if (q.sign() < 0 && quot != 0) body.insert(0, "-");
    return body;
}

Integer binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n) return Integer(0);
    if (k > n - k) k = n - k;
    Integer result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

Integer ipow(const Integer& base, unsigned exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

Rational rpow(const Rational& base, unsigned exponent)
{
    return Rational(ipow(numerator_of(base), exponent), ipow(denominator_of(base), exponent));
}

}  // namespace seqcert::exact
