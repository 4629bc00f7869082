#include "int_poly.hpp"

#include <boost/multiprecision/integer.hpp>

#include <utility>

namespace seqcert::exact::detail {

void trim(IntPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

Integer content(const IntPoly& p)
{
    Integer g = 0;
    for (const auto& c : p) {
        if (c == 0) continue;
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return abs(g);
}

IntPoly divide_by(const IntPoly& p, const Integer& c)
{
    IntPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] / c;
    return out;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b)
{
    const int db = degree(b);
    IntPoly r = a;
    if (degree(r) < db) return r;
    const Integer& lb = b.back();
    int steps = degree(a) - db + 1;
    while (!r.empty() && degree(r) >= db) {
        const Integer lr = r.back();
        const int shift = degree(r) - db;
        for (auto& c : r) c *= lb;
        for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + shift)] -= lr * b[static_cast<std::size_t>(i)];
        trim(r);
        --steps;
    }
    if (steps > 0) {
        const Integer f = boost::multiprecision::pow(lb, static_cast<unsigned>(steps));
        for (auto& c : r) c *= f;
    }
    return r;
}

IntPoly gcd(IntPoly a, IntPoly b)
{
    trim(a);
    trim(b);
    if (degree(a) < degree(b)) std::swap(a, b);
    if (b.empty()) {
        if (a.empty()) return a;
        IntPoly out = divide_by(a, content(a));
        if (out.back() < 0)
            for (auto& c : out) c = -c;
        return out;
    }
    const Integer ca = content(a);
    const Integer cb = content(b);
    a = divide_by(a, ca);
    b = divide_by(b, cb);

    Integer g = 1;
    Integer h = 1;
    for (;;) {
        const int delta = degree(a) - degree(b);
        IntPoly r = pseudo_remainder(a, b);
        if (r.empty()) break;
        if (degree(r) == 0) {
            b = IntPoly{Integer(1)};
            break;
        }
        a = std::move(b);
        const Integer divisor = g * boost::multiprecision::pow(h, static_cast<unsigned>(delta));
        b = divide_by(r, divisor);
        g = a.back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = boost::multiprecision::pow(g, static_cast<unsigned>(delta))
                / boost::multiprecision::pow(h, static_cast<unsigned>(delta - 1));
        }
    }
    IntPoly out = divide_by(b, content(b));
    if (out.back() < 0)
        for (auto& c : out) c = -c;
    return out;
}

IntPoly to_int_poly(const Polynomial& p, Integer* scale)
{
    Integer lcm = 1;
    for (const auto& c : p.coefficients()) {
        const Integer d = denominator_of(c);
        if (d != 1) lcm = boost::multiprecision::lcm(lcm, d);
    }
    IntPoly out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients())
        out.push_back(numerator_of(c) * (lcm / denominator_of(c)));
    if (scale) *scale = lcm;
    return out;
}

Polynomial from_int_poly(const IntPoly& p)
{
    std::vector<Rational> coeffs(p.begin(), p.end());
    return Polynomial(std::move(coeffs));
}

}  // namespace seqcert::exact::detail
