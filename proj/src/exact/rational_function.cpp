#include "seqcert/exact/rational_function.hpp"

#include "int_poly.hpp"

#include <boost/multiprecision/integer.hpp>

#include <stdexcept>

namespace seqcert::exact {

RationalFunction::RationalFunction(const Rational& c)
    : RationalFunction(Polynomial::constant(c))
{
}

RationalFunction::RationalFunction(Polynomial p)
    : RationalFunction(from_coprime(std::move(p), Polynomial::constant(1)))
{
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
{
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (!num.is_zero()) {
        const Polynomial g = gcd(num, den);
        if (g.degree() > 0) {
            num = exact_quotient(num, g);
            den = exact_quotient(den, g);
        }
    }
    *this = from_coprime(std::move(num), std::move(den));
}

RationalFunction RationalFunction::from_coprime(Polynomial num, Polynomial den)
{
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) return RationalFunction(Canonical{}, Polynomial{}, Polynomial::constant(1));

    Integer num_scale, den_scale;
    auto n = detail::to_int_poly(num, &num_scale);
    auto d = detail::to_int_poly(den, &den_scale);
    // num/den = (n/num_scale) / (d/den_scale) = (n*den_scale) / (d*num_scale)
    const Integer g = boost::multiprecision::gcd(num_scale, den_scale);
    const Integer ns = den_scale / g;
    const Integer ds = num_scale / g;
    if (ns != 1)
        for (auto& c : n) c *= ns;
    if (ds != 1)
        for (auto& c : d) c *= ds;
    Integer common = boost::multiprecision::gcd(detail::content(n), detail::content(d));
    if (d.back() < 0) common = -common;
    if (common != 1) {
        n = detail::divide_by(n, common);
        d = detail::divide_by(d, common);
    }
    return RationalFunction(Canonical{}, detail::from_int_poly(n), detail::from_int_poly(d));
}

Rational RationalFunction::operator()(const Rational& x) const
{
    const Rational d = den_(x);
    if (d == 0) throw std::domain_error("rational function evaluated at a pole");
    return num_(x) / d;
}

RationalFunction RationalFunction::derivative() const
{
    if (num_.is_constant() && den_.is_constant()) return {};
    Polynomial n = num_.derivative() * den_ - num_ * den_.derivative();
    if (n.is_zero()) return {};
    // gcd(num', den) divides the repeated factors of den only, so reduce
    // against den first and square afterwards.
    const Polynomial g = gcd(n, den_);
    Polynomial d = den_;
    if (g.degree() > 0) {
        n = exact_quotient(n, g);
        d = exact_quotient(d, g);
    }
    return RationalFunction(std::move(n), d * den_);
}

RationalFunction RationalFunction::shifted(const Integer& s) const
{
    // An integer shift preserves integrality, content, coprimality and the
    // leading coefficients.
    return RationalFunction(Canonical{}, poly_shift(num_, s), poly_shift(den_, s));
}

RationalFunction RationalFunction::reciprocal() const
{
    if (is_zero()) throw std::domain_error("reciprocal of the zero rational function");
    if (num_.leading() < 0) return RationalFunction(Canonical{}, -den_, -num_);
    return RationalFunction(Canonical{}, den_, num_);
}

RationalFunction RationalFunction::operator-() const
{
    return RationalFunction(Canonical{}, -num_, den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    const Polynomial g = gcd(a.den_, b.den_);
    if (g.degree() <= 0) {
        // Coprime denominators: only the new numerator can share factors
        // with neither of them, so the sum is already reduced.
        return RationalFunction::from_coprime(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    const Polynomial ad = exact_quotient(a.den_, g);
    const Polynomial bd = exact_quotient(b.den_, g);
    Polynomial num = a.num_ * bd + b.num_ * ad;
    // Any common factor of num and ad*bd*g must divide g.
    Polynomial den = ad * b.den_;
    if (num.is_zero()) return {};
    const Polynomial h = gcd(num, g);
    if (h.degree() > 0) {
        num = exact_quotient(num, h);
        den = exact_quotient(den, h);
    }
    return RationalFunction::from_coprime(std::move(num), std::move(den));
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    Polynomial an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    const Polynomial g1 = gcd(an, bd);
    if (g1.degree() > 0) {
        an = exact_quotient(an, g1);
        bd = exact_quotient(bd, g1);
    }
    const Polynomial g2 = gcd(bn, ad);
    if (g2.degree() > 0) {
        bn = exact_quotient(bn, g2);
        ad = exact_quotient(ad, g2);
    }
    return RationalFunction::from_coprime(an * bn, ad * bd);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
{
    if (b.is_zero()) throw std::domain_error("division by the zero rational function");
    return a * b.reciprocal();
}

RationalFunction ratfunc_arith(const RationalFunction& a, const RationalFunction& b, ArithOp op)
{
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    }
    throw std::invalid_argument("unknown arithmetic operation");
}

std::string to_string(const RationalFunction& f, std::string_view var)
{
    if (f.den() == Polynomial::constant(1)) return to_string(f.num(), var);
    return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

}  // namespace seqcert::exact
