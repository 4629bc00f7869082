#include "seqcert/exact/polynomial.hpp"

#include "int_poly.hpp"
#include "seqcert/errors.hpp"

#include <stdexcept>

namespace seqcert::exact {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients)
{
    trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree)
{
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::linear(const Rational& c0, const Rational& c1)
{
    return Polynomial(std::vector<Rational>{c0, c1});
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& Polynomial::leading() const
{
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(const Rational& k) const
{
    if (k == 0 || coeffs_.size() <= 1) return *this;
    std::vector<Rational> c = coeffs_;
    const std::size_t n = c.size() - 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = n - 1 + 1; j-- > i;) c[j] += k * c[j + 1];
    return Polynomial(std::move(c));
}

bool Polynomial::has_integer_coefficients() const
{
    for (const auto& c : coeffs_)
        if (!is_integer(c)) return false;
    return true;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs)
{
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    if (lhs.has_integer_coefficients() && rhs.has_integer_coefficients()) {
        // Integer fast path: accumulate in mpz and convert once.
        std::vector<Integer> acc(out.size());
        std::vector<Integer> a(lhs.coeffs_.size()), b(rhs.coeffs_.size());
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = numerator_of(lhs.coeffs_[i]);
        for (std::size_t j = 0; j < b.size(); ++j) b[j] = numerator_of(rhs.coeffs_[j]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += a[i] * b[j];
        }
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = Rational(acc[k]);
    } else {
        for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
                out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

PolyDivision divmod(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<Rational> r = a.coefficients();
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const auto& bc = b.coefficients();
    const Rational& lb = b.leading();
    const std::size_t db = bc.size() - 1;
    for (std::size_t k = q.size(); k-- > 0;) {
        const Rational factor = r[k + db] / lb;
        q[k] = factor;
        if (factor == 0) continue;
        for (std::size_t i = 0; i <= db; ++i) r[k + i] -= factor * bc[i];
    }
    r.resize(db);
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw ConsistencyError("polynomial division is not exact");
    return q;
}

Rational content(const Polynomial& p)
{
    if (p.is_zero()) return 0;
    Integer scale;
    const auto ip = detail::to_int_poly(p, &scale);
    return Rational(detail::content(ip), scale);
}

Polynomial primitive_part(const Polynomial& p)
{
    if (p.is_zero()) return p;
    const auto ip = detail::to_int_poly(p);
    return detail::from_int_poly(detail::divide_by(ip, detail::content(ip)));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b)
{
    return detail::from_int_poly(detail::gcd(detail::to_int_poly(a), detail::to_int_poly(b)));
}

Polynomial poly_shift(const Polynomial& p, const Integer& k) { return p.shifted(Rational(k)); }

Polynomial square_free_part(const Polynomial& p)
{
    if (p.is_zero()) return p;
    const Polynomial g = gcd(p, p.derivative());
    Polynomial q = primitive_part(exact_quotient(p, g));
    if (q.leading() < 0) q = -q;
    return q;
}

std::string to_string(const Polynomial& p, std::string_view var)
{
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        const bool negative = c[i] < 0;
        const Rational mag = negative ? Rational(-c[i]) : c[i];
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const bool unit = mag == 1 && i > 0;
        if (!unit) out += exact::to_string(mag);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace seqcert::exact
