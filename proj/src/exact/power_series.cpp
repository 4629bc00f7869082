#include "seqcert/exact/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace seqcert::exact {

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order) {}

PowerSeries::PowerSeries(std::vector<Rational> coefficients, std::size_t order)
    : coeffs_(std::move(coefficients))
{
    coeffs_.resize(order);
}

PowerSeries::PowerSeries(const Polynomial& p, std::size_t order) : coeffs_(order)
{
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < std::min(order, c.size()); ++i) coeffs_[i] = c[i];
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs)
{
    coeffs_.resize(std::min(order(), rhs.order()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs)
{
    coeffs_.resize(std::min(order(), rhs.order()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return PowerSeries(std::move(out), n);
}

PowerSeries series_sqrt(const PowerSeries& s)
{
    if (s.order() == 0) return s;
    if (s[0] != 1) throw std::domain_error("series_sqrt needs constant term 1");
    // t^2 = s: 2 t_0 t_n + sum_{k=1}^{n-1} t_k t_{n-k} = s_n with t_0 = 1.
    std::vector<Rational> t(s.order());
    t[0] = 1;
    for (std::size_t n = 1; n < t.size(); ++n) {
        Rational acc = s[n];
        for (std::size_t k = 1; k < n; ++k) acc -= t[k] * t[n - k];
        t[n] = acc / 2;
    }
    return PowerSeries(std::move(t), s.order());
}

PowerSeries series_inv_sqrt(const PowerSeries& s)
{
    if (s.order() == 0) return s;
    if (s[0] != 1) throw std::domain_error("series_inv_sqrt needs constant term 1");
    // u = s^a with a = -1/2 satisfies s u' = a s' u, which gives
    //   n u_n = sum_{k=1}^{n} ((a + 1) k - n) s_k u_{n-k}   (s_0 = 1).
    const Rational a(-1, 2);
    std::vector<Rational> u(s.order());
    u[0] = 1;
    for (std::size_t n = 1; n < u.size(); ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (s[k] == 0) continue;
            acc += ((a + 1) * static_cast<long>(k) - static_cast<long>(n)) * s[k] * u[n - k];
        }
        u[n] = acc / static_cast<long>(n);
    }
    return PowerSeries(std::move(u), s.order());
}

PowerSeries series_inverse(const PowerSeries& s)
{
    if (s.order() == 0) return s;
    if (s[0] == 0) throw std::domain_error("series_inverse needs a nonzero constant term");
    std::vector<Rational> u(s.order());
    u[0] = 1 / s[0];
    for (std::size_t n = 1; n < u.size(); ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += s[k] * u[n - k];
        u[n] = -acc / s[0];
    }
    return PowerSeries(std::move(u), s.order());
}

}  // namespace seqcert::exact
