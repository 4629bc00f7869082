#pragma once

#include "seqcert/exact/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace seqcert::exact {

inline constexpr std::size_t kDefaultSeriesOrder = 64;

// Power series truncated at x^order: exactly `order` coefficients are kept
// and all arithmetic is polynomial arithmetic modulo x^order.
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order = kDefaultSeriesOrder);
    PowerSeries(std::vector<Rational> coefficients, std::size_t order);
    PowerSeries(const Polynomial& p, std::size_t order);

    std::size_t order() const { return coeffs_.size(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }

    PowerSeries& operator+=(const PowerSeries& rhs);
    PowerSeries& operator-=(const PowerSeries& rhs);
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    // Truncated to the smaller of the two orders.
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

// t with t^2 = s mod x^N. Requires s[0] == 1 (std::domain_error otherwise).
PowerSeries series_sqrt(const PowerSeries& s);
// t with t^2 * s = 1 mod x^N. Requires s[0] == 1 (std::domain_error otherwise).
PowerSeries series_inv_sqrt(const PowerSeries& s);
// 1/s mod x^N. Requires s[0] != 0.
PowerSeries series_inverse(const PowerSeries& s);

}  // namespace seqcert::exact
