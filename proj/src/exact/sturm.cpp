#include "seqcert/exact/sturm.hpp"

#include "int_poly.hpp"

#include <stdexcept>

namespace seqcert::exact {

std::vector<Polynomial> sturm_chain(const Polynomial& p)
{
    if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
    std::vector<detail::IntPoly> chain;
    const Polynomial base = square_free_part(p);
    chain.push_back(detail::to_int_poly(base));
    if (base.degree() > 0) chain.push_back(detail::to_int_poly(primitive_part(base.derivative())));
    while (chain.back().size() > 1) {
        const auto& prev = chain[chain.size() - 2];
        const auto& cur = chain.back();
        detail::IntPoly r = detail::pseudo_remainder(prev, cur);
        if (r.empty()) break;
        // prem = lc^(delta+1) * rem; recover the sign of rem.
        const int exponent = detail::degree(prev) - detail::degree(cur) + 1;
        bool flip = true;  // next = -rem
        if (cur.back() < 0 && exponent % 2 == 1) flip = !flip;
        const Integer c = detail::content(r);
        for (auto& x : r) x = flip ? Integer(-x / c) : Integer(x / c);
        chain.push_back(std::move(r));
    }
    std::vector<Polynomial> out;
    out.reserve(chain.size());
    for (const auto& q : chain) out.push_back(detail::from_int_poly(q));
    return out;
}

int sign_variations(const std::vector<Polynomial>& chain, const Rational& x)
{
    int variations = 0;
    int last = 0;
    for (const auto& q : chain) {
        const int s = q.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

int count_roots_open(const Polynomial& p, const Rational& lo, const Rational& hi)
{
    if (!(lo < hi)) throw std::invalid_argument("count_roots_open needs lo < hi");
    const auto chain = sturm_chain(p);
    // Skipping zeros makes V(lo) equal V(lo+); the root at hi, if any, is
    // counted by V(lo) - V(hi) and removed here.
    const int half_open = sign_variations(chain, lo) - sign_variations(chain, hi);
    return half_open - (p(hi) == 0 ? 1 : 0);
}

int count_roots_closed(const Polynomial& p, const Rational& lo, const Rational& hi)
{
    return count_roots_open(p, lo, hi) + (p(lo) == 0 ? 1 : 0) + (p(hi) == 0 ? 1 : 0);
}

SturmWitness sturm_analyze(const Polynomial& p, const Rational& lo, const Rational& hi)
{
    if (!(lo < hi)) throw std::invalid_argument("sturm_analyze needs lo < hi");
    SturmWitness w;
    w.sample = (lo + hi) / 2;
    if (p.is_zero()) return w;
    const auto chain = sturm_chain(p);
    w.chain_length = static_cast<int>(chain.size());
    w.roots_in_interval = sign_variations(chain, lo) - sign_variations(chain, hi) - (p(hi) == 0 ? 1 : 0);
    w.sample_sign = p.sign_at(w.sample);
    return w;
}

bool sturm_positive_on_interval(const Polynomial& p, const Rational& lo, const Rational& hi)
{
    if (!(lo < hi)) throw std::invalid_argument("sturm_positive_on_interval needs lo < hi");
    if (p.is_zero()) return false;
    const SturmWitness w = sturm_analyze(p, lo, hi);
    return w.roots_in_interval == 0 && w.sample_sign > 0;
}

}  // namespace seqcert::exact
