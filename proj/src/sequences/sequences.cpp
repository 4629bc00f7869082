#include "seqcert/sequences/sequences.hpp"

#include "seqcert/errors.hpp"

#include <stdexcept>

namespace seqcert::seq {

namespace {

Integer exact_div(const Integer& a, const Integer& d, const char* what, int n)
{
    if (a % d != 0)
        throw ConsistencyError(std::string(what) + ": non-exact division at n = " + std::to_string(n));
    return a / d;
}

void require_nonnegative(int n, const char* what)
{
    if (n < 0) throw std::invalid_argument(std::string(what) + ": negative size");
}

SequenceTable make_table(std::string name, const std::vector<Integer>& values, int start, Provenance p)
{
    SequenceTable t{std::move(name), {}, start, p};
    t.values.reserve(values.size());
    for (const auto& v : values) t.values.emplace_back(v);
    return t;
}

std::vector<Integer> catalan_values(int n_max)
{
    std::vector<Integer> c(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        c[static_cast<std::size_t>(n)] = exact_div(exact::binomial(2 * n, n), n + 1, "catalan", n);
    return c;
}

}  // namespace

SequenceTable binomial_row(int n)
{
    require_nonnegative(n, "binomial_row");
    std::vector<Integer> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (int k = 1; k <= n; ++k)
        row[static_cast<std::size_t>(k)] = exact_div(row[static_cast<std::size_t>(k - 1)] * (n - k + 1), k, "binomial_row", k);
    return make_table("binomial(" + std::to_string(n) + ")", row, 0, Provenance::closed_form);
}

SequenceTable catalan(int n_max)
{
    require_nonnegative(n_max, "catalan");
    return make_table("catalan", catalan_values(n_max), 0, Provenance::closed_form);
}

Integer narayana(int n, int k)
{
    if (n == 0 && k == 0) return 1;
    if (n < 1 || k < 1 || k > n) return 0;
    return exact_div(exact::binomial(n, k) * exact::binomial(n, k - 1), n, "narayana", n);
}

SequenceTable narayana_row(int n)
{
    require_nonnegative(n, "narayana_row");
    if (n == 0) return make_table("narayana(0)", {Integer(1)}, 0, Provenance::closed_form);
    std::vector<Integer> row;
    for (int k = 1; k <= n; ++k) row.push_back(narayana(n, k));
    return make_table("narayana(" + std::to_string(n) + ")", row, 1, Provenance::closed_form);
}

Triangle stirling1(int n_max)
{
    require_nonnegative(n_max, "stirling1");
    Triangle t(static_cast<std::size_t>(n_max) + 1);
    t[0] = {Integer(1)};
    for (int n = 1; n <= n_max; ++n) {
        const auto& prev = t[static_cast<std::size_t>(n - 1)];
        auto& row = t[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, Integer(0));
        for (int k = 1; k <= n; ++k) {
            Integer v = prev[static_cast<std::size_t>(k - 1)];
            if (k <= n - 1) v += (n - 1) * prev[static_cast<std::size_t>(k)];
            row[static_cast<std::size_t>(k)] = v;
        }
    }
    return t;
}

Triangle stirling2(int n_max)
{
    require_nonnegative(n_max, "stirling2");
    Triangle t(static_cast<std::size_t>(n_max) + 1);
    t[0] = {Integer(1)};
    for (int n = 1; n <= n_max; ++n) {
        const auto& prev = t[static_cast<std::size_t>(n - 1)];
        auto& row = t[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, Integer(0));
        for (int k = 1; k <= n; ++k) {
            Integer v = prev[static_cast<std::size_t>(k - 1)];
            if (k <= n - 1) v += k * prev[static_cast<std::size_t>(k)];
            row[static_cast<std::size_t>(k)] = v;
        }
    }
    return t;
}

SequenceTable triangle_row(const Triangle& t, int n, std::string name)
{
    if (n < 0 || static_cast<std::size_t>(n) >= t.size()) throw std::out_of_range("triangle row out of range");
    const auto& row = t[static_cast<std::size_t>(n)];
    if (n == 0) return make_table(std::move(name), {row[0]}, 0, Provenance::short_recursion);
    return make_table(std::move(name), std::vector<Integer>(row.begin() + 1, row.end()), 1, Provenance::short_recursion);
}

exact::Polynomial bell_poly_coeffs(int n)
{
    require_nonnegative(n, "bell_poly_coeffs");
    const auto t = stirling2(n);
    const auto& row = t[static_cast<std::size_t>(n)];
    return exact::Polynomial(std::vector<Rational>(row.begin(), row.end()));
}

SequenceTable motzkin_short(int n_max)
{
    require_nonnegative(n_max, "motzkin_short");
    std::vector<Integer> m{1};
    if (n_max >= 1) m.push_back(1);
    for (int n = 2; n <= n_max; ++n) {
        const Integer rhs = (2 * n + 1) * m[static_cast<std::size_t>(n - 1)] + 3 * (n - 1) * m[static_cast<std::size_t>(n - 2)];
        m.push_back(exact_div(rhs, n + 2, "motzkin_short", n));
    }
    return make_table("motzkin", m, 0, Provenance::short_recursion);
}

SequenceTable motzkin_long(int n_max)
{
    require_nonnegative(n_max, "motzkin_long");
    std::vector<Integer> m{1};
    for (int n = 0; n + 1 <= n_max; ++n) {
        Integer next = m[static_cast<std::size_t>(n)];
        for (int k = 0; k <= n - 1; ++k) next += m[static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(n - 1 - k)];
        m.push_back(next);
    }
    return make_table("motzkin", m, 0, Provenance::long_recursion);
}

SequenceTable motzkin_via_catalan(int n_max)
{
    require_nonnegative(n_max, "motzkin_via_catalan");
    const auto c = catalan_values(n_max / 2);
    std::vector<Integer> m;
    for (int n = 0; n <= n_max; ++n) {
        Integer sum = 0;
        for (int k = 0; 2 * k <= n; ++k) sum += exact::binomial(n, 2 * k) * c[static_cast<std::size_t>(k)];
        m.push_back(sum);
    }
    return make_table("motzkin", m, 0, Provenance::binomial_identity);
}

SequenceTable catalan_via_motzkin(int n_max)
{
    require_nonnegative(n_max, "catalan_via_motzkin");
    std::vector<Integer> c{1};
    if (n_max >= 1) {
        const auto m = motzkin_short(n_max - 1);
        for (int n = 0; n + 1 <= n_max; ++n) {
            Integer sum = 0;
            for (int k = 0; k <= n; ++k) sum += exact::binomial(n, k) * m.integer_at(k);
            c.push_back(sum);
        }
    }
    return make_table("catalan", c, 0, Provenance::binomial_identity);
}

SequenceTable sec_struct_rank1(int n_max)
{
    require_nonnegative(n_max, "sec_struct_rank1");
    const std::vector<Integer> initial{1, 1, 1, 2};
    std::vector<Integer> s(initial.begin(), initial.begin() + std::min<std::size_t>(initial.size(), static_cast<std::size_t>(n_max) + 1));
    for (int n = 4; n <= n_max; ++n) {
        auto at = [&](int i) -> const Integer& { return s[static_cast<std::size_t>(i)]; };
        const Integer rhs = (2 * n + 1) * at(n - 1) + (n - 1) * at(n - 2) + (2 * n - 5) * at(n - 3) - (n - 4) * at(n - 4);
        s.push_back(exact_div(rhs, n + 2, "sec_struct_rank1", n));
    }
    return make_table("secondary(1)", s, 0, Provenance::short_recursion);
}

SequenceTable sec_struct_general(int l, int n_max)
{
    if (l < 0) throw std::invalid_argument("sec_struct_general: rank must be >= 0");
    require_nonnegative(n_max, "sec_struct_general");
    std::vector<Integer> s{1};
    for (int n = 0; n + 1 <= n_max; ++n) {
        Integer next = s[static_cast<std::size_t>(n)];
        for (int j = 1; j <= n - l; ++j) next += s[static_cast<std::size_t>(j - 1)] * s[static_cast<std::size_t>(n - j)];
        s.push_back(next);
    }
    return make_table("secondary(" + std::to_string(l) + ")", s, 0, Provenance::derived_recursion);
}

SequenceTable legendre_values(const Rational& t, int n_max)
{
    require_nonnegative(n_max, "legendre_values");
    SequenceTable table{"legendre(" + exact::to_string(t) + ")", {Rational(1)}, 0, Provenance::short_recursion};
    if (n_max >= 1) table.values.push_back(t);
    for (int n = 2; n <= n_max; ++n) {
        const auto& p1 = table.values[static_cast<std::size_t>(n - 1)];
        const auto& p2 = table.values[static_cast<std::size_t>(n - 2)];
        table.values.push_back(Rational(2 * n - 1, n) * t * p1 - Rational(n - 1, n) * p2);
    }
    return table;
}

SequenceTable delannoy(int n_max)
{
    SequenceTable t = legendre_values(Rational(3), n_max);
    for (int n = 0; n <= n_max; ++n) (void)t.integer_at(n);
    t.name = "delannoy";
    return t;
}

SequenceTable schroeder(int n_max)
{
    require_nonnegative(n_max, "schroeder");
    std::vector<Integer> r{1};
    if (n_max >= 1) r.push_back(2);
    for (int n = 2; n <= n_max; ++n) {
        const Integer rhs = 3 * (2 * n - 1) * r[static_cast<std::size_t>(n - 1)] - (n - 2) * r[static_cast<std::size_t>(n - 2)];
        r.push_back(exact_div(rhs, n + 1, "schroeder", n));
    }
    return make_table("schroeder", r, 0, Provenance::derived_recursion);
}

}  // namespace seqcert::seq
