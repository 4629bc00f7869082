#include "seqcert/oracles/oracles.hpp"

#include "seqcert/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace seqcert::oracle {

namespace {

void check_size(int n, int limit, std::string_view family)
{
    if (n < 0) throw std::invalid_argument(std::string(family) + ": negative size");
    if (n > limit)
        throw BudgetExceeded(std::string(family) + ": n = " + std::to_string(n) + " exceeds budget "
                             + std::to_string(limit));
}

// Counts fit comfortably in 64 bits at every budgeted size.
using Count = std::uint64_t;

struct DyckWalk {
    int length;
    std::vector<Count> peaks;

    void walk(int pos, int height, bool last_up, int peak_count)
    {
        if (pos == length) {
            ++peaks[static_cast<std::size_t>(peak_count)];
            return;
        }
        const int left = length - pos;
        if (height + 1 <= left - 1) walk(pos + 1, height + 1, true, peak_count);
        if (height > 0) walk(pos + 1, height - 1, false, peak_count + (last_up ? 1 : 0));
    }
};

Count motzkin_walk(int left, int height)
{
    if (left == 0) return height == 0 ? 1 : 0;
    Count total = 0;
    if (height + 1 <= left - 1) total += motzkin_walk(left - 1, height + 1);
    if (height <= left - 1) total += motzkin_walk(left - 1, height);
    if (height > 0) total += motzkin_walk(left - 1, height - 1);
    return total;
}

struct ArcWalk {
    int n;
    int l;
    std::vector<int> open;

    Count walk(int v)
    {
        const int left = n - v;
        if (static_cast<int>(open.size()) > left) return 0;
        if (v == n) return 1;
        Count total = walk(v + 1);  // v unpaired
        if (l == -1) total += walk(v + 1);  // loop at v
        if (!open.empty() && v - open.back() > l) {
            const int start = open.back();
            open.pop_back();
            total += walk(v + 1);
            open.push_back(start);
        }
        if (v + l + 1 < n && static_cast<int>(open.size()) + 1 <= left - 1) {
            open.push_back(v);
            total += walk(v + 1);
            open.pop_back();
        }
        return total;
    }
};

Count king_walk(int x, int y, int n, bool below_diagonal)
{
    if (x == n && y == n) return 1;
    Count total = 0;
    if (x < n) total += king_walk(x + 1, y, n, below_diagonal);
    if (y < n && (!below_diagonal || y + 1 <= x)) total += king_walk(x, y + 1, n, below_diagonal);
    if (x < n && y < n) total += king_walk(x + 1, y + 1, n, below_diagonal);
    return total;
}

void partition_walk(int v, int n, int blocks, std::vector<Count>& out)
{
    if (v == n) {
        ++out[static_cast<std::size_t>(blocks)];
        return;
    }
    // restricted growth string: v joins an existing block or opens a new one
    for (int b = 0; b < blocks; ++b) partition_walk(v + 1, n, blocks, out);
    partition_walk(v + 1, n, blocks + 1, out);
}

std::vector<Integer> widen(const std::vector<Count>& v)
{
    return std::vector<Integer>(v.begin(), v.end());
}

}  // namespace

DyckCount enum_dyck(int n, const Budget& budget)
{
    check_size(n, budget.dyck, "dyck");
    DyckWalk w{2 * n, std::vector<Count>(static_cast<std::size_t>(n) + 1, 0)};
    w.walk(0, 0, false, 0);
    DyckCount out{0, {}};
    for (int k = 0; k <= n; ++k) {
        const Count c = w.peaks[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        out.peaks[k] = c;
        out.count += c;
    }
    return out;
}

Integer enum_motzkin(int n, const Budget& budget)
{
    check_size(n, budget.motzkin, "motzkin");
    return motzkin_walk(n, 0);
}

Integer enum_secondary(int l, int n, const Budget& budget)
{
    if (l < -1) throw std::invalid_argument("secondary: rank must be >= -1");
    check_size(n, budget.secondary, "secondary");
    ArcWalk w{n, l, {}};
    return w.walk(0);
}

Integer enum_delannoy(int n, const Budget& budget)
{
    check_size(n, budget.lattice, "delannoy");
    return king_walk(0, 0, n, false);
}

Integer enum_schroeder(int n, const Budget& budget)
{
    check_size(n, budget.lattice, "schroeder");
    return king_walk(0, 0, n, true);
}

std::vector<Integer> enum_permutations_by_cycles(int n, const Budget& budget)
{
    check_size(n, budget.set_family, "permutations");
    std::vector<Count> out(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> seen(static_cast<std::size_t>(n));
    do {
        std::fill(seen.begin(), seen.end(), 0);
        int cycles = 0;
        for (int i = 0; i < n; ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            ++cycles;
            for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)])
                seen[static_cast<std::size_t>(j)] = 1;
        }
        ++out[static_cast<std::size_t>(cycles)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return widen(out);
}

std::vector<Integer> enum_partitions_by_blocks(int n, const Budget& budget)
{
    check_size(n, budget.set_family, "partitions");
    std::vector<Count> out(static_cast<std::size_t>(n) + 1, 0);
    partition_walk(0, n, 0, out);
    return widen(out);
}

}  // namespace seqcert::oracle
