#pragma once

// Exhaustive enumerators. Every count here comes from walking the objects
// one at a time, so they stay independent of the recursions they check.

#include "seqcert/exact/rational.hpp"

#include <map>
#include <string_view>
#include <vector>

namespace seqcert::oracle {

using exact::Integer;

// Largest size each enumerator accepts. Larger requests throw BudgetExceeded.
struct Budget {
    int dyck = 14;
    int motzkin = 16;
    int secondary = 18;
    int lattice = 10;
    int set_family = 9;
};

struct DyckCount {
    Integer count;
    // number of peaks -> paths with that many peaks
    std::map<int, Integer> peaks;
};

// Paths (0,0) -> (2n,0) with steps U, D never below the axis.
DyckCount enum_dyck(int n, const Budget& budget = {});
// As above with an extra flat step, length n.
Integer enum_motzkin(int n, const Budget& budget = {});
// Non-crossing sets of pairwise disjoint arcs (i,j) on [n] with j - i > l.
// For l = -1 an arc may also be a loop at a single vertex.
Integer enum_secondary(int l, int n, const Budget& budget = {});
// King's paths (0,0) -> (n,n) with steps E, N, and diagonal.
Integer enum_delannoy(int n, const Budget& budget = {});
// King's paths that never rise above the diagonal.
Integer enum_schroeder(int n, const Budget& budget = {});
// Entry k counts permutations of [n] with k cycles, k = 0..n.
std::vector<Integer> enum_permutations_by_cycles(int n, const Budget& budget = {});
// Entry k counts set partitions of [n] into k blocks, k = 0..n.
std::vector<Integer> enum_partitions_by_blocks(int n, const Budget& budget = {});

}  // namespace seqcert::oracle
