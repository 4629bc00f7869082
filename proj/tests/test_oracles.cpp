#include "doctest.h"

#include "seqcert/errors.hpp"
#include "seqcert/oracles/oracles.hpp"
#include "seqcert/sequences/sequences.hpp"

using namespace seqcert::oracle;
namespace seq = seqcert::seq;

TEST_CASE("Dyck enumeration")
{
    const auto d3 = enum_dyck(3);
    CHECK(d3.count == 5);
    CHECK(d3.peaks == std::map<int, Integer>{{1, 1}, {2, 3}, {3, 1}});
    const auto d0 = enum_dyck(0);
    CHECK(d0.count == 1);
    CHECK(d0.peaks == std::map<int, Integer>{{0, 1}});
    const auto c = seq::catalan(12);
    for (int n = 0; n <= 12; ++n) {
        const auto d = enum_dyck(n);
        CHECK(d.count == c.integer_at(n));
        Integer total = 0;
        for (const auto& [k, v] : d.peaks) {
            CHECK(v == seq::narayana(n, k));
            total += v;
        }
        CHECK(total == d.count);
    }
}

TEST_CASE("Motzkin enumeration")
{
    CHECK(enum_motzkin(4) == 9);
    CHECK(enum_motzkin(0) == 1);
    const auto m = seq::motzkin_short(14);
    for (int n = 0; n <= 14; ++n) CHECK(enum_motzkin(n) == m.integer_at(n));
}

TEST_CASE("secondary structure enumeration")
{
    CHECK(enum_secondary(1, 6) == 17);
    CHECK(enum_secondary(0, 5) == 21);
    for (int n = 0; n <= 8; ++n) {
        CHECK(enum_secondary(n, n) == 1);
        CHECK(enum_secondary(n + 3, n) == 1);
    }
    const auto s1 = seq::sec_struct_rank1(16);
    for (int n = 0; n <= 16; ++n) CHECK(enum_secondary(1, n) == s1.integer_at(n));
    const auto m = seq::motzkin_short(14);
    for (int n = 0; n <= 14; ++n) CHECK(enum_secondary(0, n) == m.integer_at(n));
    for (int l = 2; l <= 4; ++l) {
        const auto s = seq::sec_struct_general(l, 14);
        for (int n = 0; n <= 14; ++n) CHECK(enum_secondary(l, n) == s.integer_at(n));
    }
}

TEST_CASE("rank -1 counts Catalan numbers shifted by one")
{
    // loops allowed: n vertices give C_{n+1}
    const auto c = seq::catalan(13);
    for (int n = 0; n <= 12; ++n) CHECK(enum_secondary(-1, n) == c.integer_at(n + 1));
    CHECK_THROWS_AS(enum_secondary(-2, 3), std::invalid_argument);
}

TEST_CASE("lattice paths")
{
    CHECK(enum_delannoy(2) == 13);
    CHECK(enum_schroeder(2) == 6);
    CHECK(enum_delannoy(0) == 1);
    CHECK(enum_schroeder(0) == 1);
    CHECK(enum_schroeder(1) == 2);
    const auto d = seq::delannoy(10);
    const auto r = seq::schroeder(10);
    for (int n = 0; n <= 10; ++n) {
        CHECK(enum_delannoy(n) == d.integer_at(n));
        CHECK(enum_schroeder(n) == r.integer_at(n));
    }
}

TEST_CASE("permutations and partitions")
{
    CHECK(enum_permutations_by_cycles(4) == std::vector<Integer>{0, 6, 11, 6, 1});
    CHECK(enum_partitions_by_blocks(4) == std::vector<Integer>{0, 1, 7, 6, 1});
    CHECK(enum_permutations_by_cycles(1) == std::vector<Integer>{0, 1});
    CHECK(enum_partitions_by_blocks(1) == std::vector<Integer>{0, 1});
    const auto s1 = seq::stirling1(9);
    const auto s2 = seq::stirling2(9);
    for (int n = 0; n <= 9; ++n) {
        CHECK(enum_permutations_by_cycles(n) == s1[static_cast<std::size_t>(n)]);
        CHECK(enum_partitions_by_blocks(n) == s2[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("budgets are enforced and configurable")
{
    CHECK_THROWS_AS(enum_dyck(15), seqcert::BudgetExceeded);
    CHECK_THROWS_AS(enum_motzkin(17), seqcert::BudgetExceeded);
    CHECK_THROWS_AS(enum_secondary(1, 19), seqcert::BudgetExceeded);
    CHECK_THROWS_AS(enum_delannoy(11), seqcert::BudgetExceeded);
    CHECK_THROWS_AS(enum_partitions_by_blocks(10), seqcert::BudgetExceeded);
    Budget small;
    small.motzkin = 3;
    CHECK_THROWS_AS(enum_motzkin(4, small), seqcert::BudgetExceeded);
    Budget big;
    big.set_family = 10;
    CHECK(enum_partitions_by_blocks(10, big)[3] == 9330);
}
