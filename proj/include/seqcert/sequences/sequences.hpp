#pragma once

// Exact engines for the integer (and rational) sequences: binomial rows,
// Catalan and Narayana numbers, Stirling triangles, Motzkin numbers by four
// routes, secondary-structure numbers, Legendre values, central Delannoy
// and big Schroeder numbers.

#include "seqcert/exact/polynomial.hpp"
#include "seqcert/sequences/sequence_table.hpp"

#include <vector>

namespace seqcert::seq {

// binom(n, k), k = 0..n.
SequenceTable binomial_row(int n);
// C_0..C_{n_max} from the closed form binom(2n,n)/(n+1).
SequenceTable catalan(int n_max);
// N(n,k) = binom(n,k) binom(n,k-1) / n for 1 <= k <= n, N(0,0) = 1, zero
// elsewhere. A non-exact division throws ConsistencyError.
Integer narayana(int n, int k);
// N(n,k), k = 1..n (the single entry N(0,0) for n = 0).
SequenceTable narayana_row(int n);

// Rows 0..n_max; row n holds k = 0..n.
using Triangle = std::vector<std::vector<Integer>>;
// c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k): unsigned Stirling numbers of the first kind.
Triangle stirling1(int n_max);
// S(n,k) = S(n-1,k-1) + k S(n-1,k).
Triangle stirling2(int n_max);
// Row n of a triangle restricted to k = 1..n (k = 0 for n = 0).
SequenceTable triangle_row(const Triangle& t, int n, std::string name);
// P_n(x) = sum_k S(n,k) x^k.
exact::Polynomial bell_poly_coeffs(int n);

// (n+2) M_n = (2n+1) M_{n-1} + 3(n-1) M_{n-2}, M_0 = M_1 = 1.
SequenceTable motzkin_short(int n_max);
// M_{n+1} = M_n + sum_{k=0}^{n-1} M_k M_{n-1-k}.
SequenceTable motzkin_long(int n_max);
// M_n = sum_k binom(n, 2k) C_k.
SequenceTable motzkin_via_catalan(int n_max);
// C_{n+1} = sum_k binom(n, k) M_k, so the table holds C_0..C_{n_max}.
SequenceTable catalan_via_motzkin(int n_max);

// (n+2) S(n) = (2n+1) S(n-1) + (n-1) S(n-2) + (2n-5) S(n-3) - (n-4) S(n-4),
// S(0) = S(1) = S(2) = 1, S(3) = 2.
SequenceTable sec_struct_rank1(int n_max);
// Last-vertex decomposition
//   S(n+1) = S(n) + sum_{j=1}^{n-l} S(j-1) S(n-j),  S(0) = 1,
// for rank l >= 0. Tagged derived-recursion; validated against the
// enumeration oracle in the test suite.
SequenceTable sec_struct_general(int l, int n_max);

// Bonnet: P_n(t) = ((2n-1)/n) t P_{n-1}(t) - ((n-1)/n) P_{n-2}(t), P_0 = 1, P_1 = t.
SequenceTable legendre_values(const Rational& t, int n_max);
// D(n) = P_n(3); throws ConsistencyError if a value is not an integer.
SequenceTable delannoy(int n_max);
// (n+1) r_n = 3(2n-1) r_{n-1} - (n-2) r_{n-2}, r_0 = 1, r_1 = 2.
// Tagged derived-recursion.
SequenceTable schroeder(int n_max);

}  // namespace seqcert::seq
