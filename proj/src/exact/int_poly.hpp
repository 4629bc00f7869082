#pragma once

// Integer-coefficient polynomial kernels used internally by gcd and Sturm
// sequence code. Vectors are little-endian and trimmed (no trailing zeros).

#include "seqcert/exact/polynomial.hpp"

#include <vector>

namespace seqcert::exact::detail {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p);
int degree(const IntPoly& p);
Integer content(const IntPoly& p);  // nonnegative
IntPoly divide_by(const IntPoly& p, const Integer& c);

// lc(b)^(deg a - deg b + 1) * a  mod  b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

// Primitive gcd with positive leading coefficient.
IntPoly gcd(IntPoly a, IntPoly b);

// Requires integer coefficients after scaling by the common denominator;
// returns (integer polynomial, positive scale) with p = result / scale.
IntPoly to_int_poly(const Polynomial& p, Integer* scale = nullptr);
Polynomial from_int_poly(const IntPoly& p);

}  // namespace seqcert::exact::detail
