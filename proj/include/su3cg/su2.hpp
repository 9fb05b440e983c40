#pragma once

#include <tuple>
#include <vector>

#include "su3cg/surd.hpp"

namespace su3 {

// Exact SU(2) Clebsch-Gordan coefficient <j1 m1 j2 m2 | J M> in the
// Condon-Shortley convention (I+- matrix elements non-negative,
// C(j1,j1,j2,J-j1;J,J) > 0). Returns zero when the triangle rule or
// M-conservation fails. All arguments must be half-integral with
// |m| <= j and j - m integral, else MalformedKey.
//
// Computed with the standard finite alternating sum over exact factorials:
// the sum is rational and the prefactor a single square root, so the result
// stays a SurdValue. Memoized; safe for concurrent callers.
SurdValue su2_cgc(const Rational& j1, const Rational& m1, const Rational& j2,
                  const Rational& m2, const Rational& J, const Rational& M);

// All nonzero coefficients with m1 + m2 = M for fixed (j1, j2, J, M),
// as (m1, m2, value) with m1 descending. Throws TriangleViolation when
// |j1-j2| <= J <= j1+j2 fails.
std::vector<std::tuple<Rational, Rational, SurdValue>> su2_couplings(
    const Rational& j1, const Rational& j2, const Rational& J,
    const Rational& M);

}  // namespace su3
