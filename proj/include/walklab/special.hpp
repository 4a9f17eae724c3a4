#pragma once

// Numeric special functions: generalized hypergeometric series (including
// the z = 1 boundary), Gauss' and the cubic AGM, modified Bessel I0/K0,
// Legendre polynomials, inverse sines and Clausen's function.

#include <vector>

#include <gmpxx.h>

#include "walklab/precision.hpp"

namespace walklab {

// pFq parameter lists. Every hypergeometric function in this project has
// rational parameters, so they are kept exact.
struct HypergeometricSpec {
  std::vector<mpq_class> upper;
  std::vector<mpq_class> lower;

  // sum(lower) - sum(upper); the series converges at z = 1 when positive
  // (for p = q + 1).
  mpq_class excess() const;
};

// Sum of the series at real z. |z| < 1 is summed directly; z = 1 is summed
// directly to a cutoff and the tail is taken from its asymptotic expansion.
// Errc::divergence outside the disk or at a non-convergent z = 1,
// Errc::budget_exceeded when the series term cap runs out, Errc::pole for a
// non-positive integer lower parameter.
Real hyp_pfq(const HypergeometricSpec& spec, const Real& z, const PrecisionContext& ctx);

Real agm(const Real& a, const Real& b, const PrecisionContext& ctx);

// 2F1(1/2,1/2;1;m) = 1/AGM(1, sqrt(1-m)), 0 <= m < 1.
Real hyp_2f1_half(const Real& m, const PrecisionContext& ctx);
// Same function evaluated from the complement c = 1 - m, 0 < c <= 1. Keeps
// full relative accuracy as m -> 1.
Real hyp_2f1_half_complement(const Real& c, const PrecisionContext& ctx);

// Borwein cubic AGM: a' = (a+2b)/3, b' = cbrt(b(a^2+ab+b^2)/3).
Real cubic_agm(const Real& a, const Real& b, const PrecisionContext& ctx);
// 2F1(1/3,2/3;1;1-c), 0 < c <= 1, via 1/AG3(1, cbrt(c)).
Real hyp_2f1_third_complement(const Real& c, const PrecisionContext& ctx);

Real bessel_i0(const Real& t, const PrecisionContext& ctx);
Real bessel_k0(const Real& t, const PrecisionContext& ctx);

Real legendre_p(unsigned k, const Real& x, const PrecisionContext& ctx);

Real arcsin(const Real& x, const PrecisionContext& ctx);
Real arccos(const Real& x, const PrecisionContext& ctx);

// Exact Bernoulli number B_n (B_1 = -1/2).
mpq_class bernoulli(unsigned n);

// Cl_2(theta) = sum sin(k theta)/k^2.
Real clausen2(const Real& theta, const PrecisionContext& ctx);

// (x/pi) 3F2(1/2,1/2,1/2; 3/2,3/2; x^2/4) for 0 <= x <= 2, evaluated in
// closed form as (2 phi log x + Cl_2(2 phi))/pi with phi = asin(x/2).
Real red2_kernel(const Real& x, const PrecisionContext& ctx);

}  // namespace walklab
