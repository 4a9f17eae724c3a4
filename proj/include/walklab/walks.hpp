#pragma once

// Densities of the short uniform walks, the cumulative distribution of the
// 3-step walk, and Mahler measure evaluators built from them: linear Mahler
// measures W_N'(0), the b-deformed variant m(1 + b x1 + x2 + x3 + x2 x3) and
// m((1 + x1)^2 + x2 + x3). The integral identities used by the check
// registry live here too so that they can be tested directly.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "walklab/precision.hpp"

namespace walklab {

enum class DensityId { p2, p3, p4, phat };

struct WalkDensity {
  DensityId id;
  int support_hi;            // support is [0, support_hi]
  std::vector<int> kinks;    // interior points where the density is not analytic
};

WalkDensity walk_density(DensityId id);
std::string to_string(DensityId id);
DensityId density_from_string(const std::string& name);

// Density at x inside the open support. p3 has a logarithmic singularity at
// x = 1 (Errc::pole there); p4 switches from the modular parametrisation on
// (0, 2) to the 3F2 form on [2, 4), or the arc parametrisation where the 3F2
// argument is close to 1.
Real density(DensityId id, const Real& x, const PrecisionContext& ctx);

// integral_0^4 x^s p4(x) dx is awkward in x; this integrates
// f(x) p4(x) dx through the modular parametrisation (upper leg of the axis
// for x in (0, 2), the arc for x in (2, 4)) over [a, b] within [0, 4].
Real integrate_against_p4(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                          const PrecisionContext& ctx);

// integral_a^b f(x) p(x) dx for p2, p3, phat (x-domain quadrature with the
// endpoint singularities declared) and p4 (delegates to
// integrate_against_p4).
Real integrate_against(DensityId id, const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                       const PrecisionContext& ctx);

// integral_0^x p3, 0 <= x <= 3.
Real cumulative_P3(const Real& x, const PrecisionContext& ctx);
// P3(1) as 6 sqrt3 integral_0^inf E(it) dt with the lower half of the axis
// carried to the upper half by the Fricke involution.
Real P3_at_one_modular(const PrecisionContext& ctx);

// ((1/pi) int_0^pi log sqrt(x^2 + y^2 + 2xy cos t) dt, max(log x, log y)).
std::pair<Real, Real> gs_logmax_check(const Real& x, const Real& y, const PrecisionContext& ctx);

enum class LinearMethod {
  red1,         // N = 3, 4, 5: integral_1^{N-1} p_{N-1} log x
  modular,      // N = 5, 6: single integrals over the imaginary axis
  red2,         // N = 6: p4 on (2, 4) with log x, on (0, 2) with the 3F2 kernel
  w6p3,         // N = 6: 2 integral_0^3 p3 log x P3 dx
  w6p3_squared  // N = 6: log 3 - integral_0^3 P3^2 dx/x
};
std::string to_string(LinearMethod m);

// W_N'(0). N = 2 uses integral_0^2 p2 log x. Errc::invalid_argument for an
// unsupported (N, method) pair.
Real mahler_linear(int N, LinearMethod method, const PrecisionContext& ctx);

enum class VariantMethod { theorem2, general_b, wan, jensen };
std::string to_string(VariantMethod m);
// m(1 + b x1 + x2 + x3 + x2 x3). theorem2 needs b = 1, general_b and wan
// need 0 < b <= 4, jensen needs b > 4.
Real mahler_variant(const Real& b, VariantMethod method, const PrecisionContext& ctx);

enum class SquaredMethod { integral, closed_5f4 };
// m((1 + x1)^2 + x2 + x3).
Real mahler_squared(SquaredMethod method, const PrecisionContext& ctx);
// (2/pi^2) integral_0^1 arcsin(1-x) arcsin(x) dx/x.
Real squared_integral_part(const PrecisionContext& ctx);

// The two sides of G + (pi/4) log 2 = sqrt2 3F2(1/2,1/2,1/2; 3/2,3/2; 1/2).
std::pair<Real, Real> entry30_sides(const PrecisionContext& ctx);

// 3^{2n+3/2}/(pi 2^{2n} n!^2) integral_0^inf t^{2n+1} I0 K0^2 dt, and the
// four-step analogue 4^{2n+2}/(pi^2 n!^2) integral t^{2n+1} I0 K0^3 dt.
Real bessel_moment_w3(unsigned n, const PrecisionContext& ctx);
Real bessel_moment_w4(unsigned n, const PrecisionContext& ctx);

// integral x^s p(x) dx over the support.
Real density_moment(DensityId id, const Real& s, const PrecisionContext& ctx);
// integral p(x) log x dx over the support.
Real density_log_moment(DensityId id, const PrecisionContext& ctx);

// integral_0^x p2(y)(log x - log y) dy by quadrature, 0 < x <= 2.
Real red2_kernel_quadrature(const Real& x, const PrecisionContext& ctx);

// Ladder integrals:
//   (1/2) int_0^1 F(x^2/16) dx, (1/2pi) int_0^1 F(1 - x^2/16) log x dx,
//   (6/pi^2) int_0^1 F(x^2/16) log^2 x dx, with F = 2F1(1/2,1/2;1).
Real ladder_integral(int step, const PrecisionContext& ctx);
// (1/2) 3F2(1/2,1/2,1/2; 1,3/2; 1/16).
Real ladder_hypergeometric0(const PrecisionContext& ctx);

// The three-term 4F3(...; 1) combination for L(f2_hat; 3).
Real zu13_combination(const PrecisionContext& ctx);

// (2 pi/9) int_0^inf (1 - eta(it)^9/eta(3it)^3) dt.
Real bz02_integral(const PrecisionContext& ctx);

// Both sides of the reflection y -> 1/(12 y):
// int_0^{1/(2 sqrt3)} y p(iy) log x(iy) dx(iy) computed on the lower leg
// with directly reduced eta values and a high-precision difference quotient
// for dx/dy, and -int_{1/(2 sqrt3)}^inf ... on the upper leg from
// q-expansions.
std::pair<Real, Real> reflection_integral_sides(const PrecisionContext& ctx);

// Probability mass of each of `bins` equal-width bins over the support,
// to roughly 15 digits.
std::vector<double> bin_masses(DensityId id, int bins);

}  // namespace walklab
