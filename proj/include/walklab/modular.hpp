#pragma once

// Dedekind eta, eta quotients with exact q-expansions, the chi_{-3}
// Eisenstein series, and the modular parametrisations of the 3- and 4-step
// densities and of the level 8 function used for the L-value ladder.

#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "walklab/precision.hpp"

namespace walklab {

// eta(tau) = q^{1/24} prod (1 - q^m). The argument is first moved into the
// standard fundamental domain with tau -> tau + n and tau -> -1/tau.
Complex eta(const Complex& tau, const PrecisionContext& ctx);

struct EtaFactor {
  int m;  // eta(m tau)
  int e;  // exponent
};

// scalar * prod eta(m_j tau)^{e_j}. The q-expansion is
// scalar * q^{offset/24} * sum_{n>=0} c_n q^n with exact integer c_n.
class EtaQuotient {
 public:
  explicit EtaQuotient(std::vector<EtaFactor> factors, mpq_class scalar = 1);

  const std::vector<EtaFactor>& factors() const noexcept { return factors_; }
  const mpq_class& scalar() const noexcept { return scalar_; }
  // sum m_j e_j; the leading q-exponent is offset()/24.
  int offset() const noexcept;
  // sum e_j; the weight is half of this.
  int weight_twice() const noexcept;

  // c_0..c_{n-1}. Computed once and extended on demand; safe to call from
  // several threads.
  std::vector<mpz_class> coefficients(std::size_t n) const;

  // Product of eta values.
  Complex eval(const Complex& tau, const PrecisionContext& ctx) const;
  // Truncated q-expansion; needs Im tau bounded away from 0.
  Complex eval_series(const Complex& tau, const PrecisionContext& ctx) const;
  // d/dtau by term-wise differentiation of the q-expansion.
  Complex derivative(const Complex& tau, const PrecisionContext& ctx) const;

  EtaQuotient operator*(const EtaQuotient& o) const;
  EtaQuotient pow(int k) const;

 private:
  struct Cache;
  template <typename Term>
  Complex sum_series(const Complex& tau, const PrecisionContext& ctx, Term term) const;

  std::vector<EtaFactor> factors_;
  mpq_class scalar_;
  std::shared_ptr<Cache> cache_;
};

// Named quotients: "x3", "p3_weight", "dx3", "eis3_combo", "eis3_dual",
// "x4", "p4_weight", "x8", "x8_complement", "F8", "eta".
EtaQuotient named_quotient(const std::string& name);
std::vector<std::string> named_quotient_list();

// chi_{-3}(m): 1, -1, 0 for m = 1, 2, 0 mod 3.
int chi3(long m);

enum class EisensteinKind { E1_chi3, E3_chi3, E3_chi3_tilde };

Complex eisenstein(EisensteinKind kind, const Complex& tau, const PrecisionContext& ctx);
// Exact coefficients a_0..a_{n-1} of the q-expansion.
std::vector<mpz_class> eisenstein_coefficients(EisensteinKind kind, std::size_t n);

// Modular parametrisation of p_3 along tau = i y, where x runs over (0, 1)
// and P3 over (0, 1/4).
struct P3Point {
  Real x;
  Real p3;
  Complex dx_dtau;  // term-wise q-expansion derivative
  Real P3;          // cumulative distribution at x
};
P3Point p3_parametrisation(const Real& y, const PrecisionContext& ctx);

// P_3(x(iy)) from the Lambert-type q-series, switching to the series of the
// Fricke-transformed Eisenstein combination for y < 1/sqrt 6.
Real p3_cumulative_series(const Real& y, const PrecisionContext& ctx);
// Same value from the infinite product with principal logarithms.
Real p3_cumulative_product(const Real& y, const PrecisionContext& ctx);
// 6 sqrt3 * integral_y^inf E(it) dt with E the weight 3 Eisenstein combination.
Real p3_cumulative_integral(const Real& y, const PrecisionContext& ctx);

// Modular parametrisation of p_4. On the imaginary axis p_4 = (12 y/pi) p(iy)
// for every y > 0 (the two legs are exchanged by y -> 1/(12 y)); on the arc
// p_4 = Re(-2i(1 + 6 tau + 12 tau^2) p(tau)/pi).
struct P4Point {
  Complex tau;
  Real x;
  Real p4;
  Complex dx_dtau;
};
P4Point p4_on_axis(const Real& y, const PrecisionContext& ctx);
P4Point p4_on_arc(const Real& theta, const PrecisionContext& ctx);

struct RelationDigits {
  std::string name;
  int digits;
};
struct AtkinLehnerReport {
  std::vector<RelationDigits> relations;  // per sample point and relation
  int min_digits = 0;
  // Agreement of p(w12 tau) with the unscaled form -tau^2 p(tau); the
  // identity holds with the factor 12, so this stays near zero.
  int unscaled_form_digits = 0;
};
AtkinLehnerReport atkin_lehner_checks(const std::vector<Complex>& samples, const PrecisionContext& ctx);

struct Level8Point {
  Real x;
  int complement_digits;  // 1 - x^2/16 against its eta form
  int f_digits;           // F(x^2/16) against its eta form
  int relation_digits;    // F(1 - x^2/16) = -2 i tau F(x^2/16)
};
Level8Point level8_parametrisation(const Real& y, const PrecisionContext& ctx);

enum class AxisMap { p3, p4, level8 };
enum class AxisLeg { lower, upper };

// y > 0 with x(iy) = target. p3 and level8 maps are monotone on the whole
// axis, the p3 map covering (0, 1) and level8 (0, 4); for p4 the lower leg
// (0, 1/(2 sqrt 3)) is the default.
Real invert_x_on_axis(AxisMap which, const Real& target, const PrecisionContext& ctx, AxisLeg leg = AxisLeg::lower);
Real x_on_axis(AxisMap which, const Real& y, const PrecisionContext& ctx);

}  // namespace walklab
