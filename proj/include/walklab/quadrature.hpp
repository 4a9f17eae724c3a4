#pragma once

// Double-exponential quadrature on finite intervals (tanh-sinh), half-lines
// (exp-sinh) and parametrised paths in the upper half-plane, plus a
// Gauss-Legendre mode for cross-checking smooth integrands.

#include <functional>

#include "walklab/precision.hpp"

namespace walklab {

enum class Endpoint { regular, log, inverse_sqrt };

// A node handed to the integrand. from_lo = x - a and to_hi = b - x are
// computed directly from the transformation, so they keep full relative
// accuracy when x crowds an endpoint.
struct QuadPoint {
  Real x;
  Real from_lo;
  Real to_hi;
};

struct Integrand {
  std::function<Real(const QuadPoint&)> f;
  Endpoint lo = Endpoint::regular;
  Endpoint hi = Endpoint::regular;
};

struct ComplexIntegrand {
  std::function<Complex(const QuadPoint&)> f;
  Endpoint lo = Endpoint::regular;
  Endpoint hi = Endpoint::regular;
};

template <typename T>
struct QuadOutcome {
  T value;
  Real error_estimate;
  int levels = 0;
  long evaluations = 0;
  int digits_achieved = 0;
  bool converged = false;
};

// Level doubling stops once two successive levels agree to
// 10^-(digits+3) relative to the integrand scale. The *_report forms never
// throw on non-convergence; the plain forms raise Errc::no_convergence with
// the achieved digit count.
QuadOutcome<Real> integrate_finite_report(const Integrand& f, const Real& a, const Real& b,
                                          const PrecisionContext& ctx);
QuadOutcome<Complex> integrate_finite_report(const ComplexIntegrand& f, const Real& a, const Real& b,
                                             const PrecisionContext& ctx);

Real integrate_finite(const Integrand& f, const Real& a, const Real& b, const PrecisionContext& ctx);
Real integrate_finite(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                      const PrecisionContext& ctx);
Complex integrate_finite(const ComplexIntegrand& f, const Real& a, const Real& b, const PrecisionContext& ctx);

// Integral over [a, inf) of an integrand decaying at least exponentially.
Real integrate_semi_infinite(const std::function<Real(const Real&)>& f, const Real& a, const PrecisionContext& ctx);
inline Real integrate_semi_infinite(const std::function<Real(const Real&)>& f, const PrecisionContext& ctx) {
  return integrate_semi_infinite(f, Real(0), ctx);
}

struct PathSegment {
  enum class Kind { real_interval, imaginary_axis, arc };
  Kind kind;
  Real t0;
  Real t1;

  static PathSegment interval(Real a, Real b) { return {Kind::real_interval, std::move(a), std::move(b)}; }
  // tau = i y for y in [y0, y1].
  static PathSegment axis(Real y0, Real y1) { return {Kind::imaginary_axis, std::move(y0), std::move(y1)}; }
  // tau = e^{i pi theta}/(2 sqrt 3) for theta in [th0, th1] within [1/2, 5/6].
  static PathSegment arc(Real th0, Real th1);
  // tau = i y for y in [y0, Y], where Y is chosen so that an integrand of
  // size |q|^rate is negligible beyond it.
  static PathSegment axis_to_infinity(const Real& y0, double rate, const PrecisionContext& ctx);

  Complex point(const Real& t) const;
  Complex derivative(const Real& t) const;
};

// Contour integral of f(tau) d tau along the segment.
Complex integrate_path(const std::function<Complex(const Complex&)>& f, const PathSegment& seg,
                       const PrecisionContext& ctx, Endpoint lo = Endpoint::regular, Endpoint hi = Endpoint::regular);

// Gauss-Legendre with node count doubling from 20 until two rules agree.
Real integrate_gauss_legendre(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                              const PrecisionContext& ctx);
// Fixed n-point rule.
Real gauss_legendre_fixed(const std::function<Real(const Real&)>& f, const Real& a, const Real& b, int n,
                          const PrecisionContext& ctx);

}  // namespace walklab
