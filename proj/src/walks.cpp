#include "walklab/walks.hpp"

#include <cmath>

#include "walklab/modular.hpp"
#include "walklab/quadrature.hpp"
#include "walklab/special.hpp"

namespace walklab {

namespace {

Real y_junction() { return Real(1) / (2 * sqrt(Real(3))); }

// Upper end of the axis integrals in y: beyond it an integrand of size
// e^{-2 pi y} times a polynomial is negligible.
Real axis_cutoff(const PrecisionContext& ctx) {
  return Real(ctx.working_digits() * std::log(10.0) / (2 * M_PI) + 4.0);
}

// p3 at x with d = 1 - x supplied separately, so that the singular point
// x = 1 keeps full relative accuracy in 1 - x^2.
Real p3_core(const Real& x, const Real& d, const PrecisionContext& ctx) {
  const Real s = 3 + x * x;
  const Real one_minus_sq = d * (2 - d);
  const Real c = 27 * one_minus_sq * one_minus_sq / (s * s * s);
  if (c.is_zero()) fail(Errc::pole, "p3: logarithmic singularity at x = 1");
  return 2 * sqrt(Real(3)) * x / (ctx.pi() * s) * hyp_2f1_third_complement(min(c, Real(1)), ctx);
}

// p2 with e = 2 - x supplied separately.
Real p2_core(const Real& e, const PrecisionContext& ctx) {
  return 2 / (ctx.pi() * sqrt(e * (4 - e)));
}

Real phat_core(const Real& x, const PrecisionContext& ctx) {
  return hyp_2f1_half_complement(min(x * x / 16, Real(1)), ctx) / (2 * ctx.pi());
}

Real p4_hypergeometric(const Real& x, const PrecisionContext& ctx) {
  static const HypergeometricSpec spec{{mpq_class(1, 2), mpq_class(1, 2), mpq_class(1, 2)},
                                       {mpq_class(5, 6), mpq_class(7, 6)}};
  const Real r = 16 - x * x;
  const Real z = r * r * r / (108 * pow(x, 4));
  return 2 * sqrt(r) / (ctx.pi() * ctx.pi() * x) * hyp_pfq(spec, z, ctx);
}

// theta in [1/2, 5/6] with x(e^{i pi theta}/(2 sqrt3)) = target in [2, 4].
Real invert_x_on_arc(const Real& target, const PrecisionContext& ctx) {
  Real lo = Real(1) / 2, hi = Real(5) / 6;
  if (target <= 2) return lo;
  if (target >= 4) return hi;
  Real glo = Real(2) - target, ghi = Real(4) - target;
  const Real tol = ctx.tolerance(3);
  int side = 0;
  Real mid;
  for (int it = 0; it < 400; ++it) {
    mid = (lo * ghi - hi * glo) / (ghi - glo);
    if (!(mid > lo && mid < hi)) mid = (lo + hi) / 2;
    const Real g = p4_on_arc(mid, ctx).x - target;
    if (g.is_zero() || hi - lo < tol) return mid;
    if (g.sign() < 0) {
      lo = mid;
      glo = g;
      if (side == -1) ghi = ghi / 2;
      side = -1;
    } else {
      hi = mid;
      ghi = g;
      if (side == 1) glo = glo / 2;
      side = 1;
    }
    if (abs(g) <= tol * target) return mid;
  }
  fail(Errc::no_convergence, "invert_x_on_arc: no convergence");
}

// int f(x) p4(x) dx over the part of (0, 2) where y runs over [y_lo, y_hi]
// on the upper leg (x decreases as y grows, so -dx/dy = Im x'(tau) > 0).
Real integrate_p4_axis(const std::function<Real(const Real&)>& f, const Real& y_lo, const Real& y_hi,
                       const PrecisionContext& ctx) {
  return integrate_finite(
      [&](const Real& y) {
        const P4Point p = p4_on_axis(y, ctx);
        return f(p.x) * p.p4 * p.dx_dtau.imag();
      },
      y_lo, y_hi, ctx);
}

// int f(x) p4(x) dx over the part of (2, 4) where theta runs over [t_lo, t_hi];
// dx/dtheta = Re(x'(tau) i pi tau).
Real integrate_p4_arc(const std::function<Real(const Real&)>& f, const Real& t_lo, const Real& t_hi,
                      const PrecisionContext& ctx) {
  return integrate_finite(
      [&](const Real& th) {
        const P4Point p = p4_on_arc(th, ctx);
        const Complex dtau = Complex(Real(0), ctx.pi()) * p.tau;
        return f(p.x) * p.p4 * (p.dx_dtau * dtau).real();
      },
      t_lo, t_hi, ctx);
}

Real zeta3_term(const PrecisionContext& ctx) {
  const Real& pi = ctx.pi();
  return 7 * ctx.zeta3() / (2 * pi * pi);
}

// P3 on [0, 1] and [1, 3] with the distance to 1 passed along; `base` is
// P3(1) for the upper piece.
Real P3_lower(const Real& x, const Real& d, const PrecisionContext& ctx) {
  // int_0^x p3(t) dt, 1 - t = d + (x - t)
  Integrand g{[&](const QuadPoint& p) { return p3_core(p.x, d + p.to_hi, ctx); }, Endpoint::regular,
              d < Real("0.05") ? Endpoint::log : Endpoint::regular};
  return integrate_finite(g, Real(0), x, ctx);
}

Real P3_upper(const Real& x, const Real& base, const PrecisionContext& ctx) {
  Integrand g{[&](const QuadPoint& p) { return p3_core(p.x, -p.from_lo, ctx); }, Endpoint::log, Endpoint::regular};
  return base + integrate_finite(g, Real(1), x, ctx);
}

// Outer integral int_0^3 h(x, P3(x)) dx, split at 1.
Real integrate_with_P3(const std::function<Real(const Real&, const Real&, const Real&)>& h,
                       const PrecisionContext& ctx) {
  const Real one(1);
  const Real base = P3_lower(one, Real(0), ctx);
  Integrand lower{[&](const QuadPoint& p) {
                    const Real d = p.to_hi;
                    const Real P = P3_lower(p.x, d, ctx);
                    return h(p.x, p3_core(p.x, d, ctx), P);
                  },
                  Endpoint::regular, Endpoint::log};
  Integrand upper{[&](const QuadPoint& p) {
                    const Real d = -p.from_lo;
                    const Real P = P3_upper(p.x, base, ctx);
                    return h(p.x, p3_core(p.x, d, ctx), P);
                  },
                  Endpoint::log, Endpoint::regular};
  return integrate_finite(lower, Real(0), one, ctx) + integrate_finite(upper, one, Real(3), ctx);
}

Real red2_kernel_or_zero(const Real& x, const PrecisionContext& ctx) {
  return x.is_zero() ? Real(0) : red2_kernel(min(x, Real(2)), ctx);
}

Real log_or_zero(const Real& x) { return x.is_zero() ? Real(0) : log(x); }

}  // namespace

WalkDensity walk_density(DensityId id) {
  switch (id) {
    case DensityId::p2: return {id, 2, {}};
    case DensityId::p3: return {id, 3, {}};
    case DensityId::p4: return {id, 4, {2}};
    case DensityId::phat: return {id, 4, {}};
  }
  fail(Errc::invalid_argument, "walk_density: unknown id");
}

std::string to_string(DensityId id) {
  switch (id) {
    case DensityId::p2: return "p2";
    case DensityId::p3: return "p3";
    case DensityId::p4: return "p4";
    case DensityId::phat: return "phat";
  }
  return "?";
}

DensityId density_from_string(const std::string& name) {
  for (DensityId id : {DensityId::p2, DensityId::p3, DensityId::p4, DensityId::phat})
    if (to_string(id) == name) return id;
  fail(Errc::not_found, "unknown density '" + name + "'");
}

Real density(DensityId id, const Real& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const int hi = walk_density(id).support_hi;
  if (!(x > 0) || !(x < hi)) fail(Errc::domain_error, to_string(id) + ": x outside the open support");
  switch (id) {
    case DensityId::p2: return p2_core(2 - x, ctx);
    case DensityId::p3: return p3_core(x, 1 - x, ctx);
    case DensityId::phat: return phat_core(x, ctx);
    case DensityId::p4: {
      if (x < 2) {
        const Real y = invert_x_on_axis(AxisMap::p4, x, ctx, AxisLeg::upper);
        return p4_on_axis(y, ctx).p4;
      }
      if (x == 2) return p4_on_axis(y_junction(), ctx).p4;
      const Real r = 16 - x * x;
      const Real z = r * r * r / (108 * pow(x, 4));
      if (z <= Real("0.98")) return p4_hypergeometric(x, ctx);
      return p4_on_arc(invert_x_on_arc(x, ctx), ctx).p4;
    }
  }
  fail(Errc::invalid_argument, "density: unknown id");
}

Real integrate_against_p4(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                          const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(a >= 0) || !(b <= 4) || !(a <= b)) fail(Errc::domain_error, "integrate_against_p4: need 0 <= a <= b <= 4");
  Real total(0);
  if (a < 2) {
    const Real b1 = min(b, Real(2));
    const Real y_lo = b1 == 2 ? y_junction() : invert_x_on_axis(AxisMap::p4, b1, ctx, AxisLeg::upper);
    const Real y_hi = a.is_zero() ? axis_cutoff(ctx) : invert_x_on_axis(AxisMap::p4, a, ctx, AxisLeg::upper);
    total += integrate_p4_axis(f, y_lo, y_hi, ctx);
  }
  if (b > 2) {
    const Real a2 = max(a, Real(2));
    const Real t_lo = invert_x_on_arc(a2, ctx);
    const Real t_hi = invert_x_on_arc(b, ctx);
    total += integrate_p4_arc(f, t_lo, t_hi, ctx);
  }
  return total;
}

Real integrate_against(DensityId id, const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                       const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const int hi = walk_density(id).support_hi;
  if (!(a >= 0) || !(b <= hi) || !(a <= b)) fail(Errc::domain_error, "integrate_against: interval outside the support");
  switch (id) {
    case DensityId::p4: return integrate_against_p4(f, a, b, ctx);
    case DensityId::p2: {
      Integrand g{[&](const QuadPoint& p) { return f(p.x) * p2_core(b == 2 ? p.to_hi : 2 - p.x, ctx); },
                  Endpoint::regular, b == 2 ? Endpoint::inverse_sqrt : Endpoint::regular};
      return integrate_finite(g, a, b, ctx);
    }
    case DensityId::phat: {
      Integrand g{[&](const QuadPoint& p) { return f(p.x) * phat_core(p.x, ctx); },
                  a.is_zero() ? Endpoint::log : Endpoint::regular, Endpoint::regular};
      return integrate_finite(g, a, b, ctx);
    }
    case DensityId::p3: {
      auto piece = [&](const Real& lo, const Real& hi_) {
        const bool hi_one = hi_ == 1, lo_one = lo == 1;
        Integrand g{[&](const QuadPoint& p) {
                      const Real d = hi_one ? p.to_hi : (lo_one ? -p.from_lo : 1 - p.x);
                      return f(p.x) * p3_core(p.x, d, ctx);
                    },
                    lo_one ? Endpoint::log : Endpoint::regular, hi_one ? Endpoint::log : Endpoint::regular};
        return integrate_finite(g, lo, hi_, ctx);
      };
      if (a < 1 && b > 1) return piece(a, Real(1)) + piece(Real(1), b);
      return piece(a, b);
    }
  }
  fail(Errc::invalid_argument, "integrate_against: unknown id");
}

Real cumulative_P3(const Real& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(x >= 0) || !(x <= 3)) fail(Errc::domain_error, "cumulative_P3: x must lie in [0, 3]");
  if (x.is_zero()) return Real(0);
  return integrate_against(DensityId::p3, [](const Real&) { return Real(1); }, Real(0), x, ctx);
}

Real P3_at_one_modular(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  // 6 sqrt3 [int_{t*}^inf E(it) dt + int_{t*}^inf (4 sqrt3/3) T E''(iT) dT],
  // t* = 1/sqrt6, using E(it) = 8 sqrt3 T^3 E''(iT) with T = 1/(6t).
  const Real ts = Real(1) / sqrt(Real(6));
  const EtaQuotient e = named_quotient("eis3_combo");
  const EtaQuotient dual = named_quotient("eis3_dual");
  const Real Y = ts + axis_cutoff(ctx);
  const Real a = integrate_finite([&](const Real& t) { return e.eval_series(Complex(Real(0), t), ctx).real(); }, ts,
                                  Y, ctx);
  const Real b = integrate_finite(
      [&](const Real& T) { return T * dual.eval_series(Complex(Real(0), T), ctx).real(); }, ts, Y, ctx);
  const Real s3 = sqrt(Real(3));
  return 6 * s3 * (a + 4 * s3 / 3 * b);
}

std::pair<Real, Real> gs_logmax_check(const Real& x, const Real& y, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(x > 0) || !(y > 0)) fail(Errc::domain_error, "gs_logmax_check: x and y must be positive");
  const Real dxy = (x - y) * (x - y), xy4 = 4 * x * y;
  // x^2 + y^2 + 2xy cos t = (x-y)^2 + 4xy sin^2((pi - t)/2)
  Integrand g{[&](const QuadPoint& p) {
                const Real s = sin(p.to_hi / 2);
                return log(dxy + xy4 * s * s) / 2;
              },
              Endpoint::regular, dxy.is_zero() ? Endpoint::log : Endpoint::regular};
  const Real lhs = integrate_finite(g, Real(0), ctx.pi(), ctx) / ctx.pi();
  return {lhs, max(log(x), log(y))};
}

std::string to_string(LinearMethod m) {
  switch (m) {
    case LinearMethod::red1: return "red1";
    case LinearMethod::modular: return "modular";
    case LinearMethod::red2: return "red2";
    case LinearMethod::w6p3: return "w6p3";
    case LinearMethod::w6p3_squared: return "w6p3_squared";
  }
  return "?";
}

Real mahler_linear(int N, LinearMethod method, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  auto logf = [](const Real& x) { return log_or_zero(x); };
  if (N == 2) return integrate_against(DensityId::p2, logf, Real(0), Real(2), ctx);
  if (N == 3 && method == LinearMethod::red1) return integrate_against(DensityId::p2, logf, Real(1), Real(2), ctx);
  if (N == 4 && method == LinearMethod::red1) return integrate_against(DensityId::p3, logf, Real(1), Real(3), ctx);
  const Real yj = y_junction();
  const Real y_one = sqrt(Real(15)) / 6;  // x = 1 on the upper leg
  if (N == 5 && method == LinearMethod::red1)
    return integrate_p4_axis(logf, yj, y_one, ctx) + integrate_p4_arc(logf, Real(1) / 2, Real(5) / 6, ctx);
  if (N == 5 && method == LinearMethod::modular)
    return zeta3_term(ctx) - integrate_p4_axis(logf, y_one, axis_cutoff(ctx), ctx);
  if (N == 6 && method == LinearMethod::modular)
    return zeta3_term(ctx) - integrate_p4_axis([&](const Real& x) { return log_or_zero(x) - red2_kernel_or_zero(x, ctx); },
                                               yj, axis_cutoff(ctx), ctx);
  if (N == 6 && method == LinearMethod::red2)
    return integrate_p4_arc(logf, Real(1) / 2, Real(5) / 6, ctx) +
           integrate_p4_axis([&](const Real& x) { return red2_kernel_or_zero(x, ctx); }, yj, axis_cutoff(ctx), ctx);
  if (N == 6 && method == LinearMethod::w6p3)
    return 2 * integrate_with_P3([](const Real& x, const Real& p, const Real& P) { return p * log(x) * P; }, ctx);
  if (N == 6 && method == LinearMethod::w6p3_squared)
    return log(Real(3)) -
           integrate_with_P3([](const Real& x, const Real&, const Real& P) { return P * P / x; }, ctx);
  fail(Errc::invalid_argument, "mahler_linear: method " + to_string(method) + " is not available for N = " +
                                   std::to_string(N));
}

std::string to_string(VariantMethod m) {
  switch (m) {
    case VariantMethod::theorem2: return "theorem2";
    case VariantMethod::general_b: return "general_b";
    case VariantMethod::wan: return "wan";
    case VariantMethod::jensen: return "jensen";
  }
  return "?";
}

Real mahler_variant(const Real& b, VariantMethod method, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(b > 0)) fail(Errc::domain_error, "mahler_variant: b must be positive");
  const Real& pi = ctx.pi();
  switch (method) {
    case VariantMethod::theorem2: {
      if (b != 1) fail(Errc::domain_error, "mahler_variant: theorem2 needs b = 1");
      Integrand g{[&](const QuadPoint& p) { return phat_core(p.x, ctx) * log(p.x); }, Endpoint::log,
                  Endpoint::regular};
      // phat = F(1 - x^2/16)/(2 pi)
      return -integrate_finite(g, Real(0), Real(1), ctx);
    }
    case VariantMethod::general_b: {
      if (b > 4) fail(Errc::domain_error, "mahler_variant: general_b needs 0 < b <= 4");
      Integrand g{[&](const QuadPoint& p) { return phat_core(p.x, ctx) * log(b / p.x); }, Endpoint::log,
                  Endpoint::regular};
      return integrate_finite(g, Real(0), b, ctx);
    }
    case VariantMethod::wan: {
      if (b > 4) fail(Errc::domain_error, "mahler_variant: wan needs 0 < b <= 4");
      if (b == 4) return log(b);
      const Real lb = log(2 * sqrt(b));
      // arccos(b/x) = 2 asin(sqrt((x - b)/(2x))), sqrt(16 - x^2) = sqrt((4 - x)(4 + x))
      Integrand g{[&](const QuadPoint& p) {
                    const Real ac = 2 * asin(sqrt(p.from_lo / (2 * p.x)));
                    return ac * (log(p.x) - lb) / sqrt(p.to_hi * (4 + p.x));
                  },
                  Endpoint::inverse_sqrt, Endpoint::inverse_sqrt};
      return log(b) + 8 / (pi * pi) * integrate_finite(g, b, Real(4), ctx);
    }
    case VariantMethod::jensen:
      if (!(b > 4)) fail(Errc::domain_error, "mahler_variant: jensen needs b > 4");
      return log(b);
  }
  fail(Errc::invalid_argument, "mahler_variant: unknown method");
}

Real squared_integral_part(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real& pi = ctx.pi();
  Integrand g{[&](const QuadPoint& p) {
                if (p.x.is_zero()) return pi / 2;
                return asin(p.to_hi) * asin(p.x) / p.x;
              },
              Endpoint::regular, Endpoint::inverse_sqrt};
  return 2 / (pi * pi) * integrate_finite(g, Real(0), Real(1), ctx);
}

Real mahler_squared(SquaredMethod method, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real& pi = ctx.pi();
  if (method == SquaredMethod::integral) return 2 * ctx.catalan() / pi + squared_integral_part(ctx);
  const mpq_class q1(1, 4), q3(3, 4), q5(5, 4), q7(7, 4);
  const HypergeometricSpec s1{{q1, q1, q1, q3, q3}, {mpq_class(1, 2), q5, q5, q5}};
  const HypergeometricSpec s2{{q3, q3, q3, q5, q5}, {mpq_class(3, 2), q7, q7, q7}};
  const Real z = Real(1) / 4;
  const Real g34 = gamma(Real(3) / 4, ctx), g14 = gamma(Real(1) / 4, ctx);
  const Real p52 = pow(pi, Real(5) / 2);
  return 8 * g34 * g34 / p52 * hyp_pfq(s1, z, ctx) + g14 * g14 / (54 * p52) * hyp_pfq(s2, z, ctx);
}

std::pair<Real, Real> entry30_sides(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const HypergeometricSpec s{{mpq_class(1, 2), mpq_class(1, 2), mpq_class(1, 2)}, {mpq_class(3, 2), mpq_class(3, 2)}};
  return {ctx.catalan() + ctx.pi() / 4 * ctx.log2(), sqrt(Real(2)) * hyp_pfq(s, Real(1) / 2, ctx)};
}

Real bessel_moment_w3(unsigned n, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (n < 1) fail(Errc::invalid_argument, "bessel_moment_w3: n must be at least 1");
  const long p = 2 * static_cast<long>(n) + 1;
  const Real I = integrate_semi_infinite(
      [&](const Real& t) {
        const Real k = bessel_k0(t, ctx);
        return pow(t, p) * bessel_i0(t, ctx) * k * k;
      },
      ctx);
  Real nf(1);
  for (unsigned j = 2; j <= n; ++j) nf *= j;
  const Real pre = pow(Real(3), Real(2 * n) + Real(3) / 2) / (ctx.pi() * pow(Real(2), 2 * static_cast<long>(n)) * nf * nf);
  return pre * I;
}

Real bessel_moment_w4(unsigned n, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (n < 1) fail(Errc::invalid_argument, "bessel_moment_w4: n must be at least 1");
  const long p = 2 * static_cast<long>(n) + 1;
  const Real I = integrate_semi_infinite(
      [&](const Real& t) {
        const Real k = bessel_k0(t, ctx);
        return pow(t, p) * bessel_i0(t, ctx) * k * k * k;
      },
      ctx);
  Real nf(1);
  for (unsigned j = 2; j <= n; ++j) nf *= j;
  const Real pre = pow(Real(4), 2 * static_cast<long>(n) + 2) / (ctx.pi() * ctx.pi() * nf * nf);
  return pre * I;
}

Real density_moment(DensityId id, const Real& s, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real hi(walk_density(id).support_hi);
  return integrate_against(id, [&](const Real& x) { return x.is_zero() ? Real(s.is_zero() ? 1 : 0) : pow(x, s); },
                           Real(0), hi, ctx);
}

Real density_log_moment(DensityId id, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real hi(walk_density(id).support_hi);
  return integrate_against(id, [](const Real& x) { return log_or_zero(x); }, Real(0), hi, ctx);
}

Real red2_kernel_quadrature(const Real& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(x > 0) || !(x <= 2)) fail(Errc::domain_error, "red2_kernel_quadrature: x must lie in (0, 2]");
  const Real lx = log(x);
  Integrand g{[&](const QuadPoint& p) { return p2_core(x == 2 ? p.to_hi : 2 - p.x, ctx) * (lx - log(p.x)); },
              Endpoint::log, x == 2 ? Endpoint::inverse_sqrt : Endpoint::regular};
  return integrate_finite(g, Real(0), x, ctx);
}

Real ladder_integral(int step, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real& pi = ctx.pi();
  switch (step) {
    case 0:
      return integrate_finite([&](const Real& x) { return hyp_2f1_half(x * x / 16, ctx); }, Real(0), Real(1), ctx) / 2;
    case 1: {
      Integrand g{[&](const QuadPoint& p) { return phat_core(p.x, ctx) * log(p.x); }, Endpoint::log,
                  Endpoint::regular};
      // (1/2 pi) F(1 - x^2/16) = phat
      return integrate_finite(g, Real(0), Real(1), ctx);
    }
    case 2: {
      Integrand g{[&](const QuadPoint& p) {
                    if (p.x.is_zero()) return Real(0);
                    const Real l = log(p.x);
                    return hyp_2f1_half(p.x * p.x / 16, ctx) * l * l;
                  },
                  Endpoint::log, Endpoint::regular};
      return 6 / (pi * pi) * integrate_finite(g, Real(0), Real(1), ctx);
    }
  }
  fail(Errc::invalid_argument, "ladder_integral: step must be 0, 1 or 2");
}

Real ladder_hypergeometric0(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const HypergeometricSpec s{{mpq_class(1, 2), mpq_class(1, 2), mpq_class(1, 2)}, {mpq_class(1), mpq_class(3, 2)}};
  return hyp_pfq(s, Real(1) / 16, ctx) / 2;
}

Real zu13_combination(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real& pi = ctx.pi();
  const std::vector<mpq_class> up{1, 1, 1, mpq_class(1, 2)};
  auto F = [&](const mpq_class& b) {
    return hyp_pfq(HypergeometricSpec{up, {b, mpq_class(3, 2), mpq_class(3, 2)}}, Real(1), ctx);
  };
  const Real g14 = gamma(Real(1) / 4, ctx), g34 = gamma(Real(3) / 4, ctx);
  const Real den = sqrt(Real(2)) * pow(pi, Real(5) / 2);
  return g14 * g14 / (6 * den) * F(mpq_class(7, 4)) + 4 * g34 * g34 / den * F(mpq_class(5, 4)) +
         g14 * g14 / (2 * den) * F(mpq_class(3, 4));
}

Real bz02_integral(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  // (2 pi/9) [t* + int_{t*}^inf (1 - E~(it)) dt - 27 sqrt3 int_{t*}^inf T E(iT) dT]
  // with t* = 1/sqrt3, using E~(it) = 3 sqrt3 t^{-3} E(i/(3t)).
  const Real ts = Real(1) / sqrt(Real(3));
  const Real Y = ts + axis_cutoff(ctx);
  const Real a = integrate_finite(
      [&](const Real& t) {
        return Real(1) - eisenstein(EisensteinKind::E3_chi3_tilde, Complex(Real(0), t), ctx).real();
      },
      ts, Y, ctx);
  const Real b = integrate_finite(
      [&](const Real& T) { return T * eisenstein(EisensteinKind::E3_chi3, Complex(Real(0), T), ctx).real(); }, ts,
      Y, ctx);
  return 2 * ctx.pi() / 9 * (ts + a - 27 * sqrt(Real(3)) * b);
}

std::pair<Real, Real> reflection_integral_sides(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real yj = y_junction();
  const Real& pi = ctx.pi();
  // Upper leg: -int_{yj}^inf y p(iy) log x (dx/dy) dy = (pi/12) int p4 log x (-dx/dy) dy.
  const Real rhs = (pi / 12) * integrate_p4_axis([](const Real& x) { return log(x); }, yj, axis_cutoff(ctx), ctx);

  // Lower leg in u = 1/y: int_{2 sqrt3}^inf y p(iy) log x(iy) (dx/dy) dy/u^2.
  const EtaQuotient xq = named_quotient("x4");
  const EtaQuotient pq = named_quotient("p4_weight");
  const PrecisionContext wide = ctx.with_digits(2 * ctx.digits() + 20);
  const int hexp = ctx.working_digits() + 10;
  auto x_at = [&](const Real& y) { return xq.eval(Complex(Real(0), y), wide).real(); };
  // x decays like exp(-pi u/6), so the lower leg integrand decays at rate 1/12 in u.
  const Real U = 2 * sqrt(Real(3)) + Real(12.0 * ctx.working_digits() * std::log(10.0) / (2 * M_PI) + 24.0);
  const Real lhs = integrate_finite(
      [&](const Real& u) {
        Real dxdy;
        {
          PrecisionScope w(wide);
          const Real y = Real(1) / u;
          const Real h = tenth_power(hexp) * y;
          dxdy = (x_at(y + h) - x_at(y - h)) / (2 * h);
        }
        dxdy = rounded(dxdy);
        const Real y = Real(1) / u;
        const Complex tau(Real(0), y);
        const Real x = xq.eval(tau, ctx).real();
        const Real p = pq.eval(tau, ctx).real();
        return y * p * log(x) * dxdy / (u * u);
      },
      2 * sqrt(Real(3)), U, ctx);
  return {lhs, rhs};
}

std::vector<double> bin_masses(DensityId id, int bins) {
  if (bins < 1) fail(Errc::invalid_argument, "bin_masses: need at least one bin");
  const auto ctx = make_context(18);
  PrecisionScope scope(ctx);
  const int hi = walk_density(id).support_hi;
  std::vector<double> m(static_cast<std::size_t>(bins));
  auto edge = [&](int k) { return Real(hi) * Real(k) / Real(bins); };
  auto one = [](const Real&) { return Real(1); };
  for (int k = 0; k < bins; ++k) {
    if (id == DensityId::p2) {
      // P2(x) = (2/pi) asin(x/2)
      m[static_cast<std::size_t>(k)] =
          (2 / ctx.pi() * (asin(edge(k + 1) / 2) - asin(edge(k) / 2))).to_double();
    } else {
      m[static_cast<std::size_t>(k)] = integrate_against(id, one, edge(k), edge(k + 1), ctx).to_double();
    }
  }
  return m;
}

}  // namespace walklab
