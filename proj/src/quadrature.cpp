#include "walklab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace walklab {

namespace {

double depth_factor(Endpoint e) { return e == Endpoint::inverse_sqrt ? 2.5 : 1.5; }

// Largest |t| needed so that the node's distance to the endpoint reaches
// about 10^(-factor * working digits).
Real t_extent(Endpoint e, const PrecisionContext& ctx) {
  const double s_max = depth_factor(e) * ctx.working_digits() * std::log(10.0) / 2;
  return Real(std::asinh(2 * s_max / M_PI) + 0.05);
}

struct Node {
  QuadPoint p;
  Real w;
};

// Tanh-sinh node at parameter t for [a, b], len = b - a.
Node tanh_sinh_node(const Real& t, const Real& a, const Real& b, const Real& len, const Real& half_pi) {
  const Real at = abs(t);
  const Real s = half_pi * sinh(at);
  const Real u = exp(-2 * s);
  const Real one_u = Real(1) + u;
  const Real near = len * u / one_u;
  const Real far = len / one_u;
  Node n;
  if (t.sign() >= 0) {
    n.p.to_hi = near;
    n.p.from_lo = far;
    n.p.x = b - near;
  } else {
    n.p.from_lo = near;
    n.p.to_hi = far;
    n.p.x = a + near;
  }
  n.w = len / 2 * half_pi * cosh(at) * 4 * u / (one_u * one_u);
  return n;
}

template <typename T, typename F>
QuadOutcome<T> tanh_sinh(const F& f, Endpoint lo, Endpoint hi, const Real& a, const Real& b,
                         const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  QuadOutcome<T> out;
  out.value = T(Real(0));
  out.error_estimate = Real(0);
  const Real len = b - a;
  if (len.is_zero()) {
    out.converged = true;
    out.digits_achieved = ctx.digits();
    return out;
  }
  const Real half_pi = ctx.pi() / 2;
  const Real t_lo = t_extent(lo, ctx), t_hi = t_extent(hi, ctx);
  const Real tol = ctx.tolerance(3);

  T sum = T(Real(0));
  Real abs_sum(0);
  auto visit = [&](const Real& t) {
    if (t > t_hi || -t > t_lo) return;
    Node n = tanh_sinh_node(t, a, b, len, half_pi);
    if (n.p.from_lo.is_zero() || n.p.to_hi.is_zero()) return;
    T v = f(n.p);
    ++out.evaluations;
    if (!abs(v).is_finite()) fail(Errc::domain_error, "quadrature: integrand is not finite at x = " + n.p.x.to_string(20));
    T wv = v * n.w;
    abs_sum += abs(wv);
    sum += wv;
  };

  T prev = T(Real(0));
  const int cap = ctx.quadrature_level_cap();
  for (int level = 0; level <= cap; ++level) {
    const Real h = ldexp(Real(1), -level);
    if (level == 0) {
      visit(Real(0));
      const long jmax = static_cast<long>(max(t_lo, t_hi).to_double()) + 1;
      for (long j = 1; j <= jmax; ++j) {
        visit(Real(j));
        visit(Real(-j));
      }
    } else {
      const long jmax = static_cast<long>(ldexp(max(t_lo, t_hi), level).to_double()) + 1;
      for (long j = 1; j <= jmax; j += 2) {
        Real t = ldexp(Real(j), -level);
        visit(t);
        visit(-t);
      }
    }
    T estimate = sum * h;
    const Real scale = max(abs(estimate), abs_sum * h);
    if (level >= 1) {
      Real diff = abs(estimate - prev);
      out.error_estimate = diff;
      out.levels = level + 1;
      out.value = estimate;
      if (scale.is_zero()) {
        out.converged = true;
        out.digits_achieved = ctx.digits();
        return out;
      }
      Real rel = diff / scale;
      out.digits_achieved = rel.is_zero() ? ctx.working_digits() : static_cast<int>(std::floor(-log10(rel).to_double()));
      if (level >= 2 && diff <= tol * scale) {
        out.converged = true;
        return out;
      }
    }
    prev = estimate;
  }
  return out;
}

template <typename T>
T finish(QuadOutcome<T>&& r, const char* what) {
  if (!r.converged)
    fail(Errc::no_convergence, std::string(what) + ": level cap reached with about " +
                                   std::to_string(r.digits_achieved) + " digits achieved");
  return std::move(r.value);
}

}  // namespace

QuadOutcome<Real> integrate_finite_report(const Integrand& f, const Real& a, const Real& b,
                                          const PrecisionContext& ctx) {
  if (b < a) {
    // Reverse orientation: integrate over [b, a] with the roles of the ends swapped.
    Integrand g{[&](const QuadPoint& p) { return f.f(p); }, f.hi, f.lo};
    auto r = tanh_sinh<Real>(g.f, g.lo, g.hi, b, a, ctx);
    r.value = -r.value;
    return r;
  }
  return tanh_sinh<Real>(f.f, f.lo, f.hi, a, b, ctx);
}

QuadOutcome<Complex> integrate_finite_report(const ComplexIntegrand& f, const Real& a, const Real& b,
                                             const PrecisionContext& ctx) {
  if (b < a) {
    auto r = tanh_sinh<Complex>(f.f, f.hi, f.lo, b, a, ctx);
    r.value = -r.value;
    return r;
  }
  return tanh_sinh<Complex>(f.f, f.lo, f.hi, a, b, ctx);
}

Real integrate_finite(const Integrand& f, const Real& a, const Real& b, const PrecisionContext& ctx) {
  return finish(integrate_finite_report(f, a, b, ctx), "integrate_finite");
}

Real integrate_finite(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                      const PrecisionContext& ctx) {
  Integrand g{[&](const QuadPoint& p) { return f(p.x); }};
  return integrate_finite(g, a, b, ctx);
}

Complex integrate_finite(const ComplexIntegrand& f, const Real& a, const Real& b, const PrecisionContext& ctx) {
  return finish(integrate_finite_report(f, a, b, ctx), "integrate_finite");
}

Real integrate_semi_infinite(const std::function<Real(const Real&)>& f, const Real& a, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real half_pi = ctx.pi() / 2;
  const Real eps = tenth_power(ctx.working_digits() + 5);
  const Real tol = ctx.tolerance(3);
  // x = a + exp((pi/2) sinh t), dx = (pi/2) cosh t exp((pi/2) sinh t) dt
  auto term = [&](const Real& t) {
    const Real s = half_pi * sinh(t);
    const Real e = exp(s);
    Real v = f(a + e);
    if (!v.is_finite()) fail(Errc::domain_error, "integrate_semi_infinite: integrand not finite");
    return v * half_pi * cosh(t) * e;
  };
  const Real t_lo = Real(std::asinh(2 * 2.5 * ctx.working_digits() * std::log(10.0) / M_PI) + 0.05);

  // Find the right cut-off on a coarse grid: three consecutive negligible terms.
  Real running(0);
  Real t_hi(0);
  {
    int quiet = 0;
    for (int j = 0; j < 400; ++j) {
      Real t = ldexp(Real(j), -2);
      Real v = abs(term(t));
      running = max(running, v);
      if (v <= eps * running) {
        if (++quiet == 3) {
          t_hi = t;
          break;
        }
      } else {
        quiet = 0;
      }
    }
    if (t_hi.is_zero()) fail(Errc::no_convergence, "integrate_semi_infinite: integrand does not decay");
  }

  Real sum(0), abs_sum(0), prev(0);
  auto visit = [&](const Real& t) {
    if (t > t_hi || -t > t_lo) return;
    Real v = term(t);
    abs_sum += abs(v);
    sum += v;
  };
  const int cap = ctx.quadrature_level_cap();
  int digits = 0;
  for (int level = 0; level <= cap; ++level) {
    const Real h = ldexp(Real(1), -level);
    const long jmax = static_cast<long>(ldexp(max(t_lo, t_hi), level).to_double()) + 1;
    if (level == 0) {
      visit(Real(0));
      for (long j = 1; j <= jmax; ++j) {
        visit(Real(j));
        visit(Real(-j));
      }
    } else {
      for (long j = 1; j <= jmax; j += 2) {
        Real t = ldexp(Real(j), -level);
        visit(t);
        visit(-t);
      }
    }
    Real estimate = sum * h;
    Real scale = max(abs(estimate), abs_sum * h);
    if (level >= 1) {
      Real diff = abs(estimate - prev);
      if (scale.is_zero()) return estimate;
      Real rel = diff / scale;
      digits = rel.is_zero() ? ctx.working_digits() : static_cast<int>(std::floor(-log10(rel).to_double()));
      if (level >= 2 && diff <= tol * scale) return estimate;
    }
    prev = estimate;
  }
  fail(Errc::no_convergence,
       "integrate_semi_infinite: level cap reached with about " + std::to_string(digits) + " digits achieved");
}

PathSegment PathSegment::arc(Real th0, Real th1) {
  const mpq_class lo(1, 2), hi(5, 6);
  PrecisionScope wide(th0.precision() + 8);
  if (th0 < Real(lo) - tenth_power(30) || th1 > Real(hi) + tenth_power(30) || th0 > th1)
    fail(Errc::invalid_argument, "arc parameter range must lie within [1/2, 5/6]");
  return {Kind::arc, std::move(th0), std::move(th1)};
}

PathSegment PathSegment::axis_to_infinity(const Real& y0, double rate, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(rate > 0)) fail(Errc::invalid_argument, "axis_to_infinity: decay rate must be positive");
  const double extra = ctx.working_digits() * std::log(10.0) / (2 * M_PI * rate) + 1.0;
  return {Kind::imaginary_axis, y0, y0 + Real(extra)};
}

Complex PathSegment::point(const Real& t) const {
  switch (kind) {
    case Kind::real_interval: return Complex(t);
    case Kind::imaginary_axis: return Complex(Real(0), t);
    case Kind::arc: {
      Real pi;
      mpfr_const_pi(pi.get(), MPFR_RNDN);
      Real r = Real(1) / (2 * sqrt(Real(3)));
      return Complex(r * cos(pi * t), r * sin(pi * t));
    }
  }
  return Complex();
}

Complex PathSegment::derivative(const Real& t) const {
  switch (kind) {
    case Kind::real_interval: return Complex(Real(1));
    case Kind::imaginary_axis: return Complex(Real(0), Real(1));
    case Kind::arc: {
      Real pi;
      mpfr_const_pi(pi.get(), MPFR_RNDN);
      return Complex(Real(0), pi) * point(t);
    }
  }
  return Complex();
}

Complex integrate_path(const std::function<Complex(const Complex&)>& f, const PathSegment& seg,
                       const PrecisionContext& ctx, Endpoint lo, Endpoint hi) {
  PrecisionScope scope(ctx);
  ComplexIntegrand g{[&](const QuadPoint& p) { return f(seg.point(p.x)) * seg.derivative(p.x); }, lo, hi};
  return integrate_finite(g, seg.t0, seg.t1, ctx);
}

namespace {

struct GaussRule {
  std::vector<Real> x;  // nodes in (0, 1), positive half
  std::vector<Real> w;
};

const GaussRule& gauss_rule(int n, mpfr_prec_t bits) {
  static std::mutex mu;
  static std::map<std::pair<int, mpfr_prec_t>, GaussRule> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({n, bits});
  if (it != cache.end()) return it->second;
  PrecisionScope scope(bits + 16);
  GaussRule rule;
  const Real eps = ldexp(Real(1), -static_cast<long>(bits) - 4);
  for (int i = 1; i <= (n + 1) / 2; ++i) {
    Real z(std::cos(M_PI * (i - 0.25) / (n + 0.5)));
    Real dp;
    for (int it = 0; it < 100; ++it) {
      Real p0(1), p1 = z;
      for (int k = 1; k < n; ++k) {
        Real p2 = (Real(2 * k + 1) * z * p1 - Real(k) * p0) / Real(k + 1);
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = Real(n) * (z * p1 - p0) / (z * z - 1);
      Real dz = p1 / dp;
      z -= dz;
      if (abs(dz) <= eps) break;
    }
    Real w = Real(2) / ((Real(1) - z * z) * dp * dp);
    PrecisionScope back(bits);
    rule.x.push_back(rounded(z));
    rule.w.push_back(rounded(w));
  }
  return cache.emplace(std::make_pair(n, bits), std::move(rule)).first->second;
}

}  // namespace

Real gauss_legendre_fixed(const std::function<Real(const Real&)>& f, const Real& a, const Real& b, int n,
                          const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (n < 1) fail(Errc::invalid_argument, "gauss_legendre_fixed: need at least one node");
  const GaussRule& rule = gauss_rule(n, ctx.working_bits());
  const Real mid = (a + b) / 2, half = (b - a) / 2;
  Real sum(0);
  for (std::size_t i = 0; i < rule.x.size(); ++i) {
    const Real dx = half * rule.x[i];
    if (n % 2 == 1 && i + 1 == rule.x.size()) {
      sum += rule.w[i] * f(mid);  // centre node
    } else {
      sum += rule.w[i] * (f(mid + dx) + f(mid - dx));
    }
  }
  return sum * half;
}

Real integrate_gauss_legendre(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                              const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real tol = ctx.tolerance(3);
  Real prev = gauss_legendre_fixed(f, a, b, 20, ctx);
  for (int n = 40; n <= 1280; n *= 2) {
    Real cur = gauss_legendre_fixed(f, a, b, n, ctx);
    if (abs(cur - prev) <= tol * max(abs(cur), Real(1))) return cur;
    prev = std::move(cur);
  }
  fail(Errc::no_convergence, "integrate_gauss_legendre: rules up to 1280 nodes disagree");
}

}  // namespace walklab
