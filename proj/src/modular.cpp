#include "walklab/modular.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "walklab/quadrature.hpp"
#include "walklab/special.hpp"

namespace walklab {

namespace {

Complex expi(const Real& theta) { return Complex(cos(theta), sin(theta)); }

// q = exp(2 pi i tau)
Complex nome(const Complex& tau, const Real& pi) {
  return exp(tau.real() * 2 * pi * Complex(Real(0), Real(1))) * exp(-2 * pi * tau.imag());
}

Complex pentagonal(const Complex& tau, const PrecisionContext& ctx) {
  const Real& pi = ctx.pi();
  const Complex q = nome(tau, pi);
  const Real eps = tenth_power(ctx.working_digits() + 2);
  // 1 + sum_{k>=1} (-1)^k (q^{k(3k-1)/2} + q^{k(3k+1)/2})
  Complex sum(Real(1));
  Complex qk = q;          // q^k
  Complex lead(Real(1));   // q^{k(3k-1)/2}
  Complex q3k_minus = q;   // q^{3k-2} at k = 1 is q
  for (long k = 1; k < 100000; ++k) {
    if (k > 1) q3k_minus = q3k_minus * q * q * q;
    lead = lead * q3k_minus;   // q^{k(3k-1)/2}
    Complex other = lead * qk; // q^{k(3k+1)/2}
    Complex term = lead + other;
    if (k % 2) sum -= term;
    else sum += term;
    if (abs(lead) <= eps) break;
    qk = qk * q;
  }
  return exp(tau * pi * Complex(Real(0), Real(1)) / Real(12)) * sum;
}

}  // namespace

Complex eta(const Complex& tau_in, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(tau_in.imag() > 0)) fail(Errc::domain_error, "eta: tau must lie in the upper half-plane");
  const Real& pi = ctx.pi();
  Complex tau = tau_in;
  Complex factor(Real(1));
  for (int iter = 0; iter < 1000; ++iter) {
    Real n = round(tau.real());
    if (!n.is_zero()) {
      tau.real() -= n;
      // eta(tau + n) = e^{pi i n/12} eta(tau)
      factor = factor * expi(pi * n / 12);
    }
    if (norm(tau) >= Real(1) - tenth_power(ctx.working_digits())) break;
    // eta(tau) = eta(-1/tau) / sqrt(-i tau)
    factor = factor / sqrt(Complex(tau.imag(), -tau.real()));
    tau = Complex(Real(-1)) / tau;
  }
  return factor * pentagonal(tau, ctx);
}

struct EtaQuotient::Cache {
  std::mutex mu;
  std::vector<mpz_class> coeffs;
};

EtaQuotient::EtaQuotient(std::vector<EtaFactor> factors, mpq_class scalar)
    : factors_(std::move(factors)), scalar_(std::move(scalar)), cache_(std::make_shared<Cache>()) {
  for (const auto& f : factors_)
    if (f.m < 1) fail(Errc::invalid_argument, "eta quotient multipliers must be positive");
}

int EtaQuotient::offset() const noexcept {
  int s = 0;
  for (const auto& f : factors_) s += f.m * f.e;
  return s;
}

int EtaQuotient::weight_twice() const noexcept {
  int s = 0;
  for (const auto& f : factors_) s += f.e;
  return s;
}

std::vector<mpz_class> EtaQuotient::coefficients(std::size_t n) const {
  std::lock_guard lock(cache_->mu);
  auto& c = cache_->coeffs;
  if (c.size() < n) {
    const std::size_t len = std::max(n, 2 * c.size());
    std::vector<mpz_class> a(len, 0);
    a[0] = 1;
    for (const auto& f : factors_) {
      for (std::size_t step = f.m; step < len; step += f.m) {
        for (int r = 0; r < std::abs(f.e); ++r) {
          if (f.e > 0) {
            for (std::size_t i = len - 1; i >= step; --i) a[i] -= a[i - step];
          } else {
            for (std::size_t i = step; i < len; ++i) a[i] += a[i - step];
          }
        }
      }
    }
    c = std::move(a);
  }
  return std::vector<mpz_class>(c.begin(), c.begin() + n);
}

Complex EtaQuotient::eval(const Complex& tau, const PrecisionContext& ctx) const {
  PrecisionScope scope(ctx);
  Complex r{Real(scalar_)};
  for (const auto& f : factors_) r = r * walklab::pow(eta(tau * Real(f.m), ctx), f.e);
  return r;
}

template <typename Term>
Complex EtaQuotient::sum_series(const Complex& tau, const PrecisionContext& ctx, Term term) const {
  PrecisionScope scope(ctx);
  if (!(tau.imag() > 0)) fail(Errc::domain_error, "eta quotient: tau must lie in the upper half-plane");
  const Real& pi = ctx.pi();
  const Complex q = nome(tau, pi);
  const Real aq = abs(q);
  if (aq > Real(0.995)) fail(Errc::budget_exceeded, "eta quotient q-expansion: |q| too close to 1");
  const Real eps = tenth_power(ctx.working_digits() + 2);
  std::size_t n = static_cast<std::size_t>(ctx.working_digits() * std::log(10.0) / (-std::log(aq.to_double()))) + 16;
  while (true) {
    if (n > 200000) fail(Errc::budget_exceeded, "eta quotient q-expansion needs more than 200000 terms");
    const auto c = coefficients(n);
    Complex sum;
    Complex qn(Real(1));
    Real tail(0);
    for (std::size_t k = 0; k < n; ++k) {
      if (c[k] != 0) {
        Complex t = term(k, Real(c[k])) * qn;
        sum += t;
        if (k + 8 >= n) tail = max(tail, abs(t));
      }
      qn = qn * q;
    }
    if (tail <= eps * max(abs(sum), eps)) {
      const Complex lead = exp(tau * Real(offset()) * pi * Complex(Real(0), Real(1)) / Real(12));
      return sum * lead * Real(scalar_);
    }
    n *= 2;
  }
}

Complex EtaQuotient::eval_series(const Complex& tau, const PrecisionContext& ctx) const {
  return sum_series(tau, ctx, [](std::size_t, const Real& c) { return Complex(c); });
}

Complex EtaQuotient::derivative(const Complex& tau, const PrecisionContext& ctx) const {
  PrecisionScope scope(ctx);
  const Complex two_pi_i(Real(0), 2 * ctx.pi());
  mpq_class off(offset(), 24);
  off.canonicalize();
  return sum_series(tau, ctx, [&](std::size_t k, const Real& c) {
           return Complex(c * Real(mpq_class(k) + off));
         }) *
         two_pi_i;
}

EtaQuotient EtaQuotient::operator*(const EtaQuotient& o) const {
  std::vector<EtaFactor> f = factors_;
  for (const auto& g : o.factors_) {
    auto it = std::find_if(f.begin(), f.end(), [&](const EtaFactor& h) { return h.m == g.m; });
    if (it != f.end()) it->e += g.e;
    else f.push_back(g);
  }
  std::erase_if(f, [](const EtaFactor& h) { return h.e == 0; });
  std::sort(f.begin(), f.end(), [](const EtaFactor& a, const EtaFactor& b) { return a.m < b.m; });
  return EtaQuotient(std::move(f), scalar_ * o.scalar_);
}

EtaQuotient EtaQuotient::pow(int k) const {
  std::vector<EtaFactor> f = factors_;
  for (auto& g : f) g.e *= k;
  mpq_class s = 1;
  for (int i = 0; i < std::abs(k); ++i) s *= scalar_;
  if (k < 0) s = 1 / s;
  return EtaQuotient(std::move(f), s);
}

EtaQuotient named_quotient(const std::string& name) {
  if (name == "x3") return EtaQuotient({{1, 2}, {2, -4}, {3, -2}, {6, 4}}, 3);
  if (name == "p3_weight") return EtaQuotient({{1, -1}, {2, 2}, {3, -1}, {6, 2}});
  if (name == "dx3") return EtaQuotient({{1, 6}, {2, -6}, {3, 2}, {6, 2}});
  if (name == "eis3_combo") return EtaQuotient({{1, 5}, {2, -4}, {3, 1}, {6, 4}});
  if (name == "eis3_dual") return EtaQuotient({{1, 4}, {2, 1}, {3, -4}, {6, 5}});
  if (name == "x4") return EtaQuotient({{1, 3}, {2, -6}, {3, 3}, {4, 3}, {6, -6}, {12, 3}}, 8);
  if (name == "p4_weight") return EtaQuotient({{1, -1}, {2, 4}, {3, -1}, {4, -1}, {6, 4}, {12, -1}});
  if (name == "x8") return EtaQuotient({{1, 4}, {2, -12}, {4, 8}}, 16);
  if (name == "x8_complement") return EtaQuotient({{1, 16}, {2, -24}, {4, 8}});
  if (name == "F8") return EtaQuotient({{1, -4}, {2, 10}, {4, -4}});
  if (name == "logderiv3") return EtaQuotient({{1, 4}, {2, -2}, {3, 4}, {6, -2}}, mpq_class(1, 2));
  if (name == "eta") return EtaQuotient({{1, 1}});
  fail(Errc::not_found, "unknown eta quotient '" + name + "'");
}

std::vector<std::string> named_quotient_list() {
  return {"dx3", "eis3_combo", "eis3_dual", "eta", "F8", "logderiv3", "p3_weight", "p4_weight", "x3", "x4", "x8",
          "x8_complement"};
}

int chi3(long m) {
  long r = ((m % 3) + 3) % 3;
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

std::vector<mpz_class> eisenstein_coefficients(EisensteinKind kind, std::size_t n) {
  std::vector<mpz_class> a(n, 0);
  if (n == 0) return a;
  if (kind != EisensteinKind::E3_chi3) a[0] = 1;
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t N = m; N < n; N += m) {
      const long d = static_cast<long>(m), co = static_cast<long>(N / m);
      switch (kind) {
        case EisensteinKind::E1_chi3: a[N] += 6 * chi3(d); break;
        case EisensteinKind::E3_chi3: a[N] += chi3(d) * co * co; break;
        case EisensteinKind::E3_chi3_tilde: a[N] -= 9 * chi3(d) * d * d; break;
      }
    }
  }
  return a;
}

Complex eisenstein(EisensteinKind kind, const Complex& tau, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(tau.imag() > 0)) fail(Errc::domain_error, "eisenstein: tau must lie in the upper half-plane");
  const Complex q = nome(tau, ctx.pi());
  const Real aq = abs(q);
  if (aq > Real(0.99)) fail(Errc::budget_exceeded, "eisenstein: |q| too close to 1");
  const Real eps = tenth_power(ctx.working_digits() + 2);
  std::size_t n = static_cast<std::size_t>(ctx.working_digits() * std::log(10.0) / (-std::log(aq.to_double()))) + 16;
  while (true) {
    const auto a = eisenstein_coefficients(kind, n);
    Complex sum, qn(Real(1));
    Real tail(0);
    for (std::size_t k = 0; k < n; ++k) {
      if (a[k] != 0) {
        Complex t = qn * Real(a[k]);
        sum += t;
        if (k + 8 >= n) tail = max(tail, abs(t));
      }
      qn = qn * q;
    }
    if (tail <= eps * max(abs(sum), eps)) return sum;
    if (n > 100000) fail(Errc::budget_exceeded, "eisenstein: too many terms");
    n *= 2;
  }
}

namespace {

const EtaQuotient& quotient(const char* name) {
  // Named quotients are immutable apart from their coefficient caches, which
  // are internally synchronised.
  static std::mutex mu;
  static std::vector<std::pair<std::string, std::unique_ptr<EtaQuotient>>> table;
  std::lock_guard lock(mu);
  for (auto& [k, v] : table)
    if (k == name) return *v;
  table.emplace_back(name, std::make_unique<EtaQuotient>(named_quotient(name)));
  return *table.back().second;
}

Complex axis_point(const Real& y) { return Complex(Real(0), y); }

Real y_junction() { return Real(1) / (2 * sqrt(Real(3))); }

}  // namespace

Real p3_cumulative_series(const Real& y, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(y > 0)) fail(Errc::domain_error, "p3_cumulative_series: y must be positive");
  const Real& pi = ctx.pi();
  const Real eps = tenth_power(ctx.working_digits() + 2);
  if (y * y * 6 >= Real(1)) {
    // (3 sqrt3/pi) (S(q) - 4 S(q^2)), S(q) = sum_N q^N sum_{m|N} chi(m) N/m^2
    const Real q = exp(-2 * pi * y);
    std::size_t n = static_cast<std::size_t>(ctx.working_digits() * std::log(10.0) / (2 * M_PI * y.to_double())) + 16;
    while (true) {
      std::vector<mpq_class> s(n, 0);
      for (std::size_t m = 1; m < n; ++m)
        for (std::size_t N = m; N < n; N += m) {
          mpq_class t(mpz_class(chi3(static_cast<long>(m)) * static_cast<long>(N)), mpz_class(static_cast<unsigned long>(m * m)));
          t.canonicalize();
          s[N] += t;
        }
      Real sum(0), qn(1), tail(0);
      for (std::size_t N = 1; N < n; ++N) {
        qn *= q;
        mpq_class c = s[N];
        if (N % 2 == 0) c -= 4 * s[N / 2];
        if (c == 0) continue;
        Real t = Real(c) * qn;
        sum += t;
        if (N + 8 >= n) tail = max(tail, abs(t));
      }
      if (tail <= eps * abs(sum)) return 3 * sqrt(Real(3)) / pi * sum;
      n *= 2;
      if (n > 100000) fail(Errc::budget_exceeded, "p3_cumulative_series: too many terms");
    }
  }
  // The axis carries x over (0, 1) only and P3(1) = 1/4, so
  // 1/4 - P3 = 24 sum e_n q'^n (T/(2 pi n) + 1/(2 pi n)^2), T = 1/(6y), from
  // the weight 3 combination transformed by tau -> -1/(6 tau).
  const Real T = Real(1) / (6 * y);
  const Real q = exp(-2 * pi * T);
  const EtaQuotient& dual = quotient("eis3_dual");
  std::size_t n = static_cast<std::size_t>(ctx.working_digits() * std::log(10.0) / (2 * M_PI * T.to_double())) + 16;
  while (true) {
    const auto c = dual.coefficients(n);  // e_{k+1} = c_k
    Real sum(0), qn(1), tail(0);
    for (std::size_t k = 0; k < n; ++k) {
      qn *= q;
      if (c[k] == 0) continue;
      const Real tn = 2 * pi * Real(static_cast<long>(k + 1));
      Real t = Real(c[k]) * qn * (T / tn + Real(1) / (tn * tn));
      sum += t;
      if (k + 8 >= n) tail = max(tail, abs(t));
    }
    if (tail <= eps * max(abs(sum), eps)) return Real(1) / 4 - 24 * sum;
    n *= 2;
    if (n > 100000) fail(Errc::budget_exceeded, "p3_cumulative_series: too many terms");
  }
}

Real p3_cumulative_product(const Real& y, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(y > 0)) fail(Errc::domain_error, "p3_cumulative_product: y must be positive");
  const Real& pi = ctx.pi();
  const Real q = exp(-2 * pi * y);
  const Complex w = expi(2 * pi / 3), wb = conj(w);
  const Real eps = tenth_power(ctx.working_digits() + 2);
  // L = sum_n n [4 Log(1 - w q^{2n}) + Log(1 - wb q^n) - 4 Log(1 - wb q^{2n}) - Log(1 - w q^n)]
  // satisfies P3 = -(3i/pi) L; the prefactor 9i/pi gives -3 P3.
  Complex sum;
  Real qn(1);
  const Complex one(Real(1));
  for (long n = 1; n < 1000000; ++n) {
    qn *= q;
    const Real q2n = qn * qn;
    Complex t = Real(4) * log(one - w * q2n) + log(one - wb * qn) - Real(4) * log(one - wb * q2n) - log(one - w * qn);
    t = t * Real(n);
    sum += t;
    if (abs(t) <= eps * max(abs(sum), eps)) break;
  }
  Complex r = Complex(Real(0), -3 / pi) * sum;
  return r.real();
}

Real p3_cumulative_integral(const Real& y, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const EtaQuotient& e = quotient("eis3_combo");
  const PathSegment seg = PathSegment::axis_to_infinity(y, 1.0, ctx);
  // tau = i t, d tau = i dt: integral_{i inf}^{iy} E d tau = -i integral_y^inf E(it) dt
  Complex v = integrate_path([&](const Complex& tau) { return e.eval(tau, ctx); }, seg, ctx);
  // v = i * integral_y^Y E(it) dt
  return 6 * sqrt(Real(3)) * v.imag();
}

P3Point p3_parametrisation(const Real& y, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(y > 0)) fail(Errc::domain_error, "p3_parametrisation: y must be positive");
  const Complex tau = axis_point(y);
  P3Point r;
  r.x = quotient("x3").eval(tau, ctx).real();
  r.p3 = 2 * sqrt(Real(3)) / ctx.pi() * quotient("p3_weight").eval(tau, ctx).real();
  r.dx_dtau = quotient("x3").derivative(tau, ctx);
  r.P3 = p3_cumulative_series(y, ctx);
  return r;
}

P4Point p4_on_axis(const Real& y, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(y > 0)) fail(Errc::domain_error, "p4_on_axis: y must be positive");
  const Real yj = y_junction();
  // Work on the upper leg, where the q-expansions converge fast; the lower
  // leg point y maps to 1/(12 y) with the same x and p_4.
  const bool lower = y < yj;
  const Real yu = lower ? Real(1) / (12 * y) : y;
  const Complex tu = axis_point(yu);
  P4Point r;
  r.tau = axis_point(y);
  r.x = quotient("x4").eval_series(tu, ctx).real();
  r.p4 = 12 * yu / ctx.pi() * quotient("p4_weight").eval_series(tu, ctx).real();
  Complex d = quotient("x4").derivative(tu, ctx);
  // x(tau) = x(-1/(12 tau)), so x'(tau) = x'(tau_u) / (12 tau^2) with tau^2 = -y^2.
  if (lower) d = d / (Real(-12) * y * y);
  r.dx_dtau = d;
  return r;
}

P4Point p4_on_arc(const Real& theta, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real lo = Real(1) / 2, hi = Real(5) / 6;
  if (theta < lo || theta > hi) fail(Errc::domain_error, "p4_on_arc: theta must lie in [1/2, 5/6]");
  const Real r0 = Real(1) / (2 * sqrt(Real(3)));
  const Complex tau = expi(ctx.pi() * theta) * r0;
  P4Point r;
  r.tau = tau;
  r.x = quotient("x4").eval_series(tau, ctx).real();
  const Complex one(Real(1));
  const Complex w = (one + Real(6) * tau + Real(12) * tau * tau) * Complex(Real(0), Real(-2)) / ctx.pi();
  r.p4 = (w * quotient("p4_weight").eval_series(tau, ctx)).real();
  r.dx_dtau = quotient("x4").derivative(tau, ctx);
  return r;
}

AtkinLehnerReport atkin_lehner_checks(const std::vector<Complex>& samples, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const EtaQuotient& x = quotient("x4");
  const EtaQuotient& p = quotient("p4_weight");
  AtkinLehnerReport rep;
  rep.min_digits = ctx.working_digits();
  rep.unscaled_form_digits = ctx.working_digits();
  const Complex one(Real(1));
  int idx = 0;
  for (const Complex& tau : samples) {
    const std::string tag = "#" + std::to_string(idx++);
    const Complex w12 = Complex(Real(-1)) / (Real(12) * tau);
    const Complex w6 = (Real(6) * tau - Real(5)) / (Real(12) * tau - Real(6));
    const Complex xt = x.eval(tau, ctx);
    const Complex pt = p.eval(tau, ctx);
    const Complex pw = p.eval(w12, ctx);
    int d1 = digits_agreed(x.eval(w12, ctx), xt);
    int d2 = digits_agreed(x.eval(w6, ctx) * xt, Complex(Real(-8)));
    int d3 = digits_agreed(pw, Real(-12) * tau * tau * pt);
    int d4 = digits_agreed(pw, Real(-1) * tau * tau * pt);
    rep.relations.push_back({"x(w12 tau) = x(tau) " + tag, d1});
    rep.relations.push_back({"x(w6 tau) x(tau) = -8 " + tag, d2});
    rep.relations.push_back({"p(w12 tau) = -12 tau^2 p(tau) " + tag, d3});
    rep.min_digits = std::min({rep.min_digits, d1, d2, d3});
    rep.unscaled_form_digits = std::min(rep.unscaled_form_digits, d4);
  }
  return rep;
}

Level8Point level8_parametrisation(const Real& y, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(y > 0)) fail(Errc::domain_error, "level8_parametrisation: y must be positive");
  const Complex tau = axis_point(y);
  Level8Point r;
  r.x = quotient("x8").eval(tau, ctx).real();
  const Real m = r.x * r.x / 16;
  const Real comp = quotient("x8_complement").eval(tau, ctx).real();
  r.complement_digits = digits_agreed(Real(1) - m, comp);
  const Real f_eta = quotient("F8").eval(tau, ctx).real();
  const Real f_hyp = hyp_2f1_half_complement(comp, ctx);  // F(x^2/16) from its complement
  r.f_digits = digits_agreed(f_hyp, f_eta);
  // F(1 - x^2/16) = -2 i tau F(x^2/16) = 2 y F(x^2/16)
  const Real f_comp = m < 1 ? hyp_2f1_half_complement(m, ctx) : Real(0);
  r.relation_digits = m < 1 && m > 0 ? digits_agreed(f_comp, 2 * y * f_eta) : 0;
  return r;
}

Real x_on_axis(AxisMap which, const Real& y, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  switch (which) {
    case AxisMap::p3: return quotient("x3").eval(axis_point(y), ctx).real();
    case AxisMap::p4: return p4_on_axis(y, ctx).x;
    case AxisMap::level8: return quotient("x8").eval(axis_point(y), ctx).real();
  }
  return Real(0);
}

Real invert_x_on_axis(AxisMap which, const Real& target, const PrecisionContext& ctx, AxisLeg leg) {
  PrecisionScope scope(ctx);
  const Real yj = y_junction();
  Real sup;
  switch (which) {
    case AxisMap::p3: sup = 1; break;
    case AxisMap::p4: sup = 2; break;
    case AxisMap::level8: sup = 4; break;
  }
  if (!(target > 0) || target > sup || (which != AxisMap::p4 && target == sup))
    fail(Errc::domain_error, "invert_x_on_axis: target " + target.to_string(15) + " outside the image of the axis");
  if (which == AxisMap::p4 && target == sup) return yj;

  // Every map is decreasing in y on the leg searched here (the p4 map on its
  // upper leg).
  auto g = [&](const Real& y) { return x_on_axis(which, y, ctx); };
  Real lo = which == AxisMap::p4 ? yj : Real(1) / 2;
  Real hi = which == AxisMap::p4 ? 2 * yj : Real(1);
  Real glo = g(lo), ghi = g(hi);
  for (int i = 0; i < 200 && !(glo >= target); ++i) {
    if (which == AxisMap::p4) fail(Errc::domain_error, "invert_x_on_axis: non-bracketing");
    hi = lo;
    ghi = glo;
    lo = lo / 2;
    glo = g(lo);
  }
  for (int i = 0; i < 200 && !(ghi <= target); ++i) {
    lo = hi;
    glo = ghi;
    hi = hi * 2;
    ghi = g(hi);
  }
  if (!(glo >= target) || !(ghi <= target)) fail(Errc::no_convergence, "invert_x_on_axis: could not bracket target");

  // Monotonicity on the bracket.
  {
    Real prev = glo;
    for (int k = 1; k <= 16; ++k) {
      Real v = g(lo + (hi - lo) * Real(k) / Real(16));
      if (v > prev) fail(Errc::domain_error, "invert_x_on_axis: x(iy) is not monotone on the bracket");
      prev = v;
    }
  }

  // Illinois-style regula falsi with bisection fallback.
  const Real tol = ctx.tolerance(2) * max(Real(1), abs(target));
  const Real ytol = ldexp(abs(hi), -static_cast<long>(ctx.working_bits()) + 6);
  Real flo = glo - target, fhi = ghi - target;
  Real y = (lo + hi) / 2;
  int side = 0;
  for (int it = 0; it < 400; ++it) {
    Real cand = (flo - fhi).is_zero() ? (lo + hi) / 2 : hi - fhi * (hi - lo) / (fhi - flo);
    if (!(cand > lo && cand < hi) || it % 8 == 7) cand = (lo + hi) / 2;
    y = cand;
    Real fy = g(y) - target;
    if (abs(fy) <= tol || hi - lo <= ytol) break;
    if (fy.sign() > 0) {
      lo = y;
      flo = fy;
      if (side == 1) fhi /= 2;
      side = 1;
    } else {
      hi = y;
      fhi = fy;
      if (side == -1) flo /= 2;
      side = -1;
    }
  }
  if (which == AxisMap::p4 && leg == AxisLeg::lower) return Real(1) / (12 * y);
  return y;
}

}  // namespace walklab
