#include "walklab/special.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace walklab {

mpq_class HypergeometricSpec::excess() const {
  mpq_class s = 0;
  for (const auto& b : lower) s += b;
  for (const auto& a : upper) s -= a;
  return s;
}

namespace {

bool non_positive_integer(const mpq_class& q) { return q <= 0 && q.get_den() == 1; }

Real eps_of(const PrecisionContext& ctx) { return tenth_power(ctx.working_digits()); }

// Direct summation of sum t_n z^n. Returns the partial sum and leaves the
// next term and its index in (term, n).
struct DirectSum {
  Real sum;
  Real term;
  long n = 0;
};

void advance(const HypergeometricSpec& spec, const Real& z, DirectSum& st) {
  Real num(1), den(st.n + 1);
  for (const auto& a : spec.upper) num *= Real(a) + Real(st.n);
  for (const auto& b : spec.lower) den *= Real(b) + Real(st.n);
  st.term = st.term * num / den * z;
  ++st.n;
}

Real sum_inside_disk(const HypergeometricSpec& spec, const Real& z, const PrecisionContext& ctx) {
  const Real eps = eps_of(ctx);
  const Real az = abs(z);
  double largest = 0;
  for (const auto& a : spec.upper) largest = std::max(largest, std::abs(a.get_d()));
  for (const auto& b : spec.lower) largest = std::max(largest, std::abs(b.get_d()));
  // For p <= q the series is entire and the term ratio decays like |z|/n,
  // so past n ~ 2|z| the ratio alone bounds the tail.
  const bool entire = spec.upper.size() <= spec.lower.size();
  const long settle = static_cast<long>(largest) + 2 + (entire ? static_cast<long>(2 * az.to_double()) : 0);

  DirectSum st{Real(1), Real(1), 0};
  while (true) {
    Real prev = st.term;
    advance(spec, z, st);
    if (st.term.is_zero()) return st.sum;  // terminating series
    st.sum += st.term;
    if (st.n > settle) {
      Real ratio = prev.is_zero() ? Real(0) : abs(st.term / prev);
      Real rho = entire ? ratio : max(ratio, az);
      if (rho < 1) {
        Real tail = abs(st.term) * rho / (Real(1) - rho);
        if (tail <= eps * abs(st.sum)) return st.sum;
      }
    }
    if (st.n >= ctx.series_term_cap())
      fail(Errc::budget_exceeded, "hypergeometric series exceeded the term cap of " +
                                      std::to_string(ctx.series_term_cap()) + " terms at z = " + z.to_string(12));
  }
}

// Tail sum_{n >= N} t_n of a z = 1 hypergeometric series. With x = 1/N the
// tail is t_N N g(x) where g solves g(x) - h(x) g(x/(1+x)) = x and
// h(x) = (1+x) prod(1 + a x)/prod(1 + b x) (b running over the lower
// parameters and 1). The expansion is asymptotic; its terms are summed until
// they stop decreasing.
bool asymptotic_tail(const HypergeometricSpec& spec, long N, const Real& tN, const PrecisionContext& ctx,
                     Real& tail) {
  const Real eps = eps_of(ctx);
  const int K = 2 * ctx.working_digits() + 40;
  const Real s(spec.excess());

  std::vector<Real> h(K + 2, Real(0));
  h[0] = 1;
  h[1] = 1;
  auto mul_linear = [&](const Real& c) {  // h *= (1 + c x)
    for (int i = K + 1; i >= 1; --i) h[i] += c * h[i - 1];
  };
  auto div_linear = [&](const Real& c) {  // h /= (1 + c x)
    for (int i = 1; i <= K + 1; ++i) h[i] -= c * h[i - 1];
  };
  for (const auto& a : spec.upper) mul_linear(Real(a));
  for (const auto& b : spec.lower) div_linear(Real(b));
  div_linear(Real(1));

  // binom[l][j] = C(l, j) as Reals, built on demand per row.
  std::vector<Real> g(K + 1, Real(0)), G(K + 2, Real(0));
  Real series(0), invN = Real(1) / Real(N), xpow(1);
  Real last_mag;
  bool have_last = false;
  for (int m = 0; m <= K; ++m) {
    // [x^{m+1}] (g - h G) with g_m still zero.
    Real e(0);
    for (int i = 0; i <= m + 1; ++i) e -= h[i] * G[m + 1 - i];
    Real target = m == 0 ? Real(1) : Real(0);
    g[m] = (target - e) / (Real(m) + s);
    // Fold g_m into G_l = [x^l] g(x/(1+x)) for l >= m.
    if (m == 0) {
      G[0] += g[0];
    } else {
      mpz_class c = 1;  // C(l-1, l-m) starting at l = m
      for (int l = m; l <= K + 1; ++l) {
        if (l > m) {
          c *= (l - 1);
          c /= (l - m);
        }
        Real term = Real(c) * g[m];
        if ((l - m) % 2) G[l] -= term;
        else G[l] += term;
      }
    }
    Real contrib = g[m] * xpow;
    Real mag = abs(contrib);
    if (have_last && mag > last_mag && m > 4) return false;  // asymptotic divergence before convergence
    series += contrib;
    if (m > 2 && mag <= eps * abs(series)) {
      tail = tN * Real(N) * series;
      return true;
    }
    last_mag = mag;
    have_last = true;
    xpow *= invN;
  }
  return false;
}

Real sum_at_one(const HypergeometricSpec& spec, const PrecisionContext& ctx) {
  double largest = 0;
  for (const auto& a : spec.upper) largest = std::max(largest, std::abs(a.get_d()));
  for (const auto& b : spec.lower) largest = std::max(largest, std::abs(b.get_d()));
  long N = std::max<long>(static_cast<long>(4 * largest) + 20, ctx.working_digits());
  const Real one(1);
  for (int attempt = 0; attempt < 8; ++attempt, N *= 2) {
    if (N > ctx.series_term_cap()) break;
    DirectSum st{Real(1), Real(1), 0};
    while (st.n < N) {
      advance(spec, one, st);
      if (st.term.is_zero()) return st.sum;
      if (st.n < N) st.sum += st.term;
    }
    Real tail;
    if (asymptotic_tail(spec, N, st.term, ctx, tail)) return st.sum + tail;
  }
  fail(Errc::no_convergence, "hypergeometric series at z = 1: tail expansion did not converge");
}

}  // namespace

Real hyp_pfq(const HypergeometricSpec& spec, const Real& z, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  for (const auto& b : spec.lower)
    if (non_positive_integer(b)) fail(Errc::pole, "hyp_pfq: lower parameter " + b.get_str() + " is a pole");
  bool terminating = std::any_of(spec.upper.begin(), spec.upper.end(), non_positive_integer);
  if (terminating || spec.upper.size() <= spec.lower.size()) return sum_inside_disk(spec, z, ctx);
  if (spec.upper.size() > spec.lower.size() + 1)
    fail(Errc::divergence, "hyp_pfq: p > q + 1 has zero radius of convergence");
  const Real az = abs(z);
  if (az < 1) return sum_inside_disk(spec, z, ctx);
  if (z == Real(1)) {
    if (spec.excess() <= 0)
      fail(Errc::divergence, "hyp_pfq: series diverges at z = 1 (parameter excess " + spec.excess().get_str() + ")");
    return sum_at_one(spec, ctx);
  }
  fail(Errc::divergence, "hyp_pfq: |z| >= 1 outside the convergent boundary point z = 1");
}

Real agm(const Real& a0, const Real& b0, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  Real a = a0, b = b0;
  const Real eps = ldexp(Real(1), -static_cast<long>(ctx.working_bits()) + 4);
  for (int it = 0; it < 200; ++it) {
    if (abs(a - b) <= eps * abs(a)) break;
    Real an = (a + b) / 2;
    b = sqrt(a * b);
    a = std::move(an);
  }
  return (a + b) / 2;
}

Real hyp_2f1_half(const Real& m, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(m >= 0) || !(m < 1)) fail(Errc::domain_error, "hyp_2f1_half: argument must lie in [0, 1)");
  return hyp_2f1_half_complement(Real(1) - m, ctx);
}

Real hyp_2f1_half_complement(const Real& c, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(c > 0) || !(c <= 1)) fail(Errc::domain_error, "hyp_2f1_half_complement: complement must lie in (0, 1]");
  return Real(1) / agm(Real(1), sqrt(c), ctx);
}

Real cubic_agm(const Real& a0, const Real& b0, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  Real a = a0, b = b0;
  const Real eps = ldexp(Real(1), -static_cast<long>(ctx.working_bits()) + 4);
  for (int it = 0; it < 200; ++it) {
    if (abs(a - b) <= eps * abs(a)) break;
    Real an = (a + 2 * b) / 3;
    b = cbrt(b * (a * a + a * b + b * b) / 3);
    a = std::move(an);
  }
  return (a + 2 * b) / 3;
}

Real hyp_2f1_third_complement(const Real& c, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(c > 0) || !(c <= 1)) fail(Errc::domain_error, "hyp_2f1_third_complement: complement must lie in (0, 1]");
  return Real(1) / cubic_agm(Real(1), cbrt(c), ctx);
}

Real bessel_i0(const Real& t, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (t < 0) fail(Errc::domain_error, "bessel_i0: argument must be non-negative");
  const Real x = t * t / 4;
  const Real eps = eps_of(ctx);
  Real term(1), sum(1);
  for (long k = 1;; ++k) {
    term = term * x / Real(k * k);
    sum += term;
    if (term <= eps * sum) break;
  }
  return sum;
}

Real bessel_k0(const Real& t, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(t > 0)) fail(Errc::domain_error, "bessel_k0: argument must be positive");
  const double td = t.to_double();
  const double switchover = std::max(30.0, ctx.working_digits() * std::log(10.0) / 2);
  if (td > switchover) {
    // sqrt(pi/(2t)) e^{-t} sum_k (-1)^k ((2k-1)!!)^2 / (k! (8t)^k)
    const Real eps = eps_of(ctx);
    Real term(1), sum(1);
    const Real eight_t = 8 * t;
    for (long k = 0; k < 10000; ++k) {
      Real next = -term * Real((2 * k + 1) * (2 * k + 1)) / (Real(k + 1) * eight_t);
      if (abs(next) >= abs(term)) break;
      term = std::move(next);
      sum += term;
      if (abs(term) <= eps * abs(sum)) break;
    }
    return sqrt(ctx.pi() / (2 * t)) * exp(-t) * sum;
  }
  // -(log(t/2) + gamma) I0(t) + sum (t^2/4)^k/(k!)^2 H_k; the sum cancels
  // against the first term by about 2t/ln 10 digits, so run it wider.
  const mpfr_prec_t extra = static_cast<mpfr_prec_t>(2.0 * td / std::log(2.0)) + 16;
  Real result;
  {
    PrecisionScope wide(ctx.working_bits() + extra);
    Real tw(t);
    const Real x = tw * tw / 4;
    Real euler;
    mpfr_const_euler(euler.get(), MPFR_RNDN);
    Real term(1), i0(1), hsum(0), harmonic(0);
    const Real eps = ldexp(Real(1), -static_cast<long>(ctx.working_bits() + extra));
    for (long k = 1;; ++k) {
      term = term * x / Real(k * k);
      harmonic += Real(1) / Real(k);
      i0 += term;
      Real piece = term * harmonic;
      hsum += piece;
      if (piece <= eps * hsum && term <= eps * i0) break;
    }
    Real v = -(log(tw / 2) + euler) * i0 + hsum;
    result = v;
  }
  return rounded(result);
}

Real legendre_p(unsigned k, const Real& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (k == 0) return Real(1);
  Real p0(1), p1 = x;
  for (unsigned n = 1; n < k; ++n) {
    Real p2 = (Real(2 * n + 1) * x * p1 - Real(n) * p0) / Real(n + 1);
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  return p1;
}

Real arcsin(const Real& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(abs(x) <= 1)) fail(Errc::domain_error, "arcsin: argument outside [-1, 1]");
  return asin(x);
}

Real arccos(const Real& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(abs(x) <= 1)) fail(Errc::domain_error, "arccos: argument outside [-1, 1]");
  return acos(x);
}

mpq_class bernoulli(unsigned n) {
  static std::mutex mu;
  static std::vector<mpq_class> table{mpq_class(1)};
  std::lock_guard lock(mu);
  while (table.size() <= n) {
    const unsigned m = static_cast<unsigned>(table.size());
    mpq_class acc = 0;
    mpz_class c = 1;  // C(m+1, k)
    for (unsigned k = 0; k < m; ++k) {
      acc += mpq_class(c) * table[k];
      c = c * (m + 1 - k) / (k + 1);
    }
    table.push_back(-acc / (m + 1));
  }
  return table[n];
}

Real clausen2(const Real& theta_in, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real two_pi = 2 * ctx.pi();
  Real theta = theta_in - two_pi * floor(theta_in / two_pi);  // [0, 2pi)
  int sign = 1;
  if (theta > ctx.pi()) {
    theta = two_pi - theta;
    sign = -1;
  }
  if (theta.is_zero()) return Real(0);
  // theta - theta log theta + sum_{k>=1} |B_2k| theta^{2k+1} / (2k (2k+1)!)
  const Real eps = eps_of(ctx);
  Real sum = theta - theta * log(theta);
  const Real t2 = theta * theta;
  Real power = theta;   // theta^{2k+1}
  Real fact(1);         // (2k+1)!
  for (unsigned k = 1; k < 2000; ++k) {
    power *= t2;
    fact *= Real(static_cast<long>((2 * k) * (2 * k + 1)));
    mpq_class b = bernoulli(2 * k);
    Real term = Real(mpq_class(abs(b))) * power / (fact * Real(2 * k));
    sum += term;
    if (term <= eps * abs(sum)) break;
  }
  return sign > 0 ? sum : -sum;
}

Real red2_kernel(const Real& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (x < 0 || x > 2) fail(Errc::domain_error, "red2_kernel: x must lie in [0, 2]");
  if (x.is_zero()) return Real(0);
  const Real phi = asin(x / 2);
  return (2 * phi * log(x) + clausen2(2 * phi, ctx)) / ctx.pi();
}

}  // namespace walklab
