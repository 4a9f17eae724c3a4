#include "walklab/lfunctions.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "walklab/special.hpp"

namespace walklab {

namespace {

std::vector<CuspFormSpec> build_forms() {
  std::vector<CuspFormSpec> v;
  v.push_back({"f2", {EtaQuotient({{1, 1}, {3, 1}, {5, 1}, {15, 1}})}, 15, 2});
  v.push_back({"f2_tilde", {EtaQuotient({{2, 1}, {4, 1}, {6, 1}, {12, 1}})}, 24, 2});
  v.push_back({"f2_hat", {EtaQuotient({{4, 2}, {8, 2}})}, 32, 2});
  v.push_back({"f3", {EtaQuotient({{1, 3}, {15, 3}}), EtaQuotient({{3, 3}, {5, 3}})}, 15, 3});
  v.push_back({"f4", {EtaQuotient({{1, 2}, {2, 2}, {3, 2}, {6, 2}})}, 6, 4});
  return v;
}

const std::vector<CuspFormSpec>& forms() {
  static const std::vector<CuspFormSpec> v = build_forms();
  return v;
}

// prod_{k>=1} (1 - q^{m k}) truncated to degree < n, as (exponent, sign).
std::vector<std::pair<std::size_t, int>> euler_product_terms(int m, std::size_t n) {
  std::vector<std::pair<std::size_t, int>> t{{0, 1}};
  for (long k = 1;; ++k) {
    const std::size_t e1 = static_cast<std::size_t>(m) * static_cast<std::size_t>(k * (3 * k - 1) / 2);
    if (e1 >= n) break;
    const int sg = k % 2 ? -1 : 1;
    t.push_back({e1, sg});
    const std::size_t e2 = static_cast<std::size_t>(m) * static_cast<std::size_t>(k * (3 * k + 1) / 2);
    if (e2 < n) t.push_back({e2, sg});
  }
  return t;
}

// Coefficients of prod_j prod_k (1 - q^{m_j k})^{e_j}, degree < n.
std::vector<std::int64_t> eta_product_series(const std::vector<EtaFactor>& factors, std::size_t n) {
  std::vector<std::int64_t> a(n, 0);
  a[0] = 1;
  for (const auto& f : factors) {
    const auto p = euler_product_terms(f.m, n);
    for (int rep = 0; rep < std::abs(f.e); ++rep) {
      if (f.e > 0) {
        for (std::size_t i = n; i-- > 0;) {
          std::int64_t s = 0;
          for (const auto& [e, sg] : p) {
            if (e > i) break;
            s += sg * a[i - e];
          }
          a[i] = s;
        }
      } else {
        // b = a / p with p_0 = 1
        for (std::size_t i = 0; i < n; ++i) {
          std::int64_t s = a[i];
          for (std::size_t j = 1; j < p.size() && p[j].first <= i; ++j) s -= p[j].second * a[i - p[j].first];
          a[i] = s;
        }
      }
    }
  }
  return a;
}

struct CoefficientCache {
  std::mutex mu;
  std::map<std::string, std::vector<std::int64_t>> data;
};

CoefficientCache& coefficient_cache() {
  static CoefficientCache c;
  return c;
}

std::vector<std::int64_t> compute_qexp(const CuspFormSpec& form, std::size_t n_max) {
  std::vector<std::int64_t> a(n_max + 1, 0);
  for (const auto& term : form.terms) {
    const int off = term.offset();
    if (off % 24 != 0 || off < 24) fail(Errc::invalid_argument, "qexp: term is not a q-series starting at q^1 or later");
    const std::size_t shift = static_cast<std::size_t>(off / 24);
    if (shift > n_max) continue;
    const auto c = eta_product_series(term.factors(), n_max + 1 - shift);
    const mpz_class num = term.scalar().get_num(), den = term.scalar().get_den();
    if (den != 1 || !num.fits_slong_p()) fail(Errc::invalid_argument, "qexp: scalar must be a small integer");
    const long sc = num.get_si();
    for (std::size_t k = 0; k < c.size(); ++k) a[k + shift] += sc * c[k];
  }
  return a;
}

struct SignCache {
  std::mutex mu;
  std::map<std::string, int> data;
};

SignCache& sign_cache() {
  static SignCache c;
  return c;
}

}  // namespace

const CuspFormSpec& cusp_form(const std::string& name) {
  for (const auto& f : forms())
    if (f.name == name) return f;
  fail(Errc::not_found, "unknown cusp form '" + name + "'");
}

std::vector<std::string> cusp_form_names() {
  std::vector<std::string> v;
  for (const auto& f : forms()) v.push_back(f.name);
  return v;
}

std::vector<std::int64_t> qexp(const CuspFormSpec& form, std::size_t n_max) {
  if (n_max < 1) fail(Errc::invalid_argument, "qexp: n_max must be at least 1");
  auto& cache = coefficient_cache();
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.data.find(form.name);
    if (it != cache.data.end() && it->second.size() > n_max)
      return std::vector<std::int64_t>(it->second.begin(), it->second.begin() + static_cast<long>(n_max) + 1);
  }
  auto a = compute_qexp(form, n_max);
  std::lock_guard lock(cache.mu);
  auto& slot = cache.data[form.name];
  if (slot.size() < a.size()) slot = a;
  return a;
}

Complex cusp_form_eval(const CuspFormSpec& form, const Complex& tau, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  Complex s;
  for (const auto& t : form.terms) s += t.eval(tau, ctx);
  return s;
}

Real fricke_ratio(const CuspFormSpec& form, const Real& y, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real N(form.level);
  const Complex lhs = cusp_form_eval(form, Complex(Real(0), Real(1) / (N * y)), ctx);
  const Complex rhs = cusp_form_eval(form, Complex(Real(0), y), ctx);
  const Real scale = pow(sqrt(N), form.weight) * pow(y, form.weight);
  return lhs.real() / (scale * rhs.real());
}

int fricke_sign(const CuspFormSpec& form) {
  auto& cache = sign_cache();
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.data.find(form.name);
    if (it != cache.data.end()) return it->second;
  }
  const auto ctx = make_context(30);
  PrecisionScope scope(ctx);
  int sign = 0;
  for (const char* ys : {"0.3", "0.7", "1.2"}) {
    const Real r = fricke_ratio(form, Real(ys), ctx);
    const int s = r.sign() > 0 ? 1 : -1;
    if (abs(r - Real(s)) > tenth_power(25) || (sign != 0 && s != sign))
      fail(Errc::no_convergence, "fricke_sign: ratio for " + form.name + " is " + r.to_string(20));
    sign = s;
  }
  std::lock_guard lock(cache.mu);
  cache.data[form.name] = sign;
  return sign;
}

Real dirichlet_L_chi3(int s, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (s < 1) fail(Errc::domain_error, "dirichlet_L_chi3: s must be a positive integer");
  const long M = ctx.working_digits() + 10;
  // g(k) = (3k+1)^-s - (3k+2)^-s, summed directly below M.
  Real sum(0);
  for (long k = 0; k < M; ++k) sum += pow(Real(3 * k + 1), -s) - pow(Real(3 * k + 2), -s);
  const Real a(3 * M + 1), b(3 * M + 2);
  if (s == 1)
    sum += log(b / a) / 3;
  else
    sum += (pow(a, 1 - s) - pow(b, 1 - s)) / (3 * (s - 1));
  sum += (pow(a, -s) - pow(b, -s)) / 2;
  // - sum_j B_{2j}/(2j)! g^{(2j-1)}(M)
  const Real eps = tenth_power(ctx.working_digits() + 2);
  Real rising(s);  // s (s+1) ... (s+r-1) 3^r / (2j)! with r = 2j-1
  rising *= 3;
  Real fact(2);
  Real prev_abs;
  for (unsigned j = 1; j < 500; ++j) {
    const int r = static_cast<int>(2 * j - 1);
    if (j > 1) {
      rising *= Real(s + r - 2) * Real(s + r - 1) * 9;
      fact *= Real(2 * j - 1) * Real(2 * j);
    }
    // g^{(r)}(M) = (-1)^r (s)_r 3^r [a^{-s-r} - b^{-s-r}], r odd
    const Real deriv = -rising * (pow(a, -s - r) - pow(b, -s - r));
    const Real term = Real(bernoulli(2 * j)) / fact * deriv;
    const Real at = abs(term);
    if (j > 2 && at > prev_abs) break;
    sum -= term;
    if (at <= eps * abs(sum)) break;
    prev_abs = at;
  }
  return sum;
}

Real incomplete_gamma(int a, const Real& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(x > 0)) fail(Errc::domain_error, "incomplete_gamma: x must be positive");
  if (a >= 1) {
    // (a-1)! e^{-x} sum_{j<a} x^j/j!
    Real term(1), sum(1);
    for (int j = 1; j < a; ++j) {
      term = term * x / j;
      sum += term;
    }
    Real f(1);
    for (int j = 2; j < a; ++j) f *= j;
    return f * exp(-x) * sum;
  }
  // Downward recurrence from Gamma(0, x) = E_1(x) = -Ei(-x); extra bits
  // cover the cancellation in Gamma(a, x) = (Gamma(a+1, x) - x^a e^{-x})/a.
  PrecisionScope wide(ctx.working_bits() + 64 + 8 * static_cast<mpfr_prec_t>(-a));
  Real mx = -x;
  Real g;
  mpfr_eint(g.get(), mx.get(), MPFR_RNDN);
  g = -g;
  const Real ex = exp(-x);
  for (int b = -1; b >= a; --b) g = (g - pow(x, b) * ex) / b;
  PrecisionScope back(ctx);
  return rounded(g);
}

Real cusp_L(const CuspFormSpec& form, int s, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  return cusp_L(form, s, Real(1) / sqrt(Real(form.level)), ctx);
}

Real cusp_L(const CuspFormSpec& form, int s, const Real& t0, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (s < 1) fail(Errc::domain_error, "cusp_L: s must be a positive integer");
  if (!(t0 > 0)) fail(Errc::domain_error, "cusp_L: split point must be positive");
  const int eps_sign = fricke_sign(form);
  const Real& pi = ctx.pi();
  const Real N(form.level);
  const int k = form.weight;
  const Real u0 = Real(1) / (N * t0);
  const double digits = ctx.working_digits() * std::log(10.0) + 10;
  auto terms_for = [&](const Real& t) {
    return static_cast<std::size_t>(digits / (2 * M_PI * t.to_double()) * 1.2) + 20;
  };
  const std::size_t n1 = terms_for(t0), n2 = terms_for(u0);
  if (static_cast<long>(std::max(n1, n2)) > ctx.series_term_cap())
    fail(Errc::budget_exceeded, "cusp_L: needs " + std::to_string(std::max(n1, n2)) + " coefficients");
  const auto a = qexp(form, std::max(n1, n2));

  // int_{t0}^inf f(it) t^{s-1} dt = sum a_n (2 pi n)^{-s} Gamma(s, 2 pi n t0)
  Real upper(0);
  for (std::size_t n = 1; n <= n1; ++n) {
    if (a[n] == 0) continue;
    const Real w = 2 * pi * Real(static_cast<long>(n));
    upper += Real(static_cast<long>(a[n])) * pow(w, -s) * incomplete_gamma(s, w * t0, ctx);
  }
  // int_0^{t0}: t = 1/(N u) turns it into
  // eps N^{k/2 - s} int_{u0}^inf f(iu) u^{k-s-1} du
  Real lower(0);
  for (std::size_t n = 1; n <= n2; ++n) {
    if (a[n] == 0) continue;
    const Real w = 2 * pi * Real(static_cast<long>(n));
    lower += Real(static_cast<long>(a[n])) * pow(w, s - k) * incomplete_gamma(k - s, w * u0, ctx);
  }
  lower *= Real(eps_sign) * pow(sqrt(N), k) / pow(N, s);
  // Lambda(s) = (2 pi)^{-s} Gamma(s) L(f; s)
  Real fact(1);
  for (int j = 2; j < s; ++j) fact *= j;
  return pow(2 * pi, s) / fact * (upper + lower);
}

Real cusp_L_direct(const CuspFormSpec& form, int s, std::size_t n_max, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const auto a = qexp(form, n_max);
  Real sum(0);
  for (std::size_t n = 1; n <= n_max; ++n)
    if (a[n] != 0) sum += Real(static_cast<long>(a[n])) / pow(Real(static_cast<long>(n)), s);
  return sum;
}

Real lprime_conversion(const std::string& form, int k, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real& pi = ctx.pi();
  if (form == "chi3" && k == 1) return 3 * sqrt(Real(3)) / (4 * pi) * dirichlet_L_chi3(2, ctx);
  if (form == "f3" && k == 1) return -6 * pow(sqrt(Real(15)) / (2 * pi), 5) * cusp_L(cusp_form("f3"), 4, ctx);
  if (form == "f4" && k == 1) return -Real(3) / 8 * pow(sqrt(Real(6)) / pi, 6) * cusp_L(cusp_form("f4"), 5, ctx);
  if (form == "f2" && k == 0) return 15 / (4 * pi * pi) * cusp_L(cusp_form("f2"), 2, ctx);
  if (form == "f2" && k == 1) return -Real(225) / (8 * pow(pi, 4)) * cusp_L(cusp_form("f2"), 3, ctx);
  if (form == "f2" && k == 2) return Real(3 * 15 * 15 * 15) / (16 * pow(pi, 6)) * cusp_L(cusp_form("f2"), 4, ctx);
  if (form == "f2_tilde" && k == 1) return -Real(72) / pow(pi, 4) * cusp_L(cusp_form("f2_tilde"), 3, ctx);
  if (form == "f2_hat" && k == 1) return -Real(128) / pow(pi, 4) * cusp_L(cusp_form("f2_hat"), 3, ctx);
  fail(Errc::not_found, "lprime_conversion: no conversion for " + form + " at -" + std::to_string(k));
}

}  // namespace walklab
