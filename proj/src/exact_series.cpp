#include "walklab/exact_series.hpp"

#include <algorithm>

#include "walklab/error.hpp"

namespace walklab {

RationalSeries::RationalSeries(std::size_t order) : coeffs_(order + 1, mpq_class(0)) {}

RationalSeries::RationalSeries(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

RationalSeries RationalSeries::constant(const mpq_class& c, std::size_t order) {
  RationalSeries s(order);
  s[0] = c;
  return s;
}

RationalSeries RationalSeries::polynomial(const std::vector<mpq_class>& coeffs, std::size_t order) {
  RationalSeries s(order);
  for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i) s[i] = coeffs[i];
  return s;
}

namespace {

void require_same_order(const RationalSeries& a, const RationalSeries& b) {
  if (a.order() != b.order()) fail(Errc::invalid_argument, "series truncation orders differ");
}

}  // namespace

RationalSeries& RationalSeries::operator+=(const RationalSeries& o) {
  require_same_order(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

RationalSeries& RationalSeries::operator-=(const RationalSeries& o) {
  require_same_order(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

RationalSeries& RationalSeries::operator*=(const RationalSeries& o) { return *this = *this * o; }

RationalSeries& RationalSeries::operator*=(const mpq_class& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
RationalSeries operator-(RationalSeries a, const RationalSeries& b) { return a -= b; }
RationalSeries operator*(RationalSeries a, const mpq_class& c) { return a *= c; }

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  RationalSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

RationalSeries compose(const RationalSeries& f, const RationalSeries& g) {
  require_same_order(f, g);
  if (g[0] != 0) fail(Errc::domain_error, "compose: inner series must vanish at 0");
  const std::size_t n = f.order();
  // Horner: f0 + g (f1 + g (f2 + ...)).
  RationalSeries r = RationalSeries::constant(f[n], n);
  for (std::size_t k = n; k-- > 0;) {
    r = r * g;
    r[0] += f[k];
  }
  return r;
}

RationalSeries inverse(const RationalSeries& f) {
  if (f[0] == 0) fail(Errc::domain_error, "inverse: series has zero constant term");
  const std::size_t n = f.order();
  RationalSeries r(n);
  mpq_class inv0 = 1 / f[0];
  r[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    mpq_class acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += f[j] * r[k - j];
    r[k] = -acc * inv0;
  }
  return r;
}

RationalSeries sqrt(const RationalSeries& f) {
  mpz_class num = f[0].get_num(), den = f[0].get_den();
  if (sgn(num) <= 0 || !mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    fail(Errc::domain_error, "sqrt: constant term is not the square of a positive rational");
  const std::size_t n = f.order();
  RationalSeries r(n);
  r[0] = mpq_class(sqrt(num), sqrt(den));
  mpq_class half_inv = 1 / (2 * r[0]);
  for (std::size_t k = 1; k <= n; ++k) {
    mpq_class acc = f[k];
    for (std::size_t j = 1; j < k; ++j) acc -= r[j] * r[k - j];
    r[k] = acc * half_inv;
  }
  return r;
}

RationalSeries reversion(const RationalSeries& f) {
  if (f[0] != 0) fail(Errc::domain_error, "reversion: series must vanish at 0");
  if (f.order() < 1 || f[1] == 0) fail(Errc::domain_error, "reversion: linear coefficient must be non-zero");
  const std::size_t n = f.order();
  RationalSeries g(n);
  g[1] = 1 / f[1];
  for (std::size_t k = 2; k <= n; ++k) {
    // g_k enters [t^k] f(g) only through f1 g_k.
    mpq_class c = compose(f, g)[k];
    g[k] = -c / f[1];
  }
  return g;
}

RationalSeries hypergeometric_series(const std::vector<mpq_class>& upper, const std::vector<mpq_class>& lower,
                                     std::size_t order) {
  for (const auto& b : lower) {
    if (b <= 0 && b.get_den() == 1) {
      mpz_class k = -b.get_num();
      if (k < mpz_class(order))
        fail(Errc::pole, "hypergeometric_series: lower parameter " + b.get_str() + " hits a pole within the order");
    }
  }
  RationalSeries r(order);
  mpq_class term = 1;
  r[0] = term;
  for (std::size_t n = 0; n < order; ++n) {
    mpq_class num = 1, den = n + 1;
    for (const auto& a : upper) num *= a + mpq_class(n);
    for (const auto& b : lower) den *= b + mpq_class(n);
    term *= num / den;
    r[n + 1] = term;
  }
  return r;
}

std::string to_string(WalkId id) {
  switch (id) {
    case WalkId::W2: return "w2";
    case WalkId::W3: return "w3";
    case WalkId::W4: return "w4";
    case WalkId::Wtilde: return "wtilde";
    case WalkId::What: return "what";
  }
  return "?";
}

WalkId walk_from_string(const std::string& name) {
  for (WalkId id : {WalkId::W2, WalkId::W3, WalkId::W4, WalkId::Wtilde, WalkId::What})
    if (to_string(id) == name) return id;
  fail(Errc::not_found, "unknown walk '" + name + "'");
}

namespace {

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

mpz_class variant_even_moment(unsigned n) {
  mpz_class sum = 0;
  for (unsigned k = 0; k <= n; ++k) {
    mpz_class a = binomial(n, k) * binomial(2 * k, k);
    sum += a * a;
  }
  return sum;
}

mpz_class walk_even_moment_ct(int steps, unsigned n) {
  if (steps < 2 || steps > 4) fail(Errc::invalid_argument, "walk_even_moment_ct supports N in 2..4");
  const int vars = steps - 1;
  const std::size_t side = n + 1;
  std::size_t cells = 1;
  for (int v = 0; v < vars; ++v) cells *= side;
  if (n > 400 || cells > 4'000'000) fail(Errc::budget_exceeded, "constant-term extraction exceeds the size budget");

  // Coefficients of (1 + x_1 + ... + x_vars)^n on the box [0, n]^vars. The
  // constant term of P^n * P(1/x)^n is then the sum of squared coefficients.
  std::vector<mpz_class> cur(cells, 0), next(cells);
  cur[0] = 1;
  std::vector<std::size_t> stride(vars);
  for (int v = 0; v < vars; ++v) stride[v] = v == 0 ? 1 : stride[v - 1] * side;
  for (unsigned step = 0; step < n; ++step) {
    for (std::size_t idx = 0; idx < cells; ++idx) {
      next[idx] = cur[idx];
      for (int v = 0; v < vars; ++v) {
        std::size_t e = (idx / stride[v]) % side;
        if (e > 0) next[idx] += cur[idx - stride[v]];
      }
    }
    std::swap(cur, next);
  }
  mpz_class sum = 0;
  for (const auto& c : cur) sum += c * c;
  return sum;
}

MomentSequence moment_sequence(WalkId walk, unsigned n_max) {
  MomentSequence seq{walk, {}};
  seq.values.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    switch (walk) {
      case WalkId::W2: seq.values.push_back(walk_even_moment_ct(2, n)); break;
      case WalkId::W3: seq.values.push_back(walk_even_moment_ct(3, n)); break;
      case WalkId::W4: seq.values.push_back(walk_even_moment_ct(4, n)); break;
      case WalkId::Wtilde: seq.values.push_back(variant_even_moment(n)); break;
      case WalkId::What: {
        mpz_class c = binomial(2 * n, n);
        seq.values.push_back(c * c);
        break;
      }
    }
  }
  return seq;
}

Theorem1Forms theorem1_forms(const mpq_class& b, std::size_t order) {
  if (b == 0) fail(Errc::invalid_argument, "theorem1: b must be non-zero");
  const std::size_t T = order;
  const RationalSeries t = RationalSeries::polynomial({0, 1}, T);
  const RationalSeries F = hypergeometric_series({mpq_class(1, 2), mpq_class(1, 2)}, {mpq_class(1)}, T);

  // (b + t)(1 + b t)
  const RationalSeries d1 = RationalSeries::polynomial({b, 1 + b * b, b}, T);
  const RationalSeries d1_inv = inverse(d1);
  const RationalSeries u = t * d1_inv;
  RationalSeries moments(T);
  const mpq_class w = (b / 4) * (b / 4);
  for (std::size_t n = 0; n <= T; ++n) {
    mpq_class c = 0, wk = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      mpz_class a = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) *
                    binomial(2 * static_cast<unsigned>(k), static_cast<unsigned>(k));
      c += mpq_class(a * a) * wk;
      wk *= w;
    }
    moments[n] = c;
  }
  Theorem1Forms forms;
  forms.moment_side = (d1_inv * b) * compose(moments, u);

  const RationalSeries one_bt = RationalSeries::polynomial({1, b}, T);
  const RationalSeries arg1 = t * RationalSeries::polynomial({-b, -1}, T);  // -t(b+t)
  const RationalSeries t2 = t * t;
  const RationalSeries arg2 = (t2 * inverse(one_bt)) * mpq_class(-1);
  forms.negative_argument = compose(F, arg1) * inverse(sqrt(one_bt)) * compose(F, arg2);

  const RationalSeries D = RationalSeries::polynomial({1, b, 1}, T);
  const RationalSeries D_inv = inverse(D);
  const RationalSeries arg3 = t * RationalSeries::polynomial({b, 1}, T) * D_inv;
  const RationalSeries arg4 = t2 * D_inv;
  forms.positive_argument = D_inv * compose(F, arg3) * compose(F, arg4);
  return forms;
}

Theorem1Outcome theorem1_check(const mpq_class& b, std::size_t order) {
  const Theorem1Forms f = theorem1_forms(b, order);
  Theorem1Outcome out;
  auto first_diff = [&](const RationalSeries& x, const RationalSeries& y) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i <= order; ++i)
      if (x[i] != y[i]) return i;
    return std::nullopt;
  };
  struct Pair {
    const RationalSeries* a;
    const RationalSeries* b;
    const char* name;
  };
  for (const Pair& p : {Pair{&f.moment_side, &f.negative_argument, "i-ii"},
                        Pair{&f.moment_side, &f.positive_argument, "i-iii"},
                        Pair{&f.negative_argument, &f.positive_argument, "ii-iii"}}) {
    if (auto idx = first_diff(*p.a, *p.b)) {
      if (!out.first_mismatch || *idx < *out.first_mismatch) {
        out.agree = false;
        out.first_mismatch = idx;
        out.mismatched_pair = p.name;
      }
    }
  }
  return out;
}

}  // namespace walklab
