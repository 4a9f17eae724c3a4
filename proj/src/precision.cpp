#include "walklab/precision.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <optional>

namespace walklab {

namespace {

thread_local mpfr_prec_t tl_precision = 128;

constexpr double kBitsPerDigit = 3.3219280948873623;

}  // namespace

mpfr_prec_t working_precision() noexcept { return tl_precision; }

// ---------------------------------------------------------------------------
// Real

Real::Real() {
  mpfr_init2(v_, tl_precision);
  mpfr_set_zero(v_, 1);
}

Real::Real(double v) {
  mpfr_init2(v_, tl_precision);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const mpz_class& v) {
  mpfr_init2(v_, tl_precision);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& v) {
  mpfr_init2(v_, tl_precision);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(std::string_view decimal) {
  mpfr_init2(v_, tl_precision);
  std::string s(decimal);
  if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    fail(Errc::invalid_argument, "not a decimal number: " + s);
  }
}

Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  // Steal the limbs and leave `o` as a valid 2-bit zero.
  *v_ = *o.v_;
  mpfr_init2(o.v_, MPFR_PREC_MIN);
  mpfr_set_zero(o.v_, 1);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

namespace {

// Results of arithmetic live at the working precision, independent of the
// operands' own precisions.
Real binop(const Real& a, const Real& b, int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
  Real r;
  op(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real unop(const Real& a, int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
  Real r;
  op(r.get(), a.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real& Real::operator+=(const Real& o) { return *this = *this + o; }
Real& Real::operator-=(const Real& o) { return *this = *this - o; }
Real& Real::operator*=(const Real& o) { return *this = *this * o; }
Real& Real::operator/=(const Real& o) { return *this = *this / o; }

Real Real::operator-() const { return unop(*this, mpfr_neg); }

long Real::exponent2() const noexcept {
  if (mpfr_zero_p(v_)) return -(1L << 40);
  return mpfr_get_exp(v_);
}

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(v_)) return "0";
  digits = std::max(digits, 1);
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  bool neg = false;
  if (!mant.empty() && mant[0] == '-') {
    neg = true;
    mant.erase(0, 1);
  }
  // value = 0.mant * 10^exp10
  std::string out;
  if (exp10 > 0 && exp10 <= 40) {
    if (static_cast<size_t>(exp10) >= mant.size()) {
      out = mant + std::string(static_cast<size_t>(exp10) - mant.size(), '0');
    } else {
      out = mant.substr(0, static_cast<size_t>(exp10)) + "." + mant.substr(static_cast<size_t>(exp10));
    }
  } else if (exp10 <= 0 && exp10 > -6) {
    out = "0." + std::string(static_cast<size_t>(-exp10), '0') + mant;
  } else {
    out = mant.substr(0, 1) + "." + mant.substr(1) + "e" + std::to_string(exp10 - 1);
  }
  return neg ? "-" + out : out;
}

Real operator+(const Real& a, const Real& b) { return binop(a, b, mpfr_add); }
Real operator-(const Real& a, const Real& b) { return binop(a, b, mpfr_sub); }
Real operator*(const Real& a, const Real& b) { return binop(a, b, mpfr_mul); }
Real operator/(const Real& a, const Real& b) { return binop(a, b, mpfr_div); }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.get(), b.get())) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.get(), b.get());
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

Real abs(const Real& x) { return unop(x, mpfr_abs); }
Real sqrt(const Real& x) { return unop(x, mpfr_sqrt); }
Real cbrt(const Real& x) { return unop(x, mpfr_cbrt); }
Real exp(const Real& x) { return unop(x, mpfr_exp); }
Real expm1(const Real& x) { return unop(x, mpfr_expm1); }
Real log(const Real& x) { return unop(x, mpfr_log); }
Real log1p(const Real& x) { return unop(x, mpfr_log1p); }
Real log10(const Real& x) { return unop(x, mpfr_log10); }
Real pow(const Real& x, const Real& y) { return binop(x, y, mpfr_pow); }
Real pow(const Real& x, long n) {
  Real r;
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}
Real sin(const Real& x) { return unop(x, mpfr_sin); }
Real cos(const Real& x) { return unop(x, mpfr_cos); }
Real tan(const Real& x) { return unop(x, mpfr_tan); }
Real asin(const Real& x) { return unop(x, mpfr_asin); }
Real acos(const Real& x) { return unop(x, mpfr_acos); }
Real atan(const Real& x) { return unop(x, mpfr_atan); }
Real atan2(const Real& y, const Real& x) { return binop(y, x, mpfr_atan2); }
Real sinh(const Real& x) { return unop(x, mpfr_sinh); }
Real cosh(const Real& x) { return unop(x, mpfr_cosh); }
Real asinh(const Real& x) { return unop(x, mpfr_asinh); }
Real floor(const Real& x) {
  Real r;
  mpfr_floor(r.get(), x.get());
  return r;
}
Real round(const Real& x) {
  Real r;
  mpfr_round(r.get(), x.get());
  return r;
}
Real ldexp(const Real& x, long e) {
  Real r;
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}
Real min(const Real& a, const Real& b) { return a < b ? a : b; }
Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real rounded(const Real& x) {
  Real r;
  mpfr_set(r.get(), x.get(), MPFR_RNDN);
  return r;
}
Real tenth_power(long d) {
  Real r(10);
  mpfr_pow_si(r.get(), r.get(), -d, MPFR_RNDN);
  return r;
}

// ---------------------------------------------------------------------------
// Complex

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}
Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}
Complex& Complex::operator*=(const Complex& o) { return *this = *this * o; }
Complex& Complex::operator/=(const Complex& o) { return *this = *this / o; }
Complex& Complex::operator*=(const Real& r) {
  re_ *= r;
  im_ *= r;
  return *this;
}

Complex operator+(const Complex& a, const Complex& b) { return {a.real() + b.real(), a.imag() + b.imag()}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.real() - b.real(), a.imag() - b.imag()}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}
Complex operator/(const Complex& a, const Complex& b) {
  Real d = norm(b);
  return {(a.real() * b.real() + a.imag() * b.imag()) / d, (a.imag() * b.real() - a.real() * b.imag()) / d};
}
Complex operator*(const Complex& a, const Real& r) { return {a.real() * r, a.imag() * r}; }
Complex operator*(const Real& r, const Complex& a) { return {a.real() * r, a.imag() * r}; }
Complex operator/(const Complex& a, const Real& r) { return {a.real() / r, a.imag() / r}; }

Complex conj(const Complex& z) { return {z.real(), -z.imag()}; }
Real norm(const Complex& z) { return z.real() * z.real() + z.imag() * z.imag(); }
Real abs(const Complex& z) {
  Real r;
  mpfr_hypot(r.get(), z.real().get(), z.imag().get(), MPFR_RNDN);
  return r;
}
Real arg(const Complex& z) { return atan2(z.imag(), z.real()); }

Complex exp(const Complex& z) {
  Real m = exp(z.real());
  Real s, c;
  mpfr_sin_cos(s.get(), c.get(), z.imag().get(), MPFR_RNDN);
  return {m * c, m * s};
}

Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

Complex sqrt(const Complex& z) {
  if (z.real().is_zero() && z.imag().is_zero()) return {};
  Real r = abs(z);
  Real t = sqrt((r + abs(z.real())) / 2);
  if (z.real().sign() >= 0) return {t, z.imag() / (2 * t)};
  Real im = z.imag().sign() >= 0 ? t : -t;
  return {z.imag() / (2 * im), im};
}

Complex pow(const Complex& z, long n) {
  if (n < 0) return Complex(Real(1)) / pow(z, -n);
  Complex result(Real(1));
  Complex base = z;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Context

struct PrecisionContext::ConstantCache {
  std::mutex mu;
  std::optional<Real> pi, catalan, zeta3, log2, euler;
};

PrecisionContext::PrecisionContext(int digits) : digits_(digits), cache_(std::make_shared<ConstantCache>()) {}

mpfr_prec_t PrecisionContext::working_bits() const noexcept {
  return static_cast<mpfr_prec_t>(std::ceil(working_digits() * kBitsPerDigit)) + 8;
}

PrecisionContext PrecisionContext::with_digits(int digits) const {
  PrecisionContext c = make_context(digits);
  c.series_term_cap_ = series_term_cap_;
  c.quadrature_level_cap_ = quadrature_level_cap_;
  return c;
}

PrecisionContext PrecisionContext::with_series_term_cap(long cap) const {
  if (cap < 1) fail(Errc::invalid_argument, "series term cap must be positive");
  PrecisionContext c = *this;
  c.series_term_cap_ = cap;
  return c;
}

PrecisionContext PrecisionContext::with_quadrature_level_cap(int cap) const {
  if (cap < 1) fail(Errc::invalid_argument, "quadrature level cap must be positive");
  PrecisionContext c = *this;
  c.quadrature_level_cap_ = cap;
  return c;
}

Real PrecisionContext::tolerance(int extra) const {
  PrecisionScope scope(*this);
  return tenth_power(digits_ + extra);
}

namespace {

template <class Make>
const Real& memo(std::mutex& mu, std::optional<Real>& slot, const PrecisionContext& ctx, Make make) {
  std::lock_guard lock(mu);
  if (!slot) {
    PrecisionScope scope(ctx);
    Real v;
    make(v.get());
    slot.emplace(std::move(v));
  }
  return *slot;
}

}  // namespace

const Real& PrecisionContext::pi() const {
  return memo(cache_->mu, cache_->pi, *this, [](mpfr_ptr r) { mpfr_const_pi(r, MPFR_RNDN); });
}
const Real& PrecisionContext::catalan() const {
  return memo(cache_->mu, cache_->catalan, *this, [](mpfr_ptr r) { mpfr_const_catalan(r, MPFR_RNDN); });
}
const Real& PrecisionContext::zeta3() const {
  return memo(cache_->mu, cache_->zeta3, *this, [](mpfr_ptr r) { mpfr_zeta_ui(r, 3, MPFR_RNDN); });
}
const Real& PrecisionContext::log2() const {
  return memo(cache_->mu, cache_->log2, *this, [](mpfr_ptr r) { mpfr_const_log2(r, MPFR_RNDN); });
}
const Real& PrecisionContext::euler_gamma() const {
  return memo(cache_->mu, cache_->euler, *this, [](mpfr_ptr r) { mpfr_const_euler(r, MPFR_RNDN); });
}

PrecisionContext make_context(int decimal_digits) {
  if (decimal_digits < PrecisionContext::kMinDigits)
    fail(Errc::invalid_argument, "precision must be at least 10 decimal digits, got " + std::to_string(decimal_digits));
  if (decimal_digits > 100000) fail(Errc::invalid_argument, "precision too large");
  return PrecisionContext(decimal_digits);
}

PrecisionScope::PrecisionScope(const PrecisionContext& ctx) : PrecisionScope(ctx.working_bits()) {}

PrecisionScope::PrecisionScope(mpfr_prec_t bits) : saved_(tl_precision) { tl_precision = bits; }

PrecisionScope::~PrecisionScope() { tl_precision = saved_; }

Real const_pi(const PrecisionContext& ctx) { return ctx.pi(); }
Real const_catalan(const PrecisionContext& ctx) { return ctx.catalan(); }
Real const_zeta3(const PrecisionContext& ctx) { return ctx.zeta3(); }

Real gamma(const Real& z, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (mpfr_integer_p(z.get()) && z.sign() <= 0) fail(Errc::pole, "gamma pole at non-positive integer " + z.to_string(20));
  Real r;
  mpfr_gamma(r.get(), z.get(), MPFR_RNDN);
  return r;
}

Real lgamma_abs(const Real& z) {
  Real r;
  int sign = 0;
  mpfr_lgamma(r.get(), &sign, z.get(), MPFR_RNDN);
  return r;
}

int digits_agreed(const Real& a, const Real& b, int cap) {
  Real diff = abs(a - b);
  if (diff.is_zero()) return cap;
  if (!diff.is_finite()) return 0;
  Real scale = max(abs(a), Real(1));
  Real rel = diff / scale;
  double d = -mpfr_get_d(log10(rel).get(), MPFR_RNDN);
  if (d <= 0) return 0;
  return std::min(cap, static_cast<int>(std::floor(d)));
}

int digits_agreed(const Complex& a, const Complex& b, int cap) {
  Real diff = abs(a - b);
  if (diff.is_zero()) return cap;
  if (!diff.is_finite()) return 0;
  Real rel = diff / max(abs(a), Real(1));
  double d = -mpfr_get_d(log10(rel).get(), MPFR_RNDN);
  if (d <= 0) return 0;
  return std::min(cap, static_cast<int>(std::floor(d)));
}

}  // namespace walklab
