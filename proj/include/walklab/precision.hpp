#pragma once

// Arbitrary-precision scalars on top of MPFR, the precision context that
// governs every numeric routine, and a handful of constants.
//
// Every Real is created at the calling thread's working precision. Public
// numeric entry points take a PrecisionContext and open a PrecisionScope, so
// callers never set the working precision by hand.

#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

#include "walklab/error.hpp"

namespace walklab {

mpfr_prec_t working_precision() noexcept;

class Real {
 public:
  Real();
  template <std::integral I>
  Real(I v) : Real() {
    if constexpr (std::is_signed_v<I>)
      mpfr_set_sj(v_, static_cast<intmax_t>(v), MPFR_RNDN);
    else
      mpfr_set_uj(v_, static_cast<uintmax_t>(v), MPFR_RNDN);
  }
  Real(double v);
  explicit Real(const mpz_class& v);
  explicit Real(const mpq_class& v);
  explicit Real(std::string_view decimal);

  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real operator-() const;

  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  // Base-2 exponent (value = m * 2^e, 0.5 <= |m| < 1); very negative for zero.
  long exponent2() const noexcept;

  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const noexcept { return mpfr_get_si(v_, MPFR_RNDN); }
  // Decimal rendering with `digits` significant digits; plain positional form
  // for moderate exponents, otherwise mantissa 'e' exponent.
  std::string to_string(int digits) const;

 private:
  mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
// Mixed integer arithmetic; without these, int * Real is ambiguous between
// the Real and Complex overloads.
template <std::integral I> Real operator+(const Real& a, I b) { return a + Real(b); }
template <std::integral I> Real operator+(I a, const Real& b) { return Real(a) + b; }
template <std::integral I> Real operator-(const Real& a, I b) { return a - Real(b); }
template <std::integral I> Real operator-(I a, const Real& b) { return Real(a) - b; }
template <std::integral I> Real operator*(const Real& a, I b) { return a * Real(b); }
template <std::integral I> Real operator*(I a, const Real& b) { return Real(a) * b; }
template <std::integral I> Real operator/(const Real& a, I b) { return a / Real(b); }
template <std::integral I> Real operator/(I a, const Real& b) { return Real(a) / b; }
std::partial_ordering operator<=>(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cbrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real log10(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real asin(const Real& x);
Real acos(const Real& x);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real asinh(const Real& x);
Real floor(const Real& x);
Real round(const Real& x);
Real ldexp(const Real& x, long e);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
// Rounds x to the working precision of the calling thread.
Real rounded(const Real& x);
// 10^-d at working precision.
Real tenth_power(long d);

class Complex {
 public:
  Complex() = default;
  Complex(Real re) : re_(std::move(re)) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  template <std::integral I>
  Complex(I v) : re_(v) {}

  static Complex i() { return Complex(Real(0), Real(1)); }

  const Real& real() const noexcept { return re_; }
  const Real& imag() const noexcept { return im_; }
  Real& real() noexcept { return re_; }
  Real& imag() noexcept { return im_; }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& r);
  Complex operator-() const { return {-re_, -im_}; }

 private:
  Real re_;
  Real im_;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& r);
Complex operator*(const Real& r, const Complex& a);
Complex operator/(const Complex& a, const Real& r);

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);   // principal branch
Complex sqrt(const Complex& z);  // principal branch
Complex pow(const Complex& z, long n);

// Working precision and convergence budgets. Immutable once built; the
// with_* helpers return adjusted copies.
class PrecisionContext {
 public:
  static constexpr int kGuardDigits = 10;
  static constexpr int kMinDigits = 10;

  int digits() const noexcept { return digits_; }
  int working_digits() const noexcept { return digits_ + kGuardDigits; }
  mpfr_prec_t working_bits() const noexcept;
  long series_term_cap() const noexcept { return series_term_cap_; }
  int quadrature_level_cap() const noexcept { return quadrature_level_cap_; }

  PrecisionContext with_digits(int digits) const;
  PrecisionContext with_series_term_cap(long cap) const;
  PrecisionContext with_quadrature_level_cap(int cap) const;

  // Tolerance 10^-(digits + extra) at working precision.
  Real tolerance(int extra = 0) const;

  const Real& pi() const;
  const Real& catalan() const;
  const Real& zeta3() const;
  const Real& log2() const;
  const Real& euler_gamma() const;

 private:
  friend PrecisionContext make_context(int decimal_digits);
  struct ConstantCache;

  explicit PrecisionContext(int digits);

  int digits_;
  long series_term_cap_ = 1'000'000;
  int quadrature_level_cap_ = 12;
  std::shared_ptr<ConstantCache> cache_;
};

PrecisionContext make_context(int decimal_digits);

// Sets the calling thread's working precision for its lifetime.
class PrecisionScope {
 public:
  explicit PrecisionScope(const PrecisionContext& ctx);
  explicit PrecisionScope(mpfr_prec_t bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mpfr_prec_t saved_;
};

Real const_pi(const PrecisionContext& ctx);
Real const_catalan(const PrecisionContext& ctx);
Real const_zeta3(const PrecisionContext& ctx);

// Gamma function on the real line; Errc::pole at non-positive integers.
Real gamma(const Real& z, const PrecisionContext& ctx);
Real lgamma_abs(const Real& z);

// Number of leading decimal digits on which a and b agree, relative to
// max(|a|, 1); capped at `cap`.
int digits_agreed(const Real& a, const Real& b, int cap = 1000);
int digits_agreed(const Complex& a, const Complex& b, int cap = 1000);

}  // namespace walklab
