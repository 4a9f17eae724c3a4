#pragma once

// Truncated power series over exact rationals, integer moment sequences of
// the short walks, and the coefficient-exact check of the W~ generating
// function factorisation.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace walklab {

class RationalSeries {
 public:
  explicit RationalSeries(std::size_t order = 0);
  explicit RationalSeries(std::vector<mpq_class> coeffs);

  static RationalSeries constant(const mpq_class& c, std::size_t order);
  // c0 + c1 t + ... truncated at `order`.
  static RationalSeries polynomial(const std::vector<mpq_class>& coeffs, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const mpq_class& operator[](std::size_t i) const { return coeffs_.at(i); }
  mpq_class& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }

  RationalSeries& operator+=(const RationalSeries& o);
  RationalSeries& operator-=(const RationalSeries& o);
  RationalSeries& operator*=(const RationalSeries& o);
  RationalSeries& operator*=(const mpq_class& c);

  friend bool operator==(const RationalSeries& a, const RationalSeries& b) = default;

 private:
  std::vector<mpq_class> coeffs_;
};

RationalSeries operator+(RationalSeries a, const RationalSeries& b);
RationalSeries operator-(RationalSeries a, const RationalSeries& b);
RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
RationalSeries operator*(RationalSeries a, const mpq_class& c);

// f(g(t)); requires g(0) = 0.
RationalSeries compose(const RationalSeries& f, const RationalSeries& g);
// 1/f; requires f(0) != 0.
RationalSeries inverse(const RationalSeries& f);
// Square root with positive constant term; requires f(0) a rational square.
RationalSeries sqrt(const RationalSeries& f);
// Compositional inverse g with f(g(t)) = t; requires f(0) = 0, f'(0) != 0.
RationalSeries reversion(const RationalSeries& f);

// Coefficients (a_1)_n...(a_m)_n / ((b_1)_n...(b_k)_n n!) for n <= order.
RationalSeries hypergeometric_series(const std::vector<mpq_class>& upper, const std::vector<mpq_class>& lower,
                                     std::size_t order);

enum class WalkId { W2, W3, W4, Wtilde, What };

std::string to_string(WalkId id);
WalkId walk_from_string(const std::string& name);

struct MomentSequence {
  WalkId walk;
  std::vector<mpz_class> values;  // values[n] is the even moment of order 2n
};

// sum_k C(n,k)^2 C(2k,k)^2
mpz_class variant_even_moment(unsigned n);

// W_N(2n) as the constant term of ((1 + x_1 + ... + x_{N-1})(1 + 1/x_1 + ... ))^n.
mpz_class walk_even_moment_ct(int steps, unsigned n);

MomentSequence moment_sequence(WalkId walk, unsigned n_max);

struct Theorem1Outcome {
  bool agree = true;
  std::optional<std::size_t> first_mismatch;
  std::string mismatched_pair;  // "i-ii", "i-iii" or "ii-iii"
};

// The three displayed forms of the factorisation as series in t.
struct Theorem1Forms {
  RationalSeries moment_side;       // b/((b+t)(1+bt)) sum_n u^n sum_k C(n,k)^2 C(2k,k)^2 (b/4)^{2k}
  RationalSeries negative_argument; // F(-t(b+t)) (1+bt)^{-1/2} F(-t^2/(1+bt))
  RationalSeries positive_argument; // F(t(b+t)/D) F(t^2/D) / D,  D = 1+bt+t^2
};

Theorem1Forms theorem1_forms(const mpq_class& b, std::size_t order);
Theorem1Outcome theorem1_check(const mpq_class& b, std::size_t order);

}  // namespace walklab
