#include <doctest.h>

#include "support.hpp"
#include "walklab/exact_series.hpp"

using namespace walklab;

namespace {

mpz_class binom(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

RationalSeries random_series(testsupport::Gen& g, std::size_t order, bool zero_constant) {
  RationalSeries s(order);
  for (std::size_t i = zero_constant ? 1 : 0; i <= std::min<std::size_t>(order, 4); ++i)
    s[i] = mpq_class(g.integer(-5, 5), g.integer(1, 4));
  s[0].canonicalize();
  if (zero_constant) s[0] = 0;
  if (zero_constant && s[1] == 0) s[1] = 1;
  if (!zero_constant && s[0] == 0) s[0] = 1;
  for (std::size_t i = 0; i <= order; ++i) s[i].canonicalize();
  return s;
}

}  // namespace

TEST_CASE("series arithmetic basics") {
  const auto one = RationalSeries::constant(1, 6);
  const auto t = RationalSeries::polynomial({0, 1}, 6);
  const auto geom = inverse(one - t);  // 1/(1-t)
  for (std::size_t i = 0; i <= 6; ++i) CHECK(geom[i] == 1);
  const auto sq = sqrt(RationalSeries::polynomial({4, 4, 1}, 6));  // (2 + t)^2
  CHECK(sq[0] == 2);
  CHECK(sq[1] == 1);
  CHECK(sq[2] == 0);
  CHECK_THROWS_AS(inverse(t), Error);
}

TEST_CASE("2F1(1/2,1/2;1) coefficients are C(2n,n)^2/16^n") {
  const auto F = hypergeometric_series({mpq_class(1, 2), mpq_class(1, 2)}, {mpq_class(1)}, 12);
  for (unsigned n = 0; n <= 12; ++n) {
    mpq_class expect(binom(2 * n, n) * binom(2 * n, n), 1);
    mpz_class p16;
    mpz_ui_pow_ui(p16.get_mpz_t(), 16, n);
    expect /= p16;
    CHECK(F[n] == expect);
  }
}

TEST_CASE("walk moment sequences") {
  const std::vector<long> w3{1, 3, 15, 93, 639, 4653, 35169};
  const std::vector<long> w4{1, 4, 28, 256, 2716, 31504, 387136};
  for (unsigned n = 0; n < w3.size(); ++n) {
    CHECK(walk_even_moment_ct(3, n) == w3[n]);
    CHECK(walk_even_moment_ct(4, n) == w4[n]);
    CHECK(walk_even_moment_ct(2, n) == binom(2 * n, n));
  }
  CHECK(variant_even_moment(1) == 5);
  CHECK(variant_even_moment(2) == 53);
  const auto what = moment_sequence(WalkId::What, 5);
  for (unsigned n = 0; n <= 5; ++n) CHECK(what.values[n] == binom(2 * n, n) * binom(2 * n, n));
  // Independent oracle for W3: sum_k C(n,k)^2 C(2k,k).
  for (unsigned n = 0; n <= 10; ++n) {
    mpz_class s = 0;
    for (unsigned k = 0; k <= n; ++k) s += binom(n, k) * binom(n, k) * binom(2 * k, k);
    CHECK(walk_even_moment_ct(3, n) == s);
  }
  CHECK(walk_from_string("wtilde") == WalkId::Wtilde);
  CHECK_THROWS_AS(walk_from_string("w9"), Error);
}

TEST_CASE("generating function factorisation holds coefficient-exactly") {
  for (const mpq_class& b : {mpq_class(4), mpq_class(1), mpq_class(1, 2), mpq_class(3), mpq_class(-2, 7)}) {
    const auto o = theorem1_check(b, 30);
    CHECK_MESSAGE(o.agree, "b = " << b.get_str());
  }
  CHECK_THROWS_AS(theorem1_forms(mpq_class(0), 5), Error);
}

TEST_CASE("property: inverse, composition and reversion on random series") {
  testsupport::Gen gen(5);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t order = 10;
    const auto f = random_series(gen, order, false);
    const auto prod = f * inverse(f);
    CHECK(prod == RationalSeries::constant(1, order));

    const auto g = random_series(gen, order, true);
    const auto h = random_series(gen, order, true);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));

    const auto r = reversion(g);
    CHECK(compose(g, r) == RationalSeries::polynomial({0, 1}, order));
    CHECK(compose(r, g) == RationalSeries::polynomial({0, 1}, order));

    const auto sq = f * f;
    const auto root = sqrt(sq);
    CHECK((root == f || root == f * mpq_class(-1)));
  }
}
