#include <doctest.h>

#include "support.hpp"
#include "walklab/modular.hpp"

using namespace walklab;
using testsupport::agree;

namespace {
Complex I(const Real& y) { return Complex(Real(0), y); }
}  // namespace

TEST_CASE("eta at i and 2i against the gamma closed forms") {
  const auto ctx = make_context(30);
  PrecisionScope s(ctx);
  const Real ei = gamma(Real(1) / 4, ctx) / (2 * pow(ctx.pi(), Real(3) / 4));
  CHECK(agree(eta(I(Real(1)), ctx).real(), ei) >= 38);
  CHECK(agree(eta(I(Real(1)), ctx).real(), "0.7682254223260566590025941795761806445179") >= 38);
  CHECK(agree(eta(I(Real(2)), ctx).real(), ei / pow(Real(2), Real(3) / 8)) >= 38);
  // Near the real axis the reduced evaluation must still be finite and match
  // the inversion law.
  const Real y("0.001");
  CHECK(agree(eta(I(y), ctx).real(), eta(I(1 / y), ctx).real() / sqrt(y)) >= 35);
  CHECK_THROWS_AS(eta(Complex(Real(1), Real(0)), ctx), Error);
}

TEST_CASE("property: eta transformation laws at random points") {
  const auto ctx = make_context(30);
  PrecisionScope s(ctx);
  testsupport::Gen gen(1234);
  const Complex shift = exp(Complex(Real(0), ctx.pi() / 12));
  for (int i = 0; i < 20; ++i) {
    const Complex t(Real(gen.uniform(-0.5, 0.5)), Real(gen.uniform(0.2, 2.0)));
    CHECK(agree(eta(t + Complex(1), ctx), shift * eta(t, ctx)) >= 36);
    const Complex inv = Complex(-1) / t;
    CHECK(agree(eta(inv, ctx), sqrt(Complex(Real(0), Real(-1)) * t) * eta(t, ctx)) >= 35);
  }
}

TEST_CASE("eta quotient expansions against naive products") {
  const EtaQuotient x3 = named_quotient("x3");
  CHECK(x3.offset() == 12);  // x3 = 3 q^{1/2} + ...
  CHECK(x3.weight_twice() == 0);
  const auto c = x3.coefficients(6);
  CHECK(c[0] == 1);
  CHECK(named_quotient("p4_weight").weight_twice() == 4);
  // prod (1 - q^n)^{-1} is the partition function.
  const EtaQuotient inv({{1, -1}});
  const auto p = inv.coefficients(12);
  const long partitions[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56};
  for (int n = 0; n < 12; ++n) CHECK(p[static_cast<std::size_t>(n)] == partitions[n]);
  CHECK_THROWS_AS(named_quotient("nope"), Error);
  const auto ctx = make_context(30);
  PrecisionScope s(ctx);
  const Complex t(Real("0.1"), Real("0.9"));
  for (const auto& name : named_quotient_list()) {
    const auto qq = named_quotient(name);
    CHECK_MESSAGE(agree(qq.eval(t, ctx), qq.eval_series(t, ctx)) >= 36, name);
  }
}

TEST_CASE("Eisenstein coefficients against divisor sums") {
  const auto e1 = eisenstein_coefficients(EisensteinKind::E1_chi3, 30);
  const auto e3 = eisenstein_coefficients(EisensteinKind::E3_chi3, 30);
  const auto e3t = eisenstein_coefficients(EisensteinKind::E3_chi3_tilde, 30);
  CHECK(e1[0] == 1);
  CHECK(e3[0] == 0);
  CHECK(e3t[0] == 1);
  for (long n = 1; n < 30; ++n) {
    long s1 = 0, s3 = 0, s3t = 0;
    for (long d = 1; d <= n; ++d) {
      if (n % d) continue;
      s1 += chi3(d);
      s3 += chi3(d) * (n / d) * (n / d);
      s3t += chi3(d) * d * d;
    }
    CHECK(e1[static_cast<std::size_t>(n)] == 6 * s1);
    CHECK(e3[static_cast<std::size_t>(n)] == s3);
    CHECK(e3t[static_cast<std::size_t>(n)] == -9 * s3t);
  }
  const auto ctx = make_context(30);
  PrecisionScope s(ctx);
  // tau = 5i: 1 + 6q + 0 q^2 + O(q^3).
  const Real q = exp(-10 * ctx.pi());
  CHECK(agree(eisenstein(EisensteinKind::E1_chi3, I(Real(5)), ctx).real(), 1 + 6 * q) >= 38);
}

TEST_CASE("p3 parametrisation: limits and three routes to P3") {
  const auto ctx = make_context(30);
  PrecisionScope s(ctx);
  const P3Point far = p3_parametrisation(Real(6), ctx);
  // x ~ 3 q^{1/2} as y grows
  CHECK(agree(far.x, 3 * exp(-6 * ctx.pi())) >= 7);
  CHECK(far.P3 > 0);
  CHECK(far.P3 < far.x * far.x);
  for (const char* ys : {"0.12", "0.3", "0.45", "0.9"}) {
    const Real y(ys);
    const Real a = p3_cumulative_series(y, ctx);
    CHECK(agree(a, p3_cumulative_integral(y, ctx)) >= 36);
    CHECK(agree(a, p3_parametrisation(y, ctx).P3) >= 36);
  }
  CHECK(agree(p3_cumulative_product(Real("0.5"), ctx), p3_cumulative_series(Real("0.5"), ctx)) >= 36);
  CHECK_THROWS_AS(p3_parametrisation(Real(0), ctx), Error);
}

TEST_CASE("p4 parametrisation: fixed points and axis symmetry") {
  const auto ctx = make_context(30);
  PrecisionScope s(ctx);
  CHECK(agree(p4_on_axis(1 / (2 * sqrt(Real(15))), ctx).x, Real(1)) >= 36);
  CHECK(agree(p4_on_axis(1 / (2 * sqrt(Real(3))), ctx).x, Real(2)) >= 36);
  const P4Point far = p4_on_axis(Real(8), ctx);
  CHECK(far.x > 0);
  CHECK(far.x < Real("1e-9"));
  CHECK(far.p4 < Real("1e-9"));
  for (const char* ys : {"0.1", "0.2"}) {
    const Real y(ys);
    const P4Point lo = p4_on_axis(y, ctx), hi = p4_on_axis(1 / (12 * y), ctx);
    CHECK(agree(lo.x, hi.x) >= 36);
    CHECK(agree(lo.p4, hi.p4) >= 36);
  }
  const P4Point arc = p4_on_arc(Real("0.7"), ctx);
  CHECK(arc.x > 2);
  CHECK(arc.x < 4);
  CHECK_THROWS_AS(p4_on_arc(Real("0.9"), ctx), Error);
}

TEST_CASE("axis inversion") {
  const auto ctx = make_context(30);
  PrecisionScope s(ctx);
  CHECK(agree(invert_x_on_axis(AxisMap::p4, Real(1), ctx), 1 / (2 * sqrt(Real(15)))) >= 36);
  CHECK(agree(invert_x_on_axis(AxisMap::level8, Real(1), ctx), Real("0.8774376613482")) >= 13);
  testsupport::Gen gen(77);
  for (int i = 0; i < 10; ++i) {
    const Real target(gen.uniform(0.05, 0.95));
    const Real y = invert_x_on_axis(AxisMap::p3, target, ctx);
    CHECK(agree(x_on_axis(AxisMap::p3, y, ctx), target) >= 30);
    const Real t4(gen.uniform(0.1, 1.9));
    const Real yu = invert_x_on_axis(AxisMap::p4, t4, ctx, AxisLeg::upper);
    CHECK(yu > 1 / (2 * sqrt(Real(3))));
    CHECK(agree(x_on_axis(AxisMap::p4, yu, ctx), t4) >= 30);
  }
  CHECK_THROWS_AS(invert_x_on_axis(AxisMap::p3, Real(3), ctx), Error);
}

TEST_CASE("Atkin-Lehner relations and the level 8 identities") {
  const auto ctx = make_context(30);
  PrecisionScope s(ctx);
  const auto r = atkin_lehner_checks({Complex(Real("0.1"), Real("0.4"))}, ctx);
  CHECK(r.min_digits >= 32);
  CHECK(r.unscaled_form_digits <= 1);
  const auto fixed = atkin_lehner_checks({I(1 / (2 * sqrt(Real(3))))}, ctx);
  CHECK(fixed.min_digits >= 32);
  for (const char* ys : {"0.4", "1"}) {
    const Level8Point p = level8_parametrisation(Real(ys), ctx);
    CHECK(p.complement_digits >= 32);
    CHECK(p.f_digits >= 32);
    CHECK(p.relation_digits >= 32);
  }
}
