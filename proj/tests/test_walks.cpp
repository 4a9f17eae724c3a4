#include <doctest.h>

#include <numeric>

#include "support.hpp"
#include "walklab/walks.hpp"

using namespace walklab;
using testsupport::agree;

TEST_CASE("densities against independent values") {
  const auto ctx = make_context(30);
  PrecisionScope s(ctx);
  CHECK(agree(density(DensityId::p3, Real("0.5"), ctx), "0.2016722028023590881207117080355989578096") >= 30);
  CHECK(agree(density(DensityId::p3, Real("2.5"), ctx), "0.3021075170168529819574378676240983371331") >= 30);
  const std::pair<const char*, const char*> p4[] = {
      {"0.5", "0.2131519561712454341950348332251098235508"}, {"1", "0.3299338010600640590397906522869529646937"},
      {"1.5", "0.4185048763681690646035764474384630707715"}, {"2.5", "0.2610169472722517052816502705932215603048"},
      {"3.5", "0.1121656148912916622810874050988492262888"}};
  for (const auto& [x, v] : p4) CHECK_MESSAGE(agree(density(DensityId::p4, Real(x), ctx), v) >= 28, "x=" << x);
  CHECK(agree(density(DensityId::phat, Real(1), ctx), "0.2838215161243971066925009906792902951249") >= 28);
  // p2(x) = 2 / (pi sqrt(4 - x^2))
  const Real x("1.3");
  CHECK(agree(density(DensityId::p2, x, ctx), 2 / (ctx.pi() * sqrt(4 - x * x))) >= 38);
}

TEST_CASE("density domain errors") {
  const auto ctx = make_context(20);
  PrecisionScope s(ctx);
  auto code = [&](DensityId id, const char* x) {
    try {
      density(id, Real(x), ctx);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc{};
  };
  CHECK(code(DensityId::p3, "1") == Errc::pole);
  CHECK(code(DensityId::p3, "3.5") == Errc::domain_error);
  CHECK(code(DensityId::p4, "-0.5") == Errc::domain_error);
  CHECK(code(DensityId::p2, "2.5") == Errc::domain_error);
  CHECK_THROWS_AS(density_from_string("p7"), Error);
  CHECK(density_from_string("phat") == DensityId::phat);
}

TEST_CASE("densities integrate to one") {
  const auto ctx = make_context(25);
  PrecisionScope s(ctx);
  for (DensityId id : {DensityId::p2, DensityId::p3, DensityId::p4, DensityId::phat}) {
    const auto w = walk_density(id);
    const Real mass = integrate_against(id, [](const Real&) { return Real(1); }, Real(0), Real(w.support_hi), ctx);
    CHECK_MESSAGE(agree(mass, Real(1)) >= 25, to_string(id));
  }
  CHECK(agree(cumulative_P3(Real(3), ctx), Real(1)) >= 25);
  CHECK(agree(cumulative_P3(Real(1), ctx), P3_at_one_modular(ctx)) >= 25);
}

TEST_CASE("moments from densities match the exact even moments") {
  const auto ctx = make_context(25);
  PrecisionScope s(ctx);
  // W3(2) = 3, W3(4) = 15, W4(2) = 4, W4(4) = 28
  CHECK(agree(density_moment(DensityId::p3, Real(2), ctx), Real(3)) >= 24);
  CHECK(agree(density_moment(DensityId::p3, Real(4), ctx), Real(15)) >= 24);
  CHECK(agree(density_moment(DensityId::p4, Real(2), ctx), Real(4)) >= 24);
  CHECK(agree(density_moment(DensityId::p4, Real(4), ctx), Real(28)) >= 24);
  CHECK(agree(density_moment(DensityId::phat, Real(2), ctx), Real(4)) >= 24);
}

TEST_CASE("linear Mahler measures") {
  const auto ctx = make_context(30);
  PrecisionScope s(ctx);
  CHECK(abs(mahler_linear(2, LinearMethod::red1, ctx)) < Real("1e-35"));
  // W3'(0) = L'(chi_-3, -1) = (3 sqrt3 / (4 pi)) L(chi_-3, 2)
  CHECK(agree(mahler_linear(3, LinearMethod::red1, ctx), "0.3230659472194505140936365107238") >= 30);
  // W4'(0) = 7 zeta(3) / (2 pi^2)
  CHECK(agree(mahler_linear(4, LinearMethod::red1, ctx), "0.426278398817505790923521426596166873058") >= 30);
  CHECK(agree(mahler_linear(5, LinearMethod::red1, ctx), mahler_linear(5, LinearMethod::modular, ctx)) >= 28);
  CHECK_THROWS_AS(mahler_linear(3, LinearMethod::w6p3, ctx), Error);
}

TEST_CASE("variant measure: domains and the b = 4 boundary") {
  const auto ctx = make_context(25);
  PrecisionScope s(ctx);
  CHECK(agree(mahler_variant(Real(4), VariantMethod::wan, ctx), log(Real(4))) >= 24);
  CHECK(agree(mahler_variant(Real(1), VariantMethod::theorem2, ctx),
              mahler_variant(Real(1), VariantMethod::general_b, ctx)) >= 23);
  auto code = [&](const char* b, VariantMethod m) {
    try {
      mahler_variant(Real(b), m, ctx);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc{};
  };
  CHECK(code("2", VariantMethod::theorem2) != Errc{});
  CHECK(code("5", VariantMethod::general_b) != Errc{});
  CHECK(code("3", VariantMethod::jensen) != Errc{});
  CHECK(code("-1", VariantMethod::wan) != Errc{});
  // Jensen for b > 4: m = log b + m(1 + (x2 + x3 + x2 x3)/b ...) tends to log b.
  const Real big = mahler_variant(Real(1000), VariantMethod::jensen, ctx);
  CHECK(abs(big - log(Real(1000))) < Real("0.01"));
}

TEST_CASE("bin masses") {
  for (DensityId id : {DensityId::p2, DensityId::p3, DensityId::p4, DensityId::phat}) {
    const auto m = bin_masses(id, 50);
    REQUIRE(m.size() == 50);
    double total = std::accumulate(m.begin(), m.end(), 0.0);
    CHECK_MESSAGE(std::abs(total - 1) < 1e-12, to_string(id));
    for (double v : m) CHECK(v >= 0);
  }
}

TEST_CASE("Bessel moment integrals reproduce small exact moments") {
  const auto ctx = make_context(20);
  PrecisionScope s(ctx);
  CHECK(agree(bessel_moment_w3(1, ctx), Real(3)) >= 18);
  CHECK(agree(bessel_moment_w4(1, ctx), Real(4)) >= 18);
}

TEST_CASE("geometric identity log max") {
  const auto ctx = make_context(25);
  PrecisionScope s(ctx);
  testsupport::Gen g(11);
  for (int i = 0; i < 5; ++i) {
    const Real x(g.uniform(0.1, 3)), y(g.uniform(0.1, 3));
    const auto [a, b] = gs_logmax_check(x, y, ctx);
    CHECK(agree(a, b) >= 20);
  }
}
