#include <doctest.h>

#include "support.hpp"
#include "walklab/precision.hpp"

using namespace walklab;
using testsupport::agree;

TEST_CASE("context carries guard digits and rejects tiny precision") {
  const auto ctx = make_context(30);
  CHECK(ctx.digits() == 30);
  CHECK(ctx.working_digits() == 40);
  CHECK(ctx.working_bits() >= 133);
  CHECK_THROWS_AS(make_context(5), Error);
  try {
    make_context(9);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_argument);
  }
  const auto wider = ctx.with_digits(50);
  CHECK(wider.digits() == 50);
  CHECK(wider.series_term_cap() == ctx.series_term_cap());
}

TEST_CASE("precision scope sets and restores the thread precision") {
  const mpfr_prec_t before = working_precision();
  {
    PrecisionScope s(make_context(60));
    CHECK(working_precision() > before);
    CHECK(Real(1).precision() == working_precision());
  }
  CHECK(working_precision() == before);
}

TEST_CASE("constants against decimal values") {
  const auto ctx = make_context(40);
  PrecisionScope s(ctx);
  CHECK(agree(ctx.pi(), "3.14159265358979323846264338327950288419716939937510") >= 45);
  CHECK(agree(ctx.zeta3(), "1.20205690315959428539973816151144999076498629234049") >= 45);
  CHECK(agree(ctx.catalan(), "0.91596559417721901505460351493238411077414937428167") >= 45);
  CHECK(agree(ctx.log2(), "0.69314718055994530941723212145817656807550013436026") >= 45);
  CHECK(agree(ctx.euler_gamma(), "0.57721566490153286060651209008240243104215933593992") >= 45);
  CHECK(agree(gamma(Real(1) / 3, ctx), "2.678938534707747633655692940974677644129") >= 38);
  CHECK_THROWS_AS(gamma(Real(-2), ctx), Error);
}

TEST_CASE("digits_agreed is relative to max(|a|, 1) and capped") {
  PrecisionScope s(make_context(30));
  CHECK(digits_agreed(Real(1), Real(1), 17) == 17);
  CHECK(digits_agreed(Real("1.0001"), Real(1)) == 4);
  CHECK(digits_agreed(Real("1e-12"), Real(0)) == 12);  // absolute below 1
  CHECK(digits_agreed(Real(1000), Real(1001)) == 3);
  CHECK(digits_agreed(Real(1), Real(2)) == 0);
}

TEST_CASE("decimal rendering") {
  PrecisionScope s(make_context(30));
  CHECK(Real(0).to_string(10) == "0");
  CHECK(Real("0.5").to_string(3) == "0.500");
  CHECK(Real(-12).to_string(4) == "-12.00");
  CHECK(Real("1.5e-20").to_string(2) == "1.5e-20");
  CHECK_THROWS_AS(Real("not a number"), Error);
}

TEST_CASE("property: elementary function round trips") {
  const auto ctx = make_context(30);
  PrecisionScope s(ctx);
  testsupport::Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    const Real x(gen.uniform(1e-3, 50));
    CHECK(agree(exp(log(x)), x) >= 38);
    CHECK(agree(sqrt(x) * sqrt(x), x) >= 38);
    CHECK(agree(sin(x) * sin(x) + cos(x) * cos(x), Real(1)) >= 38);
    const Complex z(Real(gen.uniform(-3, 3)), Real(gen.uniform(-3, 3)));
    CHECK(agree(exp(log(z)), z) >= 37);
    CHECK(agree(norm(z), abs(z) * abs(z)) >= 37);
    const Complex r = sqrt(z);
    CHECK(r.real().sign() >= 0);
    CHECK(agree(r * r, z) >= 37);
  }
}
