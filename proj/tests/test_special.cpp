#include <doctest.h>

#include "support.hpp"
#include "walklab/special.hpp"

using namespace walklab;
using testsupport::agree;

namespace {
mpq_class q(long a, long b = 1) { return mpq_class(a, b); }
}  // namespace

TEST_CASE("hypergeometric values against mpmath") {
  const auto ctx = make_context(30);
  PrecisionScope s(ctx);
  const HypergeometricSpec h3{{q(1, 2), q(1, 2), q(1, 2)}, {q(3, 2), q(3, 2)}};
  CHECK(agree(hyp_pfq(h3, Real(1) / 2, ctx), "1.032631955744071472677093533981585894707") >= 38);
  // z = 1 with the asymptotic tail: pi/2 log 2 and zeta(2).
  CHECK(agree(hyp_pfq(h3, Real(1), ctx), ctx.pi() / 2 * log(Real(2))) >= 36);
  CHECK(agree(hyp_pfq({{q(1), q(1), q(1)}, {q(2), q(2)}}, Real(1), ctx), ctx.pi() * ctx.pi() / 6) >= 36);
  CHECK(agree(hyp_2f1_half(Real("0.3"), ctx), "1.091095910362781566395412210019548535491") >= 38);
  CHECK(agree(hyp_2f1_third_complement(Real("0.4"), ctx), "1.213125929265749290045665105498391869492") >= 38);
}

TEST_CASE("hypergeometric error reporting") {
  const auto ctx = make_context(20);
  PrecisionScope s(ctx);
  const HypergeometricSpec div{{q(1), q(1)}, {q(1)}};
  CHECK_THROWS_AS(hyp_pfq(div, Real(1), ctx), Error);
  CHECK_THROWS_AS(hyp_pfq(div, Real(2), ctx), Error);
  try {
    hyp_pfq({{q(1)}, {q(-2)}}, Real("0.1"), ctx);
    FAIL("expected a pole");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::pole);
  }
  CHECK(hyp_pfq({{q(1, 2)}, {q(3, 2)}}, Real(-2), ctx).is_finite());
}

TEST_CASE("Bessel, Legendre, Clausen, Bernoulli") {
  const auto ctx = make_context(30);
  PrecisionScope s(ctx);
  CHECK(agree(bessel_k0(Real(1), ctx), "0.4210244382407083333356273792126090361362") >= 38);
  CHECK(agree(bessel_i0(Real(1), ctx), "1.266065877752008335598244625214717537608") >= 38);
  CHECK(agree(bessel_k0(Real("7.5"), ctx), "0.0002491776163561143890146861952702424470558") >= 38);
  CHECK(agree(legendre_p(5, Real("0.3"), ctx), "0.34538625") >= 38);
  CHECK(agree(clausen2(ctx.pi() / 3, ctx), "1.014941606409653625021202554274520285942") >= 38);
  CHECK(agree(clausen2(Real(2), ctx), "0.7271460508632792474298382546083581761203") >= 38);
  CHECK(bernoulli(1) == q(-1, 2));
  CHECK(bernoulli(2) == q(1, 6));
  CHECK(bernoulli(12) == q(-691, 2730));
  CHECK(bernoulli(7) == 0);
}

TEST_CASE("property: AGM routes against the series") {
  const auto ctx = make_context(30);
  PrecisionScope s(ctx);
  testsupport::Gen gen(21);
  const HypergeometricSpec half{{q(1, 2), q(1, 2)}, {q(1)}};
  const HypergeometricSpec third{{q(1, 3), q(2, 3)}, {q(1)}};
  for (int i = 0; i < 30; ++i) {
    const Real m(gen.uniform(0, 0.9));
    const Real series = hyp_pfq(half, m, ctx);
    CHECK(agree(hyp_2f1_half(m, ctx), series) >= 37);
    CHECK(agree(hyp_2f1_half_complement(1 - m, ctx), series) >= 37);
    CHECK(agree(hyp_2f1_third_complement(1 - m, ctx), hyp_pfq(third, m, ctx)) >= 37);
    const Real a(gen.uniform(0.1, 5)), b(gen.uniform(0.1, 5));
    CHECK(agree(agm(a, b, ctx), agm(b, a, ctx)) >= 38);
    CHECK(agree(agm(a, b, ctx), agm((a + b) / 2, sqrt(a * b), ctx)) >= 37);
  }
}

TEST_CASE("property: Legendre polynomials as terminating 2F1") {
  const auto ctx = make_context(30);
  PrecisionScope s(ctx);
  testsupport::Gen gen(3);
  for (int i = 0; i < 30; ++i) {
    const unsigned k = static_cast<unsigned>(gen.integer(0, 12));
    const Real x(gen.uniform(-1, 1));
    const HypergeometricSpec spec{{q(-static_cast<long>(k)), q(k + 1)}, {q(1)}};
    CHECK(agree(legendre_p(k, x, ctx), hyp_pfq(spec, (1 - x) / 2, ctx)) >= 36);
  }
}

TEST_CASE("property: Clausen reflection and kernel limits") {
  const auto ctx = make_context(30);
  PrecisionScope s(ctx);
  testsupport::Gen gen(8);
  for (int i = 0; i < 20; ++i) {
    const Real t(gen.uniform(0.05, 3));
    CHECK(agree(clausen2(2 * ctx.pi() - t, ctx), -clausen2(t, ctx)) >= 36);
    // Duplication: Cl2(2t) = 2 Cl2(t) - 2 Cl2(pi - t).
    CHECK(agree(clausen2(2 * t, ctx), 2 * clausen2(t, ctx) - 2 * clausen2(ctx.pi() - t, ctx)) >= 36);
  }
  const HypergeometricSpec k{{q(1, 2), q(1, 2), q(1, 2)}, {q(3, 2), q(3, 2)}};
  for (const char* xs : {"0.25", "1", "1.75", "2"}) {
    const Real x(xs);
    CHECK(agree(red2_kernel(x, ctx), x / ctx.pi() * hyp_pfq(k, x * x / 4, ctx)) >= 36);
  }
}
