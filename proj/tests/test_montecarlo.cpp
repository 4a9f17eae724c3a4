#include <doctest.h>

#include <cmath>
#include <numeric>

#include "walklab/error.hpp"
#include "walklab/montecarlo.hpp"
#include "walklab/walks.hpp"

using namespace walklab;

TEST_CASE("results do not depend on the thread count") {
  const auto spec = WalkSpec::standard(3);
  const auto a = mc_walk(spec, 300'000, 42, 1);
  for (int jobs : {2, 3, 8}) {
    const auto b = mc_walk(spec, 300'000, 42, jobs);
    CHECK(a.histogram == b.histogram);
    for (int i = 0; i < 3; ++i) CHECK(a.moments[i] == b.moments[i]);
    CHECK(a.min_sample == b.min_sample);
    CHECK(a.max_sample == b.max_sample);
  }
}

TEST_CASE("different seeds give different streams") {
  const auto a = mc_walk(WalkSpec::phat(), 20'000, 1);
  const auto b = mc_walk(WalkSpec::phat(), 20'000, 2);
  CHECK(a.moments[0] != b.moments[0]);
  CHECK(derive_seed(7, "a") != derive_seed(7, "b"));
  CHECK(derive_seed(7, "a") == derive_seed(7, "a"));
  CHECK(splitmix64_mix(0) != splitmix64_mix(1));
}

TEST_CASE("samples stay in the support and the histogram counts them all") {
  for (const auto& spec : {WalkSpec::standard(2), WalkSpec::standard(5), WalkSpec::variant(0.5), WalkSpec::phat()}) {
    const auto r = mc_walk(spec, 50'000, 9, 2);
    CHECK(r.samples == 50'000);
    CHECK(r.min_sample >= 0);
    CHECK(r.max_sample <= spec.support_hi() + 1e-12);
    CHECK(r.histogram.size() == static_cast<std::size_t>(kHistogramBins));
    CHECK(std::accumulate(r.histogram.begin(), r.histogram.end(), std::uint64_t{0}) == r.samples);
  }
}

TEST_CASE("second and fourth moments land within a few standard errors") {
  // E[X^2] = N, E[X^4] = 2N^2 - N for the N-step walk
  for (int n : {2, 3, 4}) {
    const auto r = mc_walk(WalkSpec::standard(n), 400'000, 123, 4);
    CHECK_MESSAGE(std::abs(r.moments[1] - n) < 5 * r.std_errors[1], "N=" << n);
    CHECK_MESSAGE(std::abs(r.moments[2] - (2.0 * n * n - n)) < 5 * r.std_errors[2], "N=" << n);
  }
  // variant with b = 1: E[X^2] = sum_k C(1,k)^2 C(2k,k)^2 = 5
  const auto v = mc_walk(WalkSpec::variant(1), 400'000, 5, 4);
  CHECK(std::abs(v.moments[1] - 5) < 5 * v.std_errors[1]);
}

TEST_CASE("histogram agrees with exact bin masses") {
  const auto r = mc_walk(WalkSpec::standard(3), 200'000, 77, 4);
  const auto t = histogram_z(r, bin_masses(DensityId::p3, kHistogramBins));
  CHECK(t.max_z < 5);
  CHECK(t.worst_bin >= 0);
}

TEST_CASE("argument validation") {
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc{};
  };
  CHECK(code([] { mc_walk(WalkSpec::standard(3), 100, 1); }) == Errc::invalid_argument);
  CHECK(code([] { mc_walk(WalkSpec::standard(9), 20'000, 1); }) == Errc::invalid_argument);
  CHECK(code([] { mc_walk(WalkSpec::variant(-1), 20'000, 1); }) == Errc::invalid_argument);
  CHECK(code([] { mc_walk(WalkSpec::standard(3), 20'000, 1, 0); }) == Errc::invalid_argument);
}
