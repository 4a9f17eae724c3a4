#pragma once

// Monte Carlo sampling of planar walk distances. Samples are drawn in fixed
// chunks, each with its own generator seeded from (seed, chunk index), and
// the chunk sums are merged in chunk order, so the result depends on the
// seed only and not on the number of worker threads.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace walklab {

struct WalkSpec {
  enum class Kind { standard, variant, phat };
  Kind kind = Kind::standard;
  int steps = 3;   // standard only, 2..6
  double b = 1;    // variant only, b > 0

  // |e_1 + ... + e_N| with unit steps in uniform directions.
  static WalkSpec standard(int steps);
  // |1 + b e_1 + e_2 + e_3 + e_2 e_3|.
  static WalkSpec variant(double b);
  // |(1 + e_1)(1 + e_2)|, the distance whose density is p-hat.
  static WalkSpec phat();

  double support_hi() const;
  std::string name() const;
};

struct McResult {
  std::uint64_t samples = 0;
  // Estimates of E[X^s] for s = 1, 2, 4 and their standard errors.
  static constexpr std::array<int, 3> kMomentOrders{1, 2, 4};
  std::array<double, 3> moments{};
  std::array<double, 3> std_errors{};
  // 200 equal-width bins over [0, support_hi]; samples at the ends clamp to
  // the edge bins.
  std::vector<std::uint64_t> histogram;
  double support_hi = 0;
  double min_sample = 0;
  double max_sample = 0;
};

inline constexpr int kHistogramBins = 200;
inline constexpr std::uint64_t kMinSamples = 10'000;

// Errc::invalid_argument for samples < kMinSamples, an unsupported step
// count, b <= 0 or jobs < 1.
McResult mc_walk(const WalkSpec& spec, std::uint64_t samples, std::uint64_t seed, int jobs = 1);

// SplitMix64 output function applied to x.
std::uint64_t splitmix64_mix(std::uint64_t x);
// Seed for a named sub-stream: mixes a stable hash of the name into seed.
std::uint64_t derive_seed(std::uint64_t seed, const std::string& name);

struct BinTest {
  double max_z = 0;      // max over bins of |count - n m| / sqrt(n m (1 - m))
  int worst_bin = -1;
};
// Binomial z-scores of the histogram against expected bin masses.
BinTest histogram_z(const McResult& r, const std::vector<double>& masses);

}  // namespace walklab
