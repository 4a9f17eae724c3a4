#include "walklab/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <thread>

#include "walklab/error.hpp"

namespace walklab {

namespace {

constexpr std::uint64_t kChunk = 1u << 16;

struct ChunkSums {
  std::array<double, 4> pow_sums{};  // sums of X, X^2, X^4, X^8
  std::vector<std::uint64_t> hist = std::vector<std::uint64_t>(kHistogramBins, 0);
  double lo = 1e300, hi = -1e300;
};

// Top 53 bits as a double in [0, 1).
double unit(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

std::complex<double> step(std::mt19937_64& g) {
  const double t = 2 * std::numbers::pi * unit(g);
  return {std::cos(t), std::sin(t)};
}

double draw(const WalkSpec& spec, std::mt19937_64& g) {
  switch (spec.kind) {
    case WalkSpec::Kind::standard: {
      // Rotation invariance: the first step can be fixed at 1.
      std::complex<double> z = 1;
      for (int k = 1; k < spec.steps; ++k) z += step(g);
      return std::abs(z);
    }
    case WalkSpec::Kind::variant: {
      const auto e1 = step(g), e2 = step(g), e3 = step(g);
      return std::abs(1.0 + spec.b * e1 + e2 + e3 + e2 * e3);
    }
    case WalkSpec::Kind::phat: {
      const auto e1 = step(g), e2 = step(g);
      return std::abs((1.0 + e1) * (1.0 + e2));
    }
  }
  return 0;
}

void run_chunk(const WalkSpec& spec, std::uint64_t seed, std::uint64_t index, std::uint64_t count, ChunkSums& out) {
  std::mt19937_64 g(splitmix64_mix(seed ^ splitmix64_mix(index + 0x632be59bd9b4e019ULL)));
  const double hi = spec.support_hi();
  const double scale = kHistogramBins / hi;
  for (std::uint64_t i = 0; i < count; ++i) {
    const double x = draw(spec, g);
    const double x2 = x * x, x4 = x2 * x2;
    out.pow_sums[0] += x;
    out.pow_sums[1] += x2;
    out.pow_sums[2] += x4;
    out.pow_sums[3] += x4 * x4;
    const long bin = std::clamp(static_cast<long>(x * scale), 0L, static_cast<long>(kHistogramBins - 1));
    ++out.hist[static_cast<std::size_t>(bin)];
    out.lo = std::min(out.lo, x);
    out.hi = std::max(out.hi, x);
  }
}

}  // namespace

WalkSpec WalkSpec::standard(int steps) {
  WalkSpec s;
  s.kind = Kind::standard;
  s.steps = steps;
  return s;
}

WalkSpec WalkSpec::variant(double b) {
  WalkSpec s;
  s.kind = Kind::variant;
  s.b = b;
  return s;
}

WalkSpec WalkSpec::phat() {
  WalkSpec s;
  s.kind = Kind::phat;
  return s;
}

double WalkSpec::support_hi() const {
  switch (kind) {
    case Kind::standard: return steps;
    case Kind::variant: return b + 4;
    case Kind::phat: return 4;
  }
  return 0;
}

std::string WalkSpec::name() const {
  switch (kind) {
    case Kind::standard: return "W" + std::to_string(steps);
    case Kind::variant: return "variant(b=" + std::to_string(b) + ")";
    case Kind::phat: return "phat";
  }
  return "?";
}

std::uint64_t splitmix64_mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, const std::string& name) {
  // FNV-1a keeps the hash stable across platforms, unlike std::hash.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64_mix(seed ^ h);
}

McResult mc_walk(const WalkSpec& spec, std::uint64_t samples, std::uint64_t seed, int jobs) {
  if (samples < kMinSamples) fail(Errc::invalid_argument, "mc_walk: need at least 10^4 samples");
  if (jobs < 1) fail(Errc::invalid_argument, "mc_walk: jobs must be positive");
  if (spec.kind == WalkSpec::Kind::standard && (spec.steps < 2 || spec.steps > 6))
    fail(Errc::invalid_argument, "mc_walk: standard walks need 2..6 steps");
  if (spec.kind == WalkSpec::Kind::variant && !(spec.b > 0 && std::isfinite(spec.b)))
    fail(Errc::invalid_argument, "mc_walk: b must be positive");

  const std::uint64_t n_chunks = (samples + kChunk - 1) / kChunk;
  std::vector<ChunkSums> chunks(n_chunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c; (c = next.fetch_add(1)) < n_chunks;)
      run_chunk(spec, seed, c, std::min(kChunk, samples - c * kChunk), chunks[c]);
  };
  const int threads = static_cast<int>(std::min<std::uint64_t>(jobs, n_chunks));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  McResult r;
  r.samples = samples;
  r.support_hi = spec.support_hi();
  r.histogram.assign(kHistogramBins, 0);
  r.min_sample = 1e300;
  r.max_sample = -1e300;
  std::array<double, 4> s{};
  for (const auto& c : chunks) {  // fixed merge order
    for (int k = 0; k < 4; ++k) s[k] += c.pow_sums[k];
    for (int b = 0; b < kHistogramBins; ++b) r.histogram[b] += c.hist[b];
    r.min_sample = std::min(r.min_sample, c.lo);
    r.max_sample = std::max(r.max_sample, c.hi);
  }
  const double n = static_cast<double>(samples);
  // E[X^s] from sum index s -> 0, 1, 2; E[X^{2s}] from index 1, 2, 3.
  for (int k = 0; k < 3; ++k) {
    const double m = s[k] / n, m2 = s[k + 1] / n;
    r.moments[k] = m;
    r.std_errors[k] = std::sqrt(std::max(0.0, m2 - m * m) / (n - 1));
  }
  return r;
}

BinTest histogram_z(const McResult& r, const std::vector<double>& masses) {
  if (masses.size() != r.histogram.size()) fail(Errc::invalid_argument, "histogram_z: bin count mismatch");
  BinTest t;
  const double n = static_cast<double>(r.samples);
  for (std::size_t b = 0; b < masses.size(); ++b) {
    const double m = masses[b];
    const double sd = std::sqrt(n * m * (1 - m));
    const double diff = std::abs(static_cast<double>(r.histogram[b]) - n * m);
    // A bin of zero mass must be empty.
    const double z = sd > 0 ? diff / sd : (diff > 0 ? 1e300 : 0);
    if (z > t.max_z || t.worst_bin < 0) {
      t.max_z = z;
      t.worst_bin = static_cast<int>(b);
    }
  }
  return t;
}

}  // namespace walklab
