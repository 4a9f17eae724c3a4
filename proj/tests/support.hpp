#pragma once

// Shared helpers for the unit tests: a seeded generator for the property
// loops and digit comparison against decimal oracles.

#include <cstdint>
#include <random>

#include "walklab/precision.hpp"

namespace testsupport {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : g_(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(g_); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(g_); }

 private:
  std::mt19937_64 g_;
};

inline int agree(const walklab::Real& a, const walklab::Real& b) { return walklab::digits_agreed(a, b, 500); }
inline int agree(const walklab::Real& a, const char* oracle) { return agree(a, walklab::Real(oracle)); }
inline int agree(const walklab::Complex& a, const walklab::Complex& b) { return walklab::digits_agreed(a, b, 500); }

}  // namespace testsupport
