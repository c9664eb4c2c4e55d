#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace dycla {

// mt19937_64 output is pinned by the standard, so seeded sequences are
// reproducible across platforms and standard libraries.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer; decorrelates nearby integer seeds.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of the `index`-th substream of `master`. Handing every Monte-Carlo
/// simulation its own substream makes batch results independent of how the
/// batch is split across threads.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(mix64(master + 0x9e3779b97f4a7c15ULL) +
               index * 0x9e3779b97f4a7c15ULL);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Unbiased uniform integer in [0, n). Rejection sampling keeps the result
/// independent of the standard library's distribution implementation.
inline std::uint32_t uniform_below(Rng& rng, std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: n must be positive");
  const std::uint64_t threshold =
      (0 - static_cast<std::uint64_t>(n)) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return static_cast<std::uint32_t>(x % n);
  }
}

/// One draw from Normal(0, stddev^2) via Box-Muller (cosine branch only, so
/// the number of engine draws per call is fixed).
inline double normal_draw(Rng& rng, double stddev) {
  const double u1 = 1.0 - uniform01(rng);  // (0, 1]
  const double u2 = uniform01(rng);
  return stddev * std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

/// Sample an index according to a probability vector (sums to 1). Entries
/// with zero probability are never returned.
inline std::size_t sample_index(Rng& rng, const std::vector<double>& probs) {
  const double u = uniform01(rng);
  double acc = 0.0;
  std::size_t last_positive = 0;
  bool seen_positive = false;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    acc += probs[i];
    last_positive = i;
    seen_positive = true;
    if (u < acc) return i;
  }
  if (!seen_positive)
    throw std::invalid_argument("sample_index: no positive probability mass");
  return last_positive;  // u landed in the rounding gap below 1
}

}  // namespace dycla
