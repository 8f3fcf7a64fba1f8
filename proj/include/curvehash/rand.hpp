#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace curvehash {

using rng_engine = std::mt19937_64;

/// SplitMix64 finalizer. Shared by seed derivation and key fingerprinting so
/// results are identical across platforms and standard-library versions.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Folds a tag path into a parent seed, yielding independent child streams.
inline std::uint64_t derive_seed(std::uint64_t seed,
                                 std::initializer_list<std::uint64_t> tags) {
  std::uint64_t h = mix64(seed);
  for (std::uint64_t t : tags) h = mix64(h ^ mix64(t));
  return h;
}

inline rng_engine make_rng(std::uint64_t seed,
                           std::initializer_list<std::uint64_t> tags = {}) {
  return rng_engine(derive_seed(seed, tags));
}

/// Uniform double in [0, 1) built from 53 random bits.
inline double uniform_unit(rng_engine& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi). The upper bound stays excluded even when the
/// scaled product rounds up.
inline double uniform_in(rng_engine& g, double lo, double hi) {
  double v = lo + uniform_unit(g) * (hi - lo);
  return v < hi ? v : std::nextafter(hi, lo);
}

/// Uniform integer in [0, n), n > 0.
inline std::uint64_t uniform_below(rng_engine& g, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(g()) * n) >> 64);
}

/// Uniform integer in [lo, hi] inclusive.
inline std::uint64_t uniform_int(rng_engine& g, std::uint64_t lo,
                                 std::uint64_t hi) {
  return lo + uniform_below(g, hi - lo + 1);
}

}  // namespace curvehash
