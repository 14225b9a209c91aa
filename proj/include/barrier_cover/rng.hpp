#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>

// Seedable random source for the verification oracles. Draws are produced by
// explicit bit manipulation of the raw engine output (not std::uniform_*) so
// that sampled test values are bit-identical across standard libraries.

namespace bcov {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  // Uniform in [0, 1), 53 significant bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

// Seed precedence: an explicit --seed flag wins, then BARRIER_COVER_SEED from
// the environment, then the fixed default (keeps CI runs stable).
inline std::uint64_t seed_from_env() {
  if (const char* env = std::getenv("BARRIER_COVER_SEED"))
    return std::strtoull(env, nullptr, 0);
  return kDefaultSeed;
}

}  // namespace bcov
