#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace gerne {

// SplitMix64 step. Fully specified, so streams are reproducible independent
// of the standard library's (unspecified) distribution algorithms.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Named RNG streams. Every random decision in a run draws from a stream
// derived as
//
//   stream_seed(base, id) = splitmix64(splitmix64(base ^ id * GOLDEN))
//
// so that consuming one stream never perturbs another. Grid cells get their
// own base via StreamId::grid_cell(index), re-derived into the same named
// streams inside the cell.
struct StreamId {
  static constexpr std::uint64_t data_train = 1;
  static constexpr std::uint64_t data_val = 2;
  static constexpr std::uint64_t data_test = 3;
  static constexpr std::uint64_t init = 4;
  static constexpr std::uint64_t sampler_b = 5;
  static constexpr std::uint64_t sampler_lb = 6;
  static constexpr std::uint64_t split = 7;
  static constexpr std::uint64_t probe = 8;
  static constexpr std::uint64_t aux = 9;

  static constexpr std::uint64_t grid_cell(std::uint64_t index) {
    return 0x1000 + index;
  }
};

inline std::uint64_t derive_stream(std::uint64_t base, std::uint64_t id) {
  std::uint64_t s = base ^ (id * 0x9E3779B97F4A7C15ULL);
  (void)splitmix64(s);
  return splitmix64(s);
}

// Deterministic PRNG with explicit distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng stream(std::uint64_t base, std::uint64_t id) {
    return Rng(derive_stream(base, id));
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  // Uniform in [0,1) with 53 bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n). Rejection sampling, no modulo bias.
  std::uint64_t next_below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

  // Standard normal via Box-Muller; the second value of each pair is cached.
  double next_normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1;
    do {
      u1 = next_double();
    } while (u1 <= 0.0);
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace gerne
