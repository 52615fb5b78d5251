#pragma once

#include <cmath>
#include <cstdint>

// Deterministic counter-based randomness. Every random decision in the
// project is a pure function of (seed, purpose, index...) via splitmix64
// chains, so results never depend on iteration order or worker count.
namespace obbm::rng {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

// Stream-separation purpose constants.
inline constexpr std::uint64_t kPurposeEnv = 0x01;
inline constexpr std::uint64_t kPurposeMotion = 0x02;
inline constexpr std::uint64_t kPurposeBranching = 0x03;
inline constexpr std::uint64_t kPurposeKill = 0x04;
inline constexpr std::uint64_t kPurposeSearch = 0x06;

// splitmix64 output finalizer
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Fold one value into a seed (one link of a splitmix64 chain).
inline constexpr std::uint64_t chain(std::uint64_t seed, std::uint64_t v) {
  return mix64(seed + kGolden + v);
}

inline constexpr std::uint64_t chain_i64(std::uint64_t seed, std::int64_t v) {
  return chain(seed, static_cast<std::uint64_t>(v));
}

// splitmix64 generator seeded from a chained state.
class Stream {
 public:
  explicit Stream(std::uint64_t state) : state_(state) {}

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix64(state_);
  }

  // uniform in [0, 1)
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // standard normal, Marsaglia polar method (spare cached)
  double next_gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * next_unit() - 1.0;
      v = 2.0 * next_unit() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
  }

  // Poisson(mean) via Knuth; additive splitting keeps exp(-mean) in range.
  std::uint64_t next_poisson(double mean) {
    std::uint64_t n = 0;
    while (mean > 60.0) {
      n += next_poisson_small(mean / 2.0);
      mean /= 2.0;
    }
    return n + next_poisson_small(mean);
  }

 private:
  std::uint64_t next_poisson_small(double mean) {
    const double limit = std::exp(-mean);
    double prod = next_unit();
    std::uint64_t k = 0;
    while (prod > limit) {
      ++k;
      prod *= next_unit();
    }
    return k;
  }

  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Stream for a (purpose, a, b) triple under a base seed, e.g. a = particle
// id, b = step index.
inline Stream stream(std::uint64_t seed, std::uint64_t purpose, std::uint64_t a,
                     std::uint64_t b) {
  return Stream(chain(chain(chain(seed, purpose), a), b));
}

}  // namespace obbm::rng
