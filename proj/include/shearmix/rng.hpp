#pragma once
// Counter-based random streams. Draw i of stream s under master seed m is a
// pure function of (m, s, i): consumers indexed by sample get bit-identical
// values for any worker count. The mixer is SplitMix64.

#include <cmath>
#include <cstdint>

namespace shearmix::rng {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

class Stream {
 public:
  explicit Stream(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix64(seed + kGolden) ^ mix64(stream * 0xda942042e4dd58b5ULL + 0x2545f4914f6cdd1dULL)) {}

  std::uint64_t next_u64() { return mix64(key_ + (++ctr_) * kGolden); }

  /// Uniform on [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on [0, 2): an angle in half-turn units.
  double next_half_turns() { return 2.0 * next_unit(); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  /// Standard normal via Box-Muller (bit-reproducible across platforms,
  /// unlike std::normal_distribution).
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - next_unit();  // (0, 1]
    double u2 = next_unit();
    double m = std::sqrt(-2.0 * std::log(u1));
    spare_ = m * std::sin(6.283185307179586476925286766559 * u2);
    have_spare_ = true;
    return m * std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace shearmix::rng
