#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace flavent {

/// Counter-based splitmix64 stream. Byte-stable across platforms, unlike the
/// standard library distributions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in (0, 1); never exactly 0, so log() is safe.
  double uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

  /// Box-Muller standard normal.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double a = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Independent per-sample stream; adding samples never reshuffles earlier draws.
inline SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t sample_index) {
  return SplitMix64(seed ^ (sample_index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
}

}  // namespace flavent
