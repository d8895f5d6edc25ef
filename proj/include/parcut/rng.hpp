#pragma once

#include <cstdint>
#include <limits>

namespace parcut {

// Counter-based generator: the n-th output is a pure function of (key, n),
// so split streams never interact and results do not depend on scheduling.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed = 0) : key_(mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  // Independent stream derived from this generator's key (not its position).
  [[nodiscard]] Rng split(std::uint64_t stream) const {
    Rng r;
    r.key_ = mix(key_ ^ mix(stream + 0xbb67ae8584caa73bULL));
    return r;
  }

  bool coin() { return ((*this)() >> 63) != 0; }

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>((*this)()) * bound) >> 64);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

// Named per-module streams.
enum class Stream : std::uint64_t {
  kPacking = 1,
  kDecomp = 2,
  kTwoCut = 3,
  kRetry = 4,
};

inline Rng stream(const Rng& base, Stream s) { return base.split(static_cast<std::uint64_t>(s)); }

}  // namespace parcut
