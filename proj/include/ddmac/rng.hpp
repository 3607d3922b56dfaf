#pragma once

#include <cstdint>
#include <limits>

namespace ddmac {

/// Counter-based SplitMix64 stream keyed by (seed, stream).
///
/// Output k of a stream is a pure function of (seed, stream, k), so parallel
/// trials can each own a stream indexed by trial number and still reproduce
/// the serial result bit for bit. Satisfies UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = std::uint64_t;
  static constexpr const char* kName = "splitmix64-counter";

  CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept { return mix(key_ + kGamma * ++counter_); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) noexcept { return uniform01() < p; }

  /// `count` independent fair bits in the low positions of the word.
  std::uint64_t bits(unsigned count) noexcept {
    const std::uint64_t w = (*this)();
    return count >= 64 ? w : (w & ((std::uint64_t{1} << count) - 1));
  }

  std::uint64_t counter() const noexcept { return counter_; }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace ddmac
