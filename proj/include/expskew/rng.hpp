#pragma once

// Counter-based random streams.
//
// Every draw is a pure function of (seed, stream, index):
//
//   key   = mix64(seed + GOLDEN * (stream + 1))
//   bits  = mix64(key  + GOLDEN * (index  + 1))
//   u     = ((bits >> 11) + 0.5) * 2^-53          in the open interval (0,1)
//
// where GOLDEN = 0x9E3779B97F4A7C15 and mix64 is the SplitMix64 finalizer
// (Steele, Lea & Flood 2014). Arithmetic is modulo 2^64, so streams are
// bit-identical on every platform, and replication r of a study can be
// regenerated without touching replications 0..r-1.

#include <cstdint>
#include <limits>

namespace expskew {

inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class counter_stream {
 public:
  using result_type = std::uint64_t;

  static constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ULL;

  constexpr counter_stream(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : key_(mix64(seed + golden * (stream + 1))) {}

  constexpr std::uint64_t bits_at(std::uint64_t index) const noexcept {
    return mix64(key_ + golden * (index + 1));
  }

  constexpr double uniform_at(std::uint64_t index) const noexcept {
    return (static_cast<double>(bits_at(index) >> 11) + 0.5) * 0x1.0p-53;
  }

  // Sequential interface; satisfies UniformRandomBitGenerator.
  constexpr std::uint64_t operator()() noexcept { return bits_at(counter_++); }
  double next_uniform() noexcept { return uniform_at(counter_++); }

  constexpr std::uint64_t position() const noexcept { return counter_; }

  static constexpr std::uint64_t min() noexcept { return 0; }
  static constexpr std::uint64_t max() noexcept {
    return std::numeric_limits<std::uint64_t>::max();
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace expskew
