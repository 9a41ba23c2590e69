#ifndef BLOCKLIS_RNG_HPP
#define BLOCKLIS_RNG_HPP

#include <cstdint>

namespace blocklis {

// SplitMix64 finalizer (Steele, Lea & Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Counter-based generator: draw k of stream `seed` is
// mix64(seed + (k+1) * golden), i.e. the (k+1)-th SplitMix64 output for that
// seed. A pure function of (seed, counter), so any draw can be replayed on any
// platform without generating its predecessors.
constexpr std::uint64_t counter_draw(std::uint64_t seed, std::uint64_t counter) noexcept {
  return mix64(seed + (counter + 1) * 0x9E3779B97F4A7C15ull);
}

// Distinct child streams from one user-facing seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return counter_draw(seed ^ 0x5851F42D4C957F2Dull, stream);
}

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next() { return counter_draw(seed_, counter_++); }

  // Uniform in [0,1) with 53-bit resolution.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound) via multiply-shift; bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace blocklis

#endif  // BLOCKLIS_RNG_HPP
