#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace numrange {

// One splitmix64 step (Steele, Lea and Flood's mixer).  Small, fast and
// reproducible everywhere; all randomness in the library flows through it
// so results for a fixed seed are bit-identical across runs and platforms.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Derives an independent sub-seed from (seed, value).  Chaining
// mix_seed(mix_seed(seed, a), b) gives every (a, b) stream its own seed, so
// work items can run in any order, or on any thread, without changing what
// each one produces.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t value) {
  std::uint64_t s =
      seed ^ (value + 0x9E3779B97F4A7C15ull + (seed << 6) + (seed >> 2));
  return splitmix64(s);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64(state_); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Box-Muller pair, packed as a complex number with independent standard
  // normal real and imaginary parts.
  std::complex<double> normal_complex() {
    const double pi = 3.141592653589793238462643383279502884;
    double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    return {r * std::cos(2.0 * pi * u2), r * std::sin(2.0 * pi * u2)};
  }

  double normal() { return normal_complex().real(); }

 private:
  std::uint64_t state_;
};

}  // namespace numrange
