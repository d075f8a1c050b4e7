/// \file rng.hpp
/// \brief Counter-based random numbers: value i of stream s under seed k is a
/// pure function of (k, s, i), so draws can be split across threads freely.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace cf {

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL))) {}

  /// Child generator for an independent sub-stream.
  CounterRng split(std::uint64_t stream) const { return CounterRng(key_, stream + 1); }

  std::uint64_t bits(std::uint64_t i) const { return splitmix64(key_ + splitmix64(i)); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform(std::uint64_t i) const { return static_cast<double>(bits(i) >> 11) * 0x1.0p-53; }

  /// Standard normal by Box-Muller on draws 2i and 2i+1.
  double normal(std::uint64_t i) const {
    const double u1 = 1.0 - uniform(2 * i);
    const double u2 = uniform(2 * i + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t key_;
};

}  // namespace cf
