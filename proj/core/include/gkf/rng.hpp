#pragma once

#include <cmath>
#include <cstdint>

namespace gkf {

// Counter-based random stream: every variate is a pure function of
// (seed, index, slot), so sample i is the same no matter which worker
// draws it or in what order.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)))) {}

  // Uniform in (0, 1), open at both ends.
  double uniform(std::uint64_t index, std::uint32_t slot = 0) const {
    std::uint64_t z = mix(key_ ^ mix(index + 0x632be59bd9b4e019ULL) ^
                          (0xff51afd7ed558ccdULL * (slot + 1)));
    // 53-bit mantissa, shifted into (0,1)
    return (static_cast<double>(z >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; slots 2k and 2k+1 feed variate k.
  double normal(std::uint64_t index, std::uint32_t slot = 0) const {
    double u1 = uniform(index, 2 * slot);
    double u2 = uniform(index, 2 * slot + 1);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925286766559 * u2);
  }

  std::uint64_t key() const { return key_; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
};

}  // namespace gkf
