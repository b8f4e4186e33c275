#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include "rpdmd/volume.hpp"

namespace rpdmd {

/// splitmix64 finalizer; derives independent stream seeds from one base seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Standard-normal stream via Box-Muller over mt19937_64.
/// std::normal_distribution is implementation-defined, so it is avoided to
/// keep seeded runs reproducible bit-exactly.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}

  double operator()() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1;
    do {
      u1 = uniform01();
    } while (u1 <= 0.0);
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  double uniform01() {  // [0, 1), 53-bit resolution
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline VideoVolume gaussian_volume(std::size_t frames, std::size_t height,
                                   std::size_t width, std::uint64_t seed,
                                   double mean = 0.0, double stddev = 1.0) {
  VideoVolume v(frames, height, width);
  GaussianSampler gauss(seed);
  for (double& x : v.data()) {
    x = mean + stddev * gauss();
  }
  return v;
}

inline VideoVolume uniform_volume(std::size_t frames, std::size_t height,
                                  std::size_t width, std::uint64_t seed,
                                  double lo = 0.0, double hi = 1.0) {
  VideoVolume v(frames, height, width);
  GaussianSampler gen(seed);
  for (double& x : v.data()) {
    x = lo + (hi - lo) * gen.uniform01();
  }
  return v;
}

}  // namespace rpdmd
