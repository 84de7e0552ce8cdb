#pragma once

// Seeded substreams for reproducible sampling. Each sample index gets its
// own engine derived from (master seed, index), so sharded generation is
// order-independent and bit-stable for a fixed master seed.

#include <cstdint>
#include <random>
#include <utility>

namespace qmono {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class Substream {
 public:
  Substream(std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t s = master_seed ^ (0xD1B54A32D192ED03ull * (index + 1));
    eng_.seed(splitmix64(s));
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // uniform in (0, 1]
  double uniform_pos() { return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53; }

  // Box-Muller pair of standard normals (std::normal_distribution is not
  // bit-stable across standard libraries).
  std::pair<double, double> normal_pair() {
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 6.283185307179586476925286766559 * u2;
    return {r * std::cos(t), r * std::sin(t)};
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace qmono
