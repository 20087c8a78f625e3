#pragma once

#include <cstdint>
#include <random>

#include "paretocert/types.hpp"

namespace paretocert {

/// Deterministic random source. All randomized routines take a caller seed;
/// nothing in the library touches global RNG state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {  // [0, 1)
    return (engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller; avoids implementation-defined std::normal_distribution so
  // a seed reproduces the same stream everywhere.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  Vec gaussian_vec(std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = gaussian();
    return v;
  }

  /// Uniform direction on the unit sphere.
  Vec unit_sphere(std::size_t n) {
    for (;;) {
      Vec v = gaussian_vec(n);
      const double r = norm2(v);
      if (r > 1e-12) {
        for (auto& x : v) x /= r;
        return v;
      }
    }
  }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace paretocert
