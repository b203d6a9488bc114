#ifndef KGNG_RNG_HPP
#define KGNG_RNG_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>

namespace kgng {

// Deterministic random source used everywhere randomness is needed.
// All values are derived from raw mt19937_64 output, so sequences do not
// depend on the standard library's distribution implementations.
//
// Engine draws per call: uniform() and uniform_index() take one,
// gaussian() takes exactly two.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform double in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform index in [0, n); n must be positive.
  std::size_t uniform_index(std::size_t n) {
    auto i = static_cast<std::size_t>(uniform() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

  // Standard normal via the Box-Muller transform.
  double gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    return r * std::cos(2.0 * kPi * u2);
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;
  std::mt19937_64 engine_;
};

}  // namespace kgng

#endif  // KGNG_RNG_HPP
