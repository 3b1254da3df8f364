#pragma once

// Reproducible random test data. A single global seed is expanded with a
// counter-based mix into one independent stream per (stream id, trial index),
// so any trial can be regenerated in isolation.

#include <cstdint>
#include <random>
#include <vector>

#include "wpnum/diff.hpp"
#include "wpnum/series.hpp"
#include "wpnum/types.hpp"

namespace wpnum {

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for trial `index` of stream `stream` under the global seed.
std::uint64_t derive_seed(std::uint64_t global, std::uint64_t stream, std::uint64_t index) noexcept;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t global, std::uint64_t stream, std::uint64_t index)
      : engine_(derive_seed(global, stream, index)) {}

  /// Standard complex Gaussian (independent N(0, 1/2) parts).
  Complex gaussian();
  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);  // inclusive

  std::vector<Complex> gaussian_vector(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

PowerSeries random_polynomial(Rng& rng, int degree);

LaurentSeries random_laurent(Rng& rng, int n_min, int n_max, double inner, double outer);

HarmonicBeltrami random_harmonic(Rng& rng, int degree);

/// scale * conj(z)^a z^b q(|z|^2) with q(u) = c (u - (k+1)/(k+2)), k = max(a, b),
/// chosen so every moment against z^n (n >= 0) vanishes.
struct MomentFreeMode {
  int a = 0;
  int b = 0;
  Complex scale = 1.0;

  Complex operator()(Complex z) const;
  /// sup over the closed disk of |mode(z)| (attained on a radial scan).
  double sup() const;
};

MomentFreeMode random_moment_free(Rng& rng, int max_power);

}  // namespace wpnum
