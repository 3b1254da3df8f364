#include "wpnum/ensemble.hpp"

#include <algorithm>
#include <cmath>

namespace wpnum {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t global, std::uint64_t stream, std::uint64_t index) noexcept {
  return mix64(mix64(mix64(global) ^ stream) ^ index);
}

Complex Rng::gaussian() {
  std::normal_distribution<double> n(0.0, std::sqrt(0.5));
  const double re = n(engine_);
  const double im = n(engine_);
  return {re, im};
}

double Rng::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

int Rng::uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

std::vector<Complex> Rng::gaussian_vector(std::size_t n) {
  std::vector<Complex> v(n);
  for (auto& c : v) c = gaussian();
  return v;
}

PowerSeries random_polynomial(Rng& rng, int degree) {
  if (degree < 0) throw ParameterError("random_polynomial: degree must be >= 0");
  return PowerSeries(rng.gaussian_vector(static_cast<std::size_t>(degree) + 1));
}

LaurentSeries random_laurent(Rng& rng, int n_min, int n_max, double inner, double outer) {
  if (n_max < n_min) throw ParameterError("random_laurent: empty window");
  return LaurentSeries(n_min, rng.gaussian_vector(static_cast<std::size_t>(n_max - n_min + 1)),
                       inner, outer);
}

HarmonicBeltrami random_harmonic(Rng& rng, int degree) {
  return HarmonicBeltrami(random_polynomial(rng, degree));
}

Complex MomentFreeMode::operator()(Complex z) const {
  const int k = std::max(a, b);
  const double u = std::norm(z);
  const double q = u - (k + 1.0) / (k + 2.0);
  return scale * std::pow(std::conj(z), a) * std::pow(z, b) * q;
}

double MomentFreeMode::sup() const {
  // |mode| = |scale| r^{a+b} |r^2 - c|, maximised over r in [0, 1].
  const int k = std::max(a, b);
  const double c = (k + 1.0) / (k + 2.0);
  double best = 0.0;
  constexpr int kSteps = 4096;
  for (int i = 0; i <= kSteps; ++i) {
    const double r = static_cast<double>(i) / kSteps;
    best = std::max(best, std::pow(r, a + b) * std::abs(r * r - c));
  }
  return std::abs(scale) * best;
}

MomentFreeMode random_moment_free(Rng& rng, int max_power) {
  MomentFreeMode m;
  m.a = rng.uniform_int(0, max_power);
  m.b = rng.uniform_int(0, max_power);
  m.scale = rng.gaussian();
  return m;
}

}  // namespace wpnum
