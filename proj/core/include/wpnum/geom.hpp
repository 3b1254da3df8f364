#pragma once

// Hyperbolic densities on the disk and half-plane, Moebius maps and the
// pullback rule rho_V(w) = rho_U(g(w)) |g'(w)|.

#include <functional>

#include "wpnum/types.hpp"

namespace wpnum {

enum class DomainTag {
  disk,        // |z| < 1, density 1 / (1 - |z|^2)
  half_plane,  // Im z > 0, density 1 / Im z
  annulus,     // |z| > 1 in disk coordinates, density 1 / (|z|^2 - 1)
};

/// 1 / (1 - |z|^2). Throws DomainError unless |z| < 1.
double lambda_disk(Complex z);

/// 1 / Im z. Throws DomainError unless Im z > 0.
double lambda_halfplane(Complex z);

/// 1 / (|z|^2 - 1), the disk density reflected to |z| > 1.
double lambda_exterior(Complex z);

class MetricDensity {
 public:
  MetricDensity(DomainTag tag, std::function<double(Complex)> eval)
      : tag_(tag), eval_(std::move(eval)) {}

  static MetricDensity disk() { return {DomainTag::disk, lambda_disk}; }
  static MetricDensity half_plane() { return {DomainTag::half_plane, lambda_halfplane}; }
  static MetricDensity exterior() { return {DomainTag::annulus, lambda_exterior}; }
  static MetricDensity for_domain(DomainTag tag);

  DomainTag tag() const noexcept { return tag_; }
  double operator()(Complex z) const { return eval_(z); }

 private:
  DomainTag tag_;
  std::function<double(Complex)> eval_;
};

/// A holomorphic map together with its derivative.
struct HolomorphicMap {
  std::function<Complex(Complex)> value;
  std::function<Complex(Complex)> derivative;

  Complex operator()(Complex z) const { return value(z); }

  static HolomorphicMap identity();
};

/// g o h with the chain rule for the derivative.
HolomorphicMap compose(const HolomorphicMap& g, const HolomorphicMap& h);

/// T(z) = i (1 + z) / (1 - z), the disk onto the upper half-plane.
Complex cayley(Complex z);
Complex cayley_derivative(Complex z);
/// T^{-1}(w) = (w - i) / (w + i).
Complex cayley_inv(Complex w);
Complex cayley_inv_derivative(Complex w);

HolomorphicMap cayley_map();
HolomorphicMap cayley_inv_map();

/// z -> (a z + b) / (c z + d) with ad - bc != 0.
class MoebiusMap {
 public:
  MoebiusMap(Complex a, Complex b, Complex c, Complex d);

  static MoebiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static MoebiusMap rotation(double theta);
  /// e^{i theta} (z - a) / (1 - conj(a) z), |a| < 1.
  static MoebiusMap disk_automorphism(double theta, Complex a);

  Complex a() const noexcept { return a_; }
  Complex b() const noexcept { return b_; }
  Complex c() const noexcept { return c_; }
  Complex d() const noexcept { return d_; }
  Complex determinant() const noexcept { return a_ * d_ - b_ * c_; }

  Complex operator()(Complex z) const;
  Complex derivative(Complex z) const;

  /// (*this) o inner
  MoebiusMap compose(const MoebiusMap& inner) const;
  MoebiusMap inverse() const;

  HolomorphicMap as_map() const;

 private:
  Complex a_, b_, c_, d_;
};

/// w -> rho(g(w)) |g'(w)|, tagged with the domain of the new chart.
MetricDensity pullback_metric(const HolomorphicMap& g, const MetricDensity& rho,
                              DomainTag new_domain = DomainTag::disk);

}  // namespace wpnum
