#pragma once

// Area quadrature on the unit disk and on round annuli.
//
// Rules are polar products: Gauss-Legendre in the radius (with the r dr
// Jacobian folded into the weights) times the equispaced trapezoid rule in
// the angle. A disk rule with n_radial x n_angular nodes integrates
// z^a conj(z)^b exactly against dA whenever a + b <= min(2 n_radial - 1,
// n_angular - 1).

#include <span>
#include <variant>
#include <vector>

#include "wpnum/types.hpp"

namespace wpnum {

/// |z| < radius.
struct DiskRegion {
  double radius = 1.0;
};

/// inner < |z| < outer.
struct AnnulusRegion {
  double inner = 1.0;
  double outer = 2.0;
};

/// Cayley image T(D_R) of the disk |z| < disk_radius, a subset of the upper half-plane.
struct HalfPlaneRegion {
  double disk_radius = 1.0;
};

using Region = std::variant<DiskRegion, AnnulusRegion, HalfPlaneRegion>;

bool region_contains(const Region& region, Complex z);

/// Euclidean area of the region (the half-plane image of the full disk has infinite area).
double region_area(const Region& region);

/// One-dimensional Gauss-Legendre rule on [a, b].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(int n, double a = -1.0, double b = 1.0);

class QuadratureRule {
 public:
  QuadratureRule(Region region, std::vector<Complex> nodes,
                 std::vector<double> weights, int n_radial = 0, int n_angular = 0);

  const Region& region() const noexcept { return region_; }
  std::span<const Complex> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  // Polar layout the rule was built with; 0 for rules assembled by hand.
  int n_radial() const noexcept { return n_radial_; }
  int n_angular() const noexcept { return n_angular_; }

 private:
  Region region_;
  std::vector<Complex> nodes_;
  std::vector<double> weights_;
  int n_radial_ = 0;
  int n_angular_ = 0;
};

QuadratureRule disk_rule(int n_radial, int n_angular, double max_radius = 1.0);

/// Rule on 1 < |z| < r_outer.
QuadratureRule annulus_rule(double r_outer, int n_radial, int n_angular);

/// Rule on inner < |z| < outer for any 0 <= inner < outer.
QuadratureRule shell_rule(double inner, double outer, int n_radial, int n_angular);

/// Push a disk rule forward under the Cayley map; weights pick up |T'(z)|^2.
QuadratureRule half_plane_rule(int n_radial, int n_angular, double max_disk_radius = 1.0);

/// Evaluate f at every node.
std::vector<Complex> sample(const QuadratureRule& rule, const Field& f);

/// sum_i w_i f_i with compensated summation in node order.
/// Throws NumericError naming the first non-finite sample.
Complex integrate(const QuadratureRule& rule, std::span<const Complex> samples);
Complex integrate(const QuadratureRule& rule, const Field& f);

/// Real-valued integrand convenience.
double integrate_real(const QuadratureRule& rule, const std::function<double(Complex)>& f);

/// Neumaier-compensated accumulator; summation order is the call order.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class ComplexCompensatedSum {
 public:
  void add(Complex x) noexcept {
    re_.add(x.real());
    im_.add(x.imag());
  }
  Complex value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

/// Options for locating the maximum of a nonnegative function over a closed
/// polar region by a dense grid scan followed by local zoom refinement.
struct SupGrid {
  int n_radial = 256;
  int n_angular = 512;
  int candidates = 8;      // local grid maxima that get refined
  int refine_steps = 12;   // zoom iterations per candidate
};

/// max of g over inner <= |z| <= outer (both circles included).
double polar_sup(const std::function<double(Complex)>& g, double inner, double outer,
                 const SupGrid& grid = {});

}  // namespace wpnum
