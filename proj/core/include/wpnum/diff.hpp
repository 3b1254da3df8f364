#pragma once

// (k,l)-differentials on the model domains, their hyperbolic L^p norms, the
// isometry between (0,2) quadratic differentials and Beltrami differentials,
// and harmonic Beltrami differentials (1 - |z|^2)^2 conj(phi(z)).
//
// A (k,l)-differential h transforms under a chart change g as
//   h_V(w) = h_U(g(w)) g'(w)^k conj(g'(w))^l,
// and its L^p norm is (integral |h|^p rho^{2 - m p} dA)^{1/p} with m = k + l.

#include <optional>
#include <vector>

#include "wpnum/geom.hpp"
#include "wpnum/quad.hpp"
#include "wpnum/series.hpp"
#include "wpnum/types.hpp"

namespace wpnum {

struct Bidegree {
  int k = 0;
  int l = 0;

  constexpr int m() const noexcept { return k + l; }
  friend constexpr bool operator==(Bidegree, Bidegree) = default;
};

inline constexpr Bidegree kBeltrami{-1, 1};
inline constexpr Bidegree kQuadratic{2, 0};
inline constexpr Bidegree kConjQuadratic{0, 2};
inline constexpr Bidegree kAbelian{1, 0};

/// Closed form on the disk: (1 - |z|^2)^weight_power * (conjugated ? conj(P(z)) : P(z)).
struct SeriesForm {
  PowerSeries series;
  bool conjugated = false;
  int weight_power = 0;

  Complex operator()(Complex z) const;
};

class Differential {
 public:
  Differential(Bidegree bidegree, DomainTag domain, Field values);

  /// Series-backed differential on the disk.
  Differential(Bidegree bidegree, SeriesForm form);

  static Differential zero(Bidegree bidegree, DomainTag domain = DomainTag::disk);

  Complex operator()(Complex z) const { return values_(z); }

  Bidegree bidegree() const noexcept { return bidegree_; }
  DomainTag domain() const noexcept { return domain_; }
  const std::optional<SeriesForm>& series_form() const noexcept { return series_; }
  const Field& field() const noexcept { return values_; }

 private:
  Bidegree bidegree_;
  DomainTag domain_;
  Field values_;
  std::optional<SeriesForm> series_;
};

/// w_n = integral over the disk of (1 - |z|^2)^2 |z|^{2n} dA = 2 pi / ((n+1)(n+2)(n+3)).
double harmonic_weight(int n);

/// mu(z) = (1 - |z|^2)^2 conj(phi(z)) on the disk, phi a polynomial.
class HarmonicBeltrami {
 public:
  HarmonicBeltrami() = default;
  explicit HarmonicBeltrami(PowerSeries phi) : phi_(std::move(phi)) {}
  explicit HarmonicBeltrami(std::vector<Complex> phi) : phi_(std::move(phi)) {}

  const PowerSeries& phi() const noexcept { return phi_; }
  int degree() const noexcept { return phi_.degree(); }

  Complex operator()(Complex z) const;

  /// sqrt(sum |a_n|^2 w_n).
  double l2_norm() const;
  /// sup over the disk of (1 - |z|^2)^2 |phi(z)|.
  double sup_norm(const SupGrid& grid = {}) const;
  /// sup over |z| <= radius of |mu(z)|.
  double sup_norm_on(double radius, const SupGrid& grid = {}) const;

  Differential as_differential() const;

  /// Scaling the differential by s multiplies phi by conj(s).
  HarmonicBeltrami scaled(Complex s) const;
  friend HarmonicBeltrami operator+(const HarmonicBeltrami& a, const HarmonicBeltrami& b);
  friend HarmonicBeltrami operator-(const HarmonicBeltrami& a, const HarmonicBeltrami& b);

 private:
  PowerSeries phi_;
};

/// h(g(w)) g'(w)^k conj(g'(w))^l as a differential on `target`.
Differential transform_differential(const Differential& h, const HolomorphicMap& g,
                                    DomainTag target);

/// Grid-mode L^p norm, p in [1, inf] (use infinity() for the sup norm).
///
/// Nodes of `rule` must lie in the differential's domain. When the weight
/// rho^{2 - m p} is singular on a boundary circle the rule touches, the
/// integral is first probed on dyadic shells approaching that circle; if the
/// shell contributions stop decaying the result is flagged divergent.
Estimate<double> lp_norm(const Differential& h, double p, const QuadratureRule& rule);

/// Series-mode L^p norm on the disk. p = 2 is the closed form
/// pi sum |a_n|^2 B(n+1, e+1); other p use a dense reference rule on the
/// series evaluator and p = inf uses polar_sup.
Estimate<double> lp_norm_series(const Differential& h, double p, const SupGrid& grid = {});

/// integral over the disk of h1 conj(h2) rho^{2 - 2m} dA for two series forms
/// of the same total degree m, in closed form.
Estimate<Complex> series_pairing(const SeriesForm& a, const SeriesForm& b, int m);

/// The isometry B: psi (0,2) -> psi rho^{-2} (-1,1).
Differential beltrami_from_quadratic(const Differential& psi);
/// Inverse of beltrami_from_quadratic.
Differential quadratic_from_beltrami(const Differential& mu);

struct SchifferDilatation {
  Complex value;
  bool quasiconformal;  // false once |eps| >= 1
};

/// Dilatation of the local deformation z -> z + eps conj(z).
SchifferDilatation schiffer_dilatation(Complex eps);
Complex schiffer_map(Complex z, Complex eps);

}  // namespace wpnum
