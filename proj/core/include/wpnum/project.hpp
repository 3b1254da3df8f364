#pragma once

// The weighted Bergman projection onto harmonic Beltrami differentials.
//
//   K(nu)(z) = 3/pi (1 - |z|^2)^2 integral_D (1 - conj(zeta) z)^{-4} conj(nu(zeta)) dA
//
// Expanding the kernel, K(nu) = (1 - |z|^2)^2 g(z) with
//   g_n = 3/pi binom(n+3, 3) conj(M_n),   M_n = integral_D nu(zeta) zeta^n dA.
// K is conjugate-linear; P(nu) := conj(K(nu)) = (1 - |z|^2)^2 conj(g) is the
// linear projection whose kernel is the class of nu with every M_n = 0.

#include <span>
#include <vector>

#include "wpnum/diff.hpp"
#include "wpnum/quad.hpp"
#include "wpnum/series.hpp"
#include "wpnum/types.hpp"

namespace wpnum {

/// M_0..M_N of a Beltrami differential against the monomials zeta^n.
class MomentVector {
 public:
  MomentVector() = default;
  explicit MomentVector(std::vector<Complex> m) : m_(std::move(m)) {}

  int truncation() const noexcept { return static_cast<int>(m_.size()) - 1; }
  Complex operator[](int n) const { return m_.at(static_cast<std::size_t>(n)); }
  std::span<const Complex> values() const noexcept { return m_; }
  double max_abs() const noexcept;

 private:
  std::vector<Complex> m_;
};

/// Moments from samples of nu at the nodes of `rule`.
MomentVector moments(const QuadratureRule& rule, std::span<const Complex> samples, int N);
MomentVector moments(const QuadratureRule& rule, const Field& nu, int N);

/// 3/pi binom(n + 3, 3).
double bergman_kernel_coefficient(int n);

/// Direct quadrature of K(nu)(z). Accurate where the rule resolves the
/// kernel peak near zeta = 1/conj(z); the default 64 x 256 rule is good to
/// |z| <= 0.8.
Complex k_project_direct(const QuadratureRule& rule, std::span<const Complex> samples, Complex z);
Complex k_project_direct(const QuadratureRule& rule, const Field& nu, Complex z);

/// g with K(nu) = (1 - |z|^2)^2 g.
PowerSeries k_project_series(const MomentVector& m);
PowerSeries k_project_series(const QuadratureRule& rule, const Field& nu, int N);

/// P(nu) = conj(K(nu)), returned as the harmonic Beltrami with phi = g.
HarmonicBeltrami p_project(const MomentVector& m);
HarmonicBeltrami p_project(const QuadratureRule& rule, std::span<const Complex> samples, int N);
HarmonicBeltrami p_project(const QuadratureRule& rule, const Field& nu, int N);

struct TrivialityResult {
  bool trivial = false;
  std::vector<double> residuals;  // |M_n|, n = 0..N
  double tolerance = 0.0;         // effective (scaled) tolerance
};

/// Infinitesimally trivial at truncation N: max_n |M_n| <= tol * sup|nu| over
/// the rule's nodes.
TrivialityResult is_infinitesimally_trivial(const QuadratureRule& rule,
                                            std::span<const Complex> samples, int N,
                                            double tol = 1e-8);
TrivialityResult is_infinitesimally_trivial(const QuadratureRule& rule, const Field& nu, int N,
                                            double tol = 1e-8);

struct Decomposition {
  HarmonicBeltrami harmonic;
  Field trivial_part;  // mu - harmonic, pointwise
  TrivialityResult residual;
};

/// mu = P(mu) + (mu - P(mu)). Throws NotBeltramiError when sup|mu| >= 1 on
/// the rule's nodes.
Decomposition decompose(const Field& mu, int N, const QuadratureRule& rule, double tol = 1e-8);

}  // namespace wpnum
