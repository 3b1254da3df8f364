#pragma once

// Weil-Petersson pairing at the base point of the disk model:
//   <mu, nu> = integral_D mu conj(nu) lambda_D^2 dA       (Beltrami differentials)
//   (a, b)   = integral_D a conj(b) lambda_D^{-2} dA      (quadratic differentials)
// For harmonic Beltramis mu = (1-|z|^2)^2 conj(phi), nu = (1-|z|^2)^2 conj(psi),
//   <mu, nu> = sum_n conj(a_n) b_n w_n,  w_n = 2 pi / ((n+1)(n+2)(n+3)).

#include <string>
#include <vector>

#include "wpnum/diff.hpp"
#include "wpnum/quad.hpp"
#include "wpnum/types.hpp"

namespace wpnum {

/// Closed form on two harmonic Beltrami differentials.
Complex wp_inner(const HarmonicBeltrami& mu, const HarmonicBeltrami& nu);

/// Closed form on series-backed (-1,1) differentials; divergent when the
/// weighted integral is infinite (e.g. nonzero constant Beltrami).
Estimate<Complex> wp_inner(const Differential& mu, const Differential& nu);

/// Quadrature on `rule`. Inputs whose weighted modulus does not decay at the
/// boundary are reported divergent.
Estimate<Complex> wp_inner(const Differential& mu, const Differential& nu,
                           const QuadratureRule& rule);

/// Pairing of (0,2) quadratic differentials with weight lambda^{-2}.
Estimate<Complex> wp_inner_quadratic(const Differential& a, const Differential& b);
Estimate<Complex> wp_inner_quadratic(const Differential& a, const Differential& b,
                                     const QuadratureRule& rule);

class GramMatrix {
 public:
  GramMatrix(int size, std::string basis);

  int size() const noexcept { return n_; }
  const std::string& basis() const noexcept { return basis_; }

  Complex operator()(int i, int j) const { return data_.at(index(i, j)); }
  Complex& at(int i, int j) { return data_.at(index(i, j)); }

  /// max |G_ij - conj(G_ji)|.
  double hermitian_defect() const;
  /// Smallest eigenvalue of the Hermitian part.
  double min_eigenvalue() const;
  /// max |G_ij| over i != j.
  double max_off_diagonal() const;

 private:
  std::size_t index(int i, int j) const;

  int n_;
  std::string basis_;
  std::vector<Complex> data_;
};

/// Gram matrix of mu_n = (1-|z|^2)^2 conj(z^n), n = 0..N, in closed form.
GramMatrix wp_gram(int N);
/// Same basis, entries by quadrature on `rule`.
GramMatrix wp_gram(int N, const QuadratureRule& rule);

}  // namespace wpnum
