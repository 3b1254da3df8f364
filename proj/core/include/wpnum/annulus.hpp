#pragma once

// Laurent analysis on round annuli A_r = {1 < |z| < r}.
//
// For f = sum a_n z^n holomorphic on A_r,
//   integral over A_r of (1 - |z|^2)^2 |f|^2 dA = 2 pi sum |a_n|^2 I_n(r),
//   I_n(r) = 1/2 integral_1^{r^2} rho^n (1 - rho)^2 d rho,
// and for 1 < t < r
//   sup_{A_t} (1 - |z|^2)^2 |f| <= C(r, t) * (weighted L^2 norm over A_r).
//
// Side::inner selects the reflected picture r < |z| < 1 (r < 1), where the
// same weighted quantities are measured but no constant is claimed.

#include "wpnum/quad.hpp"
#include "wpnum/series.hpp"
#include "wpnum/types.hpp"

namespace wpnum {

enum class Side { outer, inner };

struct LaurentFit {
  LaurentSeries series;
  /// max |f - reconstruction| / max |f| over the sample points (0 for f == 0).
  double residual = 0.0;
};

/// Recover a_{n_min}..a_{n_max} of f on inner < |z| < outer from samples on
/// `circles` concentric circles with `n_angular` points each.
LaurentFit laurent_coeffs(const Field& f, int n_min, int n_max, double inner, double outer,
                          int circles = 4, int n_angular = 0);

/// I_n(r) = 1/2 integral_1^{r^2} rho^n (1 - rho)^2 d rho, r >= 1.
double moment_I(int n, double r);

/// 1/2 integral_{r^2}^1 rho^n (1 - rho)^2 d rho for 0 < r <= 1 (reflected annulus).
double moment_I_inner(int n, double r);

/// sqrt(2 pi sum |a_n|^2 I_n(r)) on 1 < |z| < r, or the inner analogue on r < |z| < 1.
double weighted_norm_series(const LaurentSeries& s, double r, Side side = Side::outer);

/// C(r, t) = 4/sqrt(2 pi) * sqrt(r^2 + t^2)/(r^2 - t^2) * (1 - t^2)^2/(r^2 + 3)
///           + 4 sqrt(3)/sqrt(pi) * t,   1 < t < r.
double wulf_constant(double r, double t);

/// Pointwise factor at |z| = s in (1, r):
/// 4/sqrt(2 pi) * sqrt(r^2 + s^2)/(r^2 - s^2) * (1 - s^2)^2/(s^2 + r^2 + 2) + 4 sqrt(3)/sqrt(pi) * s.
double wulf_pointwise_factor(double r, double s);

/// sup of (1 - |z|^2)^2 |f(z)| over 1 < |z| <= t (Side::outer) or t <= |z| < 1 (Side::inner).
double sup_weighted(const Field& f, double t, const SupGrid& grid = {256, 256, 8, 12},
                    Side side = Side::outer);

}  // namespace wpnum
