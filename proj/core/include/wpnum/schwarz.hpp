#pragma once

// Pre-Schwarzian and Schwarzian calculus on Taylor series at 0.
//
//   A(f) = f'' / f',   S(f) = A' - A^2 / 2 = f'''/f' - 3/2 (f''/f')^2.
//
// Maps are always carried as coefficients; every derivative is an exact
// series operation. A degree-N map yields A through degree N-2 and S through
// degree N-3.

#include <optional>
#include <utility>

#include "wpnum/quad.hpp"
#include "wpnum/series.hpp"
#include "wpnum/types.hpp"

namespace wpnum {

/// sqrt(12 / pi): sup_D (1 - |z|^2)^2 |S| <= sqrt(12/pi) ||S||_{A^2_2}.
double sup_l2_constant();

/// f'' / f'. Throws NotLocallyUnivalent when f'(0) == 0.
PowerSeries pre_schwarzian(const PowerSeries& f);

/// (psi' - psi^2 / 2, psi(0)).
struct PsiImage {
  PowerSeries schwarzian;
  Complex value_at_zero;
};
PsiImage psi_map(const PowerSeries& psi);

/// First component of psi_map(pre_schwarzian(f)). The expanded form
/// (f''' f' - 3/2 f''^2) / f'^2 cancels terms of size n^4 |c_n|^2 and loses
/// several digits at high degree; A' - A^2/2 does not.
PowerSeries schwarzian(const PowerSeries& f);

/// Directional derivative d/dt S(f + t g) at t = 0, from dA = (g'' f' - f'' g') / f'^2
/// and dS = dA' - A dA.
PowerSeries schwarzian_variation(const PowerSeries& f, const PowerSeries& g);

/// (f''/f', f'(0)).
struct WPCoordinates {
  PowerSeries pre_schwarzian;
  Complex derivative_at_zero;
};
WPCoordinates wp_coordinates(const PowerSeries& f);

/// Solve A' - A^2/2 = S with A(0) = a0 degree by degree, through `degree`.
PowerSeries pre_schwarzian_from_schwarzian(const PowerSeries& S, Complex a0, int degree);

/// Rebuild f with f(0) = 0, f'(0) = fprime0 and f''/f' = A:
/// f' = fprime0 exp(integral A), f = integral f'.
PowerSeries map_from_pre_schwarzian(const PowerSeries& A, Complex fprime0);

/// ||A||_{A^2_1}^2 = integral |A|^2 dA = pi sum |a_n|^2 / (n + 1).
double a21_norm(const PowerSeries& A);
/// ||S||_{A^2_2}^2 = integral (1 - |z|^2)^2 |S|^2 dA = sum |s_n|^2 w_n.
double a22_norm(const PowerSeries& S);

struct BergmanNorms {
  double pre_schwarzian;  // ||A||_{A^2_1}
  double schwarzian;      // ||S||_{A^2_2}
};

/// Closed-form norms of A and S = psi_map(A).schwarzian.
BergmanNorms bergman_norms(const WPCoordinates& x);
/// Same norms by quadrature (divergence-guarded through lp_norm).
BergmanNorms bergman_norms(const WPCoordinates& x, const QuadratureRule& rule);

struct BoundCheck {
  double value = 0.0;
  double bound = 0.0;
  double ratio = 0.0;  // value / bound, 0 when both vanish
};

/// sup (1 - |z|^2)^2 |S| against sqrt(12/pi) ||S||_{A^2_2}.
BoundCheck nehari_tnt_check(const PowerSeries& S, const SupGrid& grid = {});

/// Dilatation of the Ahlfors-Weill reflection at 1/conj(z), as a function of z in D:
/// -(1 - |z|^2)^2 / 2 * z^2 / conj(z)^2 * S(z); 0 at z = 0.
Complex ahlfors_weill_dilatation(const PowerSeries& S, Complex z);

struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 1.0;  // lhs / rhs, 1 when both vanish
};

/// lhs = integral |m(1/conj z)|^2 / (1 - |z|^2)^2 dA on lhs_rule,
/// rhs = 1/4 integral (1 - |z|^2)^2 |S|^2 dA on rhs_rule.
IdentityCheck aw_l2_identity_check(const PowerSeries& S, const QuadratureRule& lhs_rule,
                                   const QuadratureRule& rhs_rule);

/// ||S||^2_{A^2_2} / ||mu||^2_2, with ||mu||_2 taken over D* through the
/// reflected evaluator mu_reflected(z) = mu(1/conj z). nullopt when ||mu|| == 0.
std::optional<double> guohui_ratio(const Field& mu_reflected, const PowerSeries& S,
                                   const QuadratureRule& rule);

}  // namespace wpnum
