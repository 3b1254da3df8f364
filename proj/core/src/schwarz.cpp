#include "wpnum/schwarz.hpp"

#include <cmath>
#include <limits>

#include "wpnum/diff.hpp"

namespace wpnum {

namespace {

void require_univalent(const PowerSeries& f) {
  if (f.degree() < 1 || f[1] == Complex{})
    throw NotLocallyUnivalent("f'(0) == 0: map is not locally univalent at 0");
}

void require_disk_rule(const QuadratureRule& rule, const char* who) {
  const auto* d = std::get_if<DiskRegion>(&rule.region());
  if (!d || d->radius > 1.0) throw ParameterError(std::string(who) + ": expected a disk rule");
}

}  // namespace

double sup_l2_constant() { return std::sqrt(12.0 / pi); }

PowerSeries pre_schwarzian(const PowerSeries& f) {
  require_univalent(f);
  if (f.degree() < 2) throw ParameterError("pre_schwarzian: truncation degree must be >= 2");
  const PowerSeries d1 = f.derivative();
  const PowerSeries d2 = d1.derivative();
  return d2 * d1.reciprocal();
}

PsiImage psi_map(const PowerSeries& psi) {
  PowerSeries s = psi.derivative() - 0.5 * (psi * psi);
  return {std::move(s), psi[0]};
}

PowerSeries schwarzian(const PowerSeries& f) {
  if (f.degree() < 3) {
    require_univalent(f);
    throw ParameterError("schwarzian: truncation degree must be >= 3");
  }
  return psi_map(pre_schwarzian(f)).schwarzian;
}

PowerSeries schwarzian_variation(const PowerSeries& f, const PowerSeries& g) {
  require_univalent(f);
  const PowerSeries f1 = f.derivative();
  const PowerSeries f2 = f1.derivative();
  const PowerSeries g1 = g.derivative();
  const PowerSeries g2 = g1.derivative();
  const PowerSeries inv = f1.reciprocal();
  const PowerSeries A = f2 * inv;
  const PowerSeries dA = (g2 * f1 - f2 * g1) * (inv * inv);
  return dA.derivative() - A * dA;
}

WPCoordinates wp_coordinates(const PowerSeries& f) {
  return {pre_schwarzian(f), f[1]};
}

PowerSeries pre_schwarzian_from_schwarzian(const PowerSeries& S, Complex a0, int degree) {
  if (degree < 0) throw ParameterError("pre_schwarzian_from_schwarzian: degree must be >= 0");
  std::vector<Complex> a(static_cast<std::size_t>(degree) + 1);
  a[0] = a0;
  for (int n = 0; n < degree; ++n) {
    Complex sq{};
    for (int j = 0; j <= n; ++j) sq += a[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(n - j)];
    a[static_cast<std::size_t>(n) + 1] = (S[n] + 0.5 * sq) / static_cast<double>(n + 1);
  }
  return PowerSeries(std::move(a));
}

PowerSeries map_from_pre_schwarzian(const PowerSeries& A, Complex fprime0) {
  if (fprime0 == Complex{}) throw NotLocallyUnivalent("map_from_pre_schwarzian: f'(0) == 0");
  const PowerSeries fprime = A.integral(0.0).exp() * fprime0;
  return fprime.integral(0.0);
}

double a21_norm(const PowerSeries& A) {
  CompensatedSum acc;
  for (int n = 0; n <= A.degree(); ++n) acc.add(std::norm(A[n]) * pi / (n + 1.0));
  return std::sqrt(acc.value());
}

double a22_norm(const PowerSeries& S) {
  CompensatedSum acc;
  for (int n = 0; n <= S.degree(); ++n) acc.add(std::norm(S[n]) * harmonic_weight(n));
  return std::sqrt(acc.value());
}

BergmanNorms bergman_norms(const WPCoordinates& x) {
  const PowerSeries S = psi_map(x.pre_schwarzian).schwarzian;
  return {a21_norm(x.pre_schwarzian), a22_norm(S)};
}

BergmanNorms bergman_norms(const WPCoordinates& x, const QuadratureRule& rule) {
  const PowerSeries S = psi_map(x.pre_schwarzian).schwarzian;
  const Differential a(kAbelian, SeriesForm{x.pre_schwarzian, false, 0});
  const Differential s(kQuadratic, SeriesForm{S, false, 0});
  const auto na = lp_norm(Differential(kAbelian, DomainTag::disk, a.field()), 2.0, rule);
  const auto ns = lp_norm(Differential(kQuadratic, DomainTag::disk, s.field()), 2.0, rule);
  constexpr double inf = std::numeric_limits<double>::infinity();
  return {na.diverged() ? inf : na.value, ns.diverged() ? inf : ns.value};
}

BoundCheck nehari_tnt_check(const PowerSeries& S, const SupGrid& grid) {
  BoundCheck out;
  out.value = polar_sup(
      [&S](Complex z) {
        const double w = 1.0 - std::norm(z);
        return w * w * std::abs(S(z));
      },
      0.0, 1.0, grid);
  out.bound = sup_l2_constant() * a22_norm(S);
  out.ratio = out.bound > 0.0 ? out.value / out.bound
                              : (out.value > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
  return out;
}

Complex ahlfors_weill_dilatation(const PowerSeries& S, Complex z) {
  const double s = std::norm(z);
  if (!(s < 1.0)) throw DomainError("ahlfors_weill_dilatation: need |z| < 1");
  if (z == Complex{}) return 0.0;
  const double w = 1.0 - s;
  const Complex phase = z / std::conj(z);
  return -0.5 * w * w * phase * phase * S(z);
}

IdentityCheck aw_l2_identity_check(const PowerSeries& S, const QuadratureRule& lhs_rule,
                                   const QuadratureRule& rhs_rule) {
  require_disk_rule(lhs_rule, "aw_l2_identity_check");
  require_disk_rule(rhs_rule, "aw_l2_identity_check");
  IdentityCheck out;
  out.lhs = integrate_real(lhs_rule, [&S](Complex z) {
    const double w = 1.0 - std::norm(z);
    return std::norm(ahlfors_weill_dilatation(S, z)) / (w * w);
  });
  out.rhs = 0.25 * integrate_real(rhs_rule, [&S](Complex z) {
              const double w = 1.0 - std::norm(z);
              return w * w * std::norm(S(z));
            });
  if (out.rhs > 0.0)
    out.ratio = out.lhs / out.rhs;
  else
    out.ratio = out.lhs == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return out;
}

std::optional<double> guohui_ratio(const Field& mu_reflected, const PowerSeries& S,
                                   const QuadratureRule& rule) {
  const auto norm = lp_norm(Differential(kBeltrami, DomainTag::disk, mu_reflected), 2.0, rule);
  if (norm.diverged()) return 0.0;
  if (!(norm.value > 0.0)) return std::nullopt;
  const double s = a22_norm(S);
  return (s * s) / (norm.value * norm.value);
}

}  // namespace wpnum
