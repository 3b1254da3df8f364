#include "wpnum/diff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wpnum {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dyadic shells approaching the circle |z| = 1 from inside the rule's region.
struct ShellPlan {
  double far_edge;   // radius of the edge away from the singular circle
  double width;      // distance from far_edge to |z| = 1
  bool from_inside;  // approaching 1 from |z| < 1
};

std::optional<ShellPlan> singular_shells(const Region& region) {
  if (const auto* d = std::get_if<DiskRegion>(&region); d && d->radius == 1.0)
    return ShellPlan{0.0, 1.0, true};
  if (const auto* a = std::get_if<AnnulusRegion>(&region)) {
    if (a->outer == 1.0) return ShellPlan{a->inner, 1.0 - a->inner, true};
    if (a->inner == 1.0 && std::isfinite(a->outer)) return ShellPlan{a->outer, a->outer - 1.0, false};
  }
  return std::nullopt;
}

void require_domain_match(const Region& region, DomainTag domain) {
  bool ok = false;
  if (const auto* d = std::get_if<DiskRegion>(&region))
    ok = domain == DomainTag::disk && d->radius <= 1.0;
  else if (const auto* a = std::get_if<AnnulusRegion>(&region))
    ok = (domain == DomainTag::disk && a->outer <= 1.0) ||
         (domain == DomainTag::annulus && a->inner >= 1.0);
  else if (std::holds_alternative<HalfPlaneRegion>(region))
    ok = domain == DomainTag::half_plane;
  if (!ok) throw ParameterError("lp_norm: quadrature region does not lie in the differential's domain");
}

// Contributions of successive shells must keep shrinking; ratios near or
// above 1 mean the integral grows without bound toward the circle.
bool shells_diverge(const std::function<double(Complex)>& integrand, const ShellPlan& plan,
                    int n_radial, int n_angular, double& partial) {
  constexpr int kShells = 18;
  constexpr double kRatioThreshold = 0.9;
  std::vector<double> s;
  s.reserve(kShells);
  partial = 0.0;
  for (int k = 1; k <= kShells; ++k) {
    const double a = plan.width * std::ldexp(1.0, -(k - 1));
    const double b = plan.width * std::ldexp(1.0, -k);
    double r0, r1;
    if (plan.from_inside) {
      r0 = 1.0 - a;
      r1 = 1.0 - b;
    } else {
      r0 = 1.0 + b;
      r1 = 1.0 + a;
    }
    const QuadratureRule shell = shell_rule(r0, r1, n_radial, n_angular);
    const double v = integrate_real(shell, integrand);
    partial += v;
    s.push_back(v);
  }
  const double s1 = s[kShells - 3], s2 = s[kShells - 2], s3 = s[kShells - 1];
  if (!(s2 > 0.0) || !(s1 > 0.0)) return false;
  return s3 / s2 > kRatioThreshold && s2 / s1 > kRatioThreshold;
}

// (1 - |z|^2)^e |z|^{2n} integrated over the disk: pi B(n + 1, e + 1).
double radial_moment(int n, int e) { return pi * std::beta(n + 1.0, e + 1.0); }

double pow_int(double x, int e) { return std::pow(x, static_cast<double>(e)); }

}  // namespace

Complex SeriesForm::operator()(Complex z) const {
  const Complex v = conjugated ? std::conj(series(z)) : series(z);
  if (weight_power == 0) return v;
  return pow_int(1.0 - std::norm(z), weight_power) * v;
}

Differential::Differential(Bidegree bidegree, DomainTag domain, Field values)
    : bidegree_(bidegree), domain_(domain), values_(std::move(values)) {
  if (!values_) throw ParameterError("Differential: empty evaluator");
}

Differential::Differential(Bidegree bidegree, SeriesForm form)
    : bidegree_(bidegree), domain_(DomainTag::disk), series_(std::move(form)) {
  const SeriesForm copy = *series_;
  values_ = [copy](Complex z) { return copy(z); };
}

Differential Differential::zero(Bidegree bidegree, DomainTag domain) {
  if (domain == DomainTag::disk)
    return {bidegree, SeriesForm{PowerSeries::zero(0), false, 0}};
  return {bidegree, domain, [](Complex) { return Complex{}; }};
}

double harmonic_weight(int n) {
  if (n < 0) throw ParameterError("harmonic_weight: n must be >= 0");
  const double a = n + 1.0;
  return 2.0 * pi / (a * (a + 1.0) * (a + 2.0));
}

Complex HarmonicBeltrami::operator()(Complex z) const {
  const double s = 1.0 - std::norm(z);
  return s * s * std::conj(phi_(z));
}

double HarmonicBeltrami::l2_norm() const {
  CompensatedSum acc;
  for (int n = 0; n <= phi_.degree(); ++n) acc.add(std::norm(phi_[n]) * harmonic_weight(n));
  return std::sqrt(acc.value());
}

double HarmonicBeltrami::sup_norm(const SupGrid& grid) const { return sup_norm_on(1.0, grid); }

double HarmonicBeltrami::sup_norm_on(double radius, const SupGrid& grid) const {
  if (!(radius > 0.0 && radius <= 1.0)) throw ParameterError("sup_norm_on: radius in (0, 1]");
  const PowerSeries& phi = phi_;
  return polar_sup(
      [&phi](Complex z) {
        const double s = 1.0 - std::norm(z);
        return s * s * std::abs(phi(z));
      },
      0.0, radius, grid);
}

Differential HarmonicBeltrami::as_differential() const {
  return {kBeltrami, SeriesForm{phi_, true, 2}};
}

HarmonicBeltrami HarmonicBeltrami::scaled(Complex s) const {
  return HarmonicBeltrami(phi_ * std::conj(s));
}

namespace {
PowerSeries padded_sum(const PowerSeries& a, const PowerSeries& b, double sign) {
  const int deg = std::max(a.degree(), b.degree());
  std::vector<Complex> c(static_cast<std::size_t>(deg) + 1);
  for (int n = 0; n <= deg; ++n) c[static_cast<std::size_t>(n)] = a[n] + sign * b[n];
  return PowerSeries(std::move(c));
}
}  // namespace

// Polynomials are exact, so the sum keeps the larger degree.
HarmonicBeltrami operator+(const HarmonicBeltrami& a, const HarmonicBeltrami& b) {
  return HarmonicBeltrami(padded_sum(a.phi_, b.phi_, 1.0));
}

HarmonicBeltrami operator-(const HarmonicBeltrami& a, const HarmonicBeltrami& b) {
  return HarmonicBeltrami(padded_sum(a.phi_, b.phi_, -1.0));
}

Differential transform_differential(const Differential& h, const HolomorphicMap& g,
                                    DomainTag target) {
  const Bidegree bd = h.bidegree();
  const Field src = h.field();
  return {bd, target, [src, g, bd](Complex w) {
            const Complex d = g.derivative(w);
            const Complex v = src(g.value(w));
            return v * std::pow(d, bd.k) * std::pow(std::conj(d), bd.l);
          }};
}

Estimate<double> lp_norm(const Differential& h, double p, const QuadratureRule& rule) {
  if (!(p >= 1.0)) throw ParameterError("lp_norm: p must lie in [1, inf]");
  require_domain_match(rule.region(), h.domain());
  const MetricDensity rho = MetricDensity::for_domain(h.domain());
  const int m = h.bidegree().m();

  if (std::isinf(p)) {
    auto weighted = [&](Complex z) { return std::abs(h(z)) * std::pow(rho(z), -m); };
    std::size_t best_i = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double v = weighted(rule.nodes()[i]);
      if (!std::isfinite(v)) throw NumericError("lp_norm: non-finite value at a node");
      if (v > best) {
        best = v;
        best_i = i;
      }
    }
    if (rule.size() < 2) return {std::max(best, 0.0), false};
    // Local zoom around the best node, staying inside the region.
    Complex c = rule.nodes()[best_i];
    double step = kInf;
    for (std::size_t i = 0; i < rule.size(); ++i)
      if (i != best_i) step = std::min(step, std::abs(rule.nodes()[i] - c));
    // Pattern search: keep the step while the best point sits on the stencil
    // edge, halve it once the maximum is bracketed.
    for (int iter = 0, halvings = 0; iter < 200 && halvings < 30; ++iter) {
      Complex bc = c;
      bool edge = false;
      for (int a = -2; a <= 2; ++a) {
        for (int b = -2; b <= 2; ++b) {
          const Complex z = c + 0.5 * step * Complex(a, b);
          if (!region_contains(rule.region(), z)) continue;
          const double v = weighted(z);
          if (std::isfinite(v) && v > best) {
            best = v;
            bc = z;
            edge = std::abs(a) == 2 || std::abs(b) == 2;
          }
        }
      }
      c = bc;
      if (!edge) {
        step *= 0.5;
        ++halvings;
      }
    }
    return {best, false};
  }

  const double weight_exp = 2.0 - m * p;
  auto integrand = [&](Complex z) {
    return std::pow(std::abs(h(z)), p) * std::pow(rho(z), weight_exp);
  };
  if (weight_exp > 0.0) {
    if (const auto plan = singular_shells(rule.region())) {
      const int nr = std::clamp(rule.n_radial(), 8, 24);
      const int nt = std::max(rule.n_angular(), 16);
      double partial = 0.0;
      if (shells_diverge(integrand, *plan, nr, nt, partial))
        return {std::pow(partial, 1.0 / p), true};
    }
  }
  const double total = integrate_real(rule, integrand);
  return {std::pow(std::max(total, 0.0), 1.0 / p), false};
}

Estimate<Complex> series_pairing(const SeriesForm& a, const SeriesForm& b, int m) {
  const int e = a.weight_power + b.weight_power + 2 * m - 2;
  const PowerSeries& P = a.series;
  const PowerSeries& Q = b.series;
  ComplexCompensatedSum acc;
  bool nonzero = false;
  if (a.conjugated == b.conjugated) {
    // Angular integration pairs z^n with conj(z)^n.
    const int deg = std::min(P.degree(), Q.degree());
    for (int n = 0; n <= deg; ++n) {
      const Complex c = a.conjugated ? std::conj(P[n]) * Q[n] : P[n] * std::conj(Q[n]);
      if (c == Complex{}) continue;
      nonzero = true;
      if (e > -1) acc.add(c * radial_moment(n, e));
    }
  } else {
    // Only the constant term of P Q survives the angular integral.
    const Complex c = a.conjugated ? std::conj(P[0] * Q[0]) : P[0] * Q[0];
    if (c != Complex{}) {
      nonzero = true;
      if (e > -1) acc.add(c * radial_moment(0, e));
    }
  }
  if (e <= -1 && nonzero) return {Complex{kInf, 0.0}, true};
  return {acc.value(), false};
}

Estimate<double> lp_norm_series(const Differential& h, double p, const SupGrid& grid) {
  if (!(p >= 1.0)) throw ParameterError("lp_norm_series: p must lie in [1, inf]");
  if (!h.series_form()) throw ParameterError("lp_norm_series: differential has no series form");
  const SeriesForm& sf = *h.series_form();
  const int m = h.bidegree().m();
  const bool zero = sf.series.max_abs_coefficient() == 0.0;
  if (zero) return {0.0, false};

  if (p == 2.0) {
    const Estimate<Complex> sq = series_pairing(sf, sf, m);
    if (sq.diverged()) return {kInf, true};
    return {std::sqrt(std::max(sq.value.real(), 0.0)), false};
  }

  const PowerSeries& P = sf.series;
  if (std::isinf(p)) {
    const int e = sf.weight_power + m;
    if (e < 0) return {kInf, true};
    return {polar_sup(
                [&P, e](Complex z) { return pow_int(1.0 - std::norm(z), e) * std::abs(P(z)); },
                0.0, 1.0, grid),
            false};
  }

  const double e = (sf.weight_power + m) * p - 2.0;
  if (e <= -1.0) return {kInf, true};
  static const QuadratureRule reference = disk_rule(96, 512);
  const double total = integrate_real(reference, [&P, p, e](Complex z) {
    return std::pow(std::abs(P(z)), p) * std::pow(1.0 - std::norm(z), e);
  });
  return {std::pow(total, 1.0 / p), false};
}

Differential beltrami_from_quadratic(const Differential& psi) {
  if (psi.bidegree() != kConjQuadratic)
    throw BidegreeError("beltrami_from_quadratic: expected a (0,2) differential");
  if (const auto& sf = psi.series_form()) {
    SeriesForm out = *sf;
    out.weight_power += 2;
    return {kBeltrami, out};
  }
  const MetricDensity rho = MetricDensity::for_domain(psi.domain());
  const Field f = psi.field();
  return {kBeltrami, psi.domain(), [f, rho](Complex z) {
            const double r = rho(z);
            return f(z) / (r * r);
          }};
}

Differential quadratic_from_beltrami(const Differential& mu) {
  if (mu.bidegree() != kBeltrami)
    throw BidegreeError("quadratic_from_beltrami: expected a (-1,1) differential");
  if (const auto& sf = mu.series_form()) {
    SeriesForm out = *sf;
    out.weight_power -= 2;
    return {kConjQuadratic, out};
  }
  const MetricDensity rho = MetricDensity::for_domain(mu.domain());
  const Field f = mu.field();
  return {kConjQuadratic, mu.domain(), [f, rho](Complex z) {
            const double r = rho(z);
            return f(z) * (r * r);
          }};
}

SchifferDilatation schiffer_dilatation(Complex eps) { return {eps, std::abs(eps) < 1.0}; }

Complex schiffer_map(Complex z, Complex eps) { return z + eps * std::conj(z); }

}  // namespace wpnum
