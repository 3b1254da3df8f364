#include "wpnum/project.hpp"

#include <algorithm>
#include <cmath>

namespace wpnum {

namespace {

void require_disk_rule(const QuadratureRule& rule) {
  const auto* d = std::get_if<DiskRegion>(&rule.region());
  if (!d || d->radius > 1.0) throw ParameterError("projection: expected a disk quadrature rule");
}

double sup_abs(std::span<const Complex> samples) {
  double s = 0.0;
  for (const Complex v : samples) s = std::max(s, std::abs(v));
  return s;
}

TrivialityResult check_moments(const MomentVector& m, double tol_eff) {
  TrivialityResult out;
  out.tolerance = tol_eff;
  out.residuals.reserve(m.values().size());
  double worst = 0.0;
  for (const Complex v : m.values()) {
    out.residuals.push_back(std::abs(v));
    worst = std::max(worst, std::abs(v));
  }
  out.trivial = worst <= tol_eff;
  return out;
}

}  // namespace

double MomentVector::max_abs() const noexcept {
  double s = 0.0;
  for (const Complex v : m_) s = std::max(s, std::abs(v));
  return s;
}

MomentVector moments(const QuadratureRule& rule, std::span<const Complex> samples, int N) {
  require_disk_rule(rule);
  if (N < 0) throw ParameterError("moments: truncation must be >= 0");
  if (samples.size() != rule.size()) throw ParameterError("moments: sample count mismatch");
  std::vector<ComplexCompensatedSum> acc(static_cast<std::size_t>(N) + 1);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const Complex v = samples[i];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NumericError("moments: non-finite sample at node " + std::to_string(i));
    const Complex zeta = rule.nodes()[i];
    Complex term = rule.weights()[i] * v;
    for (int n = 0; n <= N; ++n) {
      acc[static_cast<std::size_t>(n)].add(term);
      term *= zeta;
    }
  }
  std::vector<Complex> m;
  m.reserve(acc.size());
  for (const auto& a : acc) m.push_back(a.value());
  return MomentVector(std::move(m));
}

MomentVector moments(const QuadratureRule& rule, const Field& nu, int N) {
  const std::vector<Complex> s = sample(rule, nu);
  return moments(rule, s, N);
}

double bergman_kernel_coefficient(int n) {
  const double a = n + 1.0;
  return 3.0 / pi * (a * (a + 1.0) * (a + 2.0) / 6.0);
}

Complex k_project_direct(const QuadratureRule& rule, std::span<const Complex> samples, Complex z) {
  require_disk_rule(rule);
  const double s = std::norm(z);
  if (!(s < 1.0)) throw DomainError("k_project_direct: need |z| < 1");
  if (samples.size() != rule.size()) throw ParameterError("k_project_direct: sample count mismatch");
  ComplexCompensatedSum acc;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const Complex q = 1.0 - std::conj(rule.nodes()[i]) * z;
    const Complex q2 = q * q;
    acc.add(rule.weights()[i] * std::conj(samples[i]) / (q2 * q2));
  }
  return 3.0 / pi * (1.0 - s) * (1.0 - s) * acc.value();
}

Complex k_project_direct(const QuadratureRule& rule, const Field& nu, Complex z) {
  const std::vector<Complex> s = sample(rule, nu);
  return k_project_direct(rule, s, z);
}

PowerSeries k_project_series(const MomentVector& m) {
  std::vector<Complex> g(m.values().size());
  for (int n = 0; n <= m.truncation(); ++n)
    g[static_cast<std::size_t>(n)] = bergman_kernel_coefficient(n) * std::conj(m[n]);
  return PowerSeries(std::move(g));
}

PowerSeries k_project_series(const QuadratureRule& rule, const Field& nu, int N) {
  return k_project_series(moments(rule, nu, N));
}

HarmonicBeltrami p_project(const MomentVector& m) { return HarmonicBeltrami(k_project_series(m)); }

HarmonicBeltrami p_project(const QuadratureRule& rule, std::span<const Complex> samples, int N) {
  return p_project(moments(rule, samples, N));
}

HarmonicBeltrami p_project(const QuadratureRule& rule, const Field& nu, int N) {
  return p_project(moments(rule, nu, N));
}

TrivialityResult is_infinitesimally_trivial(const QuadratureRule& rule,
                                            std::span<const Complex> samples, int N, double tol) {
  if (!(tol >= 0.0)) throw ParameterError("is_infinitesimally_trivial: tol must be >= 0");
  return check_moments(moments(rule, samples, N), tol * sup_abs(samples));
}

TrivialityResult is_infinitesimally_trivial(const QuadratureRule& rule, const Field& nu, int N,
                                            double tol) {
  const std::vector<Complex> s = sample(rule, nu);
  return is_infinitesimally_trivial(rule, s, N, tol);
}

Decomposition decompose(const Field& mu, int N, const QuadratureRule& rule, double tol) {
  if (!(tol >= 0.0)) throw ParameterError("decompose: tol must be >= 0");
  const std::vector<Complex> values = sample(rule, mu);
  const double sup = sup_abs(values);
  if (!(sup < 1.0))
    throw NotBeltramiError("decompose: sup |mu| = " + std::to_string(sup) + " >= 1 on the grid");

  Decomposition out;
  out.harmonic = p_project(rule, values, N);
  const HarmonicBeltrami h = out.harmonic;
  out.trivial_part = [mu, h](Complex z) { return mu(z) - h(z); };

  std::vector<Complex> rest(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) rest[i] = values[i] - h(rule.nodes()[i]);
  out.residual = check_moments(moments(rule, rest, N), tol * sup);
  return out;
}

}  // namespace wpnum
