#include "wpnum/wp.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace wpnum {

namespace {

void require_bidegree(const Differential& d, Bidegree want, const char* who) {
  if (d.bidegree() != want) throw BidegreeError(std::string(who) + ": unexpected bidegree");
}

void require_series(const Differential& d, const char* who) {
  if (!d.series_form() || d.domain() != DomainTag::disk)
    throw ParameterError(std::string(who) + ": closed form needs series-backed disk differentials");
}

Complex plain_pairing(const Differential& a, const Differential& b, const QuadratureRule& rule,
                      double weight_exp) {
  const MetricDensity rho = MetricDensity::for_domain(a.domain());
  return integrate(rule, [&](Complex z) {
    return a(z) * std::conj(b(z)) * std::pow(rho(z), weight_exp);
  });
}

// sum w f(z) over the rule with a divergence probe on the modulus integrand,
// which dominates the pairing by Cauchy-Schwarz.
Estimate<Complex> guarded_pairing(const Differential& a, const Differential& b,
                                  const QuadratureRule& rule, double weight_exp) {
  const Differential ma(a.bidegree(), a.domain(), a.field());
  const Differential mb(b.bidegree(), b.domain(), b.field());
  const auto na = lp_norm(ma, 2.0, rule);
  const auto nb = lp_norm(mb, 2.0, rule);
  if (na.diverged() || nb.diverged()) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {Complex{inf, 0.0}, true};
  }
  return {plain_pairing(a, b, rule, weight_exp), false};
}

}  // namespace

Complex wp_inner(const HarmonicBeltrami& mu, const HarmonicBeltrami& nu) {
  ComplexCompensatedSum acc;
  const int deg = std::min(mu.degree(), nu.degree());
  for (int n = 0; n <= deg; ++n)
    acc.add(std::conj(mu.phi()[n]) * nu.phi()[n] * harmonic_weight(n));
  return acc.value();
}

Estimate<Complex> wp_inner(const Differential& mu, const Differential& nu) {
  require_bidegree(mu, kBeltrami, "wp_inner");
  require_bidegree(nu, kBeltrami, "wp_inner");
  require_series(mu, "wp_inner");
  require_series(nu, "wp_inner");
  return series_pairing(*mu.series_form(), *nu.series_form(), kBeltrami.m());
}

Estimate<Complex> wp_inner(const Differential& mu, const Differential& nu,
                           const QuadratureRule& rule) {
  require_bidegree(mu, kBeltrami, "wp_inner");
  require_bidegree(nu, kBeltrami, "wp_inner");
  if (mu.domain() != nu.domain()) throw ParameterError("wp_inner: domains differ");
  return guarded_pairing(mu, nu, rule, 2.0);
}

Estimate<Complex> wp_inner_quadratic(const Differential& a, const Differential& b) {
  require_bidegree(a, kConjQuadratic, "wp_inner_quadratic");
  require_bidegree(b, kConjQuadratic, "wp_inner_quadratic");
  require_series(a, "wp_inner_quadratic");
  require_series(b, "wp_inner_quadratic");
  return series_pairing(*a.series_form(), *b.series_form(), kConjQuadratic.m());
}

Estimate<Complex> wp_inner_quadratic(const Differential& a, const Differential& b,
                                     const QuadratureRule& rule) {
  require_bidegree(a, kConjQuadratic, "wp_inner_quadratic");
  require_bidegree(b, kConjQuadratic, "wp_inner_quadratic");
  if (a.domain() != b.domain()) throw ParameterError("wp_inner_quadratic: domains differ");
  return guarded_pairing(a, b, rule, -2.0);
}

GramMatrix::GramMatrix(int size, std::string basis)
    : n_(size), basis_(std::move(basis)), data_(static_cast<std::size_t>(size) * size) {
  if (size < 1) throw ParameterError("GramMatrix: size must be >= 1");
}

std::size_t GramMatrix::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw ParameterError("GramMatrix: index out of range");
  return static_cast<std::size_t>(i) * n_ + j;
}

double GramMatrix::hermitian_defect() const {
  double d = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

double GramMatrix::max_off_diagonal() const {
  double d = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j) d = std::max(d, std::abs((*this)(i, j)));
  return d;
}

double GramMatrix::min_eigenvalue() const {
  Eigen::MatrixXcd g(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      g(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(g, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("GramMatrix: eigen solver failed");
  return solver.eigenvalues().minCoeff();
}

GramMatrix wp_gram(int N) {
  if (N < 0) throw ParameterError("wp_gram: N must be >= 0");
  GramMatrix g(N + 1, "harmonic monomials (1-|z|^2)^2 conj(z^n)");
  for (int i = 0; i <= N; ++i) {
    const HarmonicBeltrami mi(PowerSeries::monomial(i, N));
    for (int j = 0; j <= N; ++j) g.at(i, j) = wp_inner(mi, HarmonicBeltrami(PowerSeries::monomial(j, N)));
  }
  return g;
}

GramMatrix wp_gram(int N, const QuadratureRule& rule) {
  if (N < 0) throw ParameterError("wp_gram: N must be >= 0");
  GramMatrix g(N + 1, "harmonic monomials (1-|z|^2)^2 conj(z^n)");
  std::vector<Differential> basis;
  basis.reserve(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    const HarmonicBeltrami h(PowerSeries::monomial(n, N));
    basis.emplace_back(kBeltrami, DomainTag::disk, [h](Complex z) { return h(z); });
  }
  for (const auto& b : basis)
    if (lp_norm(b, 2.0, rule).diverged()) throw NumericError("wp_gram: divergent basis element");
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j)
      g.at(i, j) = plain_pairing(basis[static_cast<std::size_t>(i)],
                                 basis[static_cast<std::size_t>(j)], rule, 2.0);
  return g;
}

}  // namespace wpnum
