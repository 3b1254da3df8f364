#include "wpnum/annulus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace wpnum {

namespace {

// 1/2 integral_1^R rho^n (1 - rho)^2 d rho, signed (negative when R < 1).
double half_moment(int n, double R) {
  const double h = R - 1.0;
  if (h == 0.0) return 0.0;
  if (std::abs(h) < 0.05) {
    // Expand (1 + x)^n around x = 0: 1/2 sum_j binom(n, j) h^{j+3} / (j + 3).
    double sum = 0.0;
    double binom = 1.0;
    double hp = h * h * h;
    for (int j = 0; j < 400; ++j) {
      const double term = binom * hp / (j + 3.0);
      sum += term;
      if (std::abs(term) <= 1e-18 * std::abs(sum) && j > 2) break;
      binom *= static_cast<double>(n - j) / (j + 1.0);
      hp *= h;
      if (binom == 0.0) break;
    }
    return 0.5 * sum;
  }
  const double logR = std::log(R);
  // integral_1^R rho^k d rho, with the k = -1 branch giving log R.
  auto F = [logR](int k) {
    if (k == -1) return logR;
    return std::expm1((k + 1) * logR) / (k + 1);
  };
  return 0.5 * (F(n) - 2.0 * F(n + 1) + F(n + 2));
}

}  // namespace

LaurentFit laurent_coeffs(const Field& f, int n_min, int n_max, double inner, double outer,
                          int circles, int n_angular) {
  if (n_max < n_min) throw ParameterError("laurent_coeffs: empty index window");
  if (circles < 2) throw ParameterError("laurent_coeffs: need at least 2 sampling circles");
  if (!(outer > inner) || inner < 0.0 || !std::isfinite(outer))
    throw ParameterError("laurent_coeffs: need 0 <= inner < outer < inf");
  const int reach = std::max(std::abs(n_min), std::abs(n_max));
  if (n_angular == 0) n_angular = std::max(16, 2 * reach + 2);
  if (n_angular <= 2 * reach)
    throw ParameterError("laurent_coeffs: angular sample count must exceed 2 max|n|");

  const int count = n_max - n_min + 1;
  std::vector<double> radii(static_cast<std::size_t>(circles));
  for (int j = 0; j < circles; ++j) radii[j] = inner + (outer - inner) * (j + 1.0) / (circles + 1.0);

  std::vector<Complex> samples(static_cast<std::size_t>(circles) * n_angular);
  std::vector<Complex> points(samples.size());
  const double dt = 2.0 * pi / n_angular;
  for (int j = 0; j < circles; ++j) {
    for (int q = 0; q < n_angular; ++q) {
      const Complex z = std::polar(radii[j], dt * q);
      const std::size_t idx = static_cast<std::size_t>(j) * n_angular + q;
      points[idx] = z;
      samples[idx] = f(z);
      if (!std::isfinite(samples[idx].real()) || !std::isfinite(samples[idx].imag()))
        throw NumericError("laurent_coeffs: non-finite sample");
    }
  }

  // Per-circle DFT gives a_k rho^k; weighted least squares over the radii.
  std::vector<Complex> coeffs(static_cast<std::size_t>(count));
  for (int k = n_min; k <= n_max; ++k) {
    Complex num{};
    double den = 0.0;
    for (int j = 0; j < circles; ++j) {
      ComplexCompensatedSum dft;
      for (int q = 0; q < n_angular; ++q)
        dft.add(samples[static_cast<std::size_t>(j) * n_angular + q] *
                std::polar(1.0, -dt * static_cast<double>(k) * q));
      const Complex ck = dft.value() / static_cast<double>(n_angular);
      const double rk = std::pow(radii[j], k);
      num += ck * rk;
      den += rk * rk;
    }
    coeffs[static_cast<std::size_t>(k - n_min)] = num / den;
  }

  LaurentFit fit{LaurentSeries(n_min, std::move(coeffs), inner, outer), 0.0};
  double fmax = 0.0;
  double err = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    fmax = std::max(fmax, std::abs(samples[i]));
    err = std::max(err, std::abs(samples[i] - fit.series(points[i])));
  }
  fit.residual = fmax > 0.0 ? err / fmax : err;
  return fit;
}

double moment_I(int n, double r) {
  if (!(r >= 1.0) || !std::isfinite(r)) throw ParameterError("moment_I: r must be >= 1");
  return half_moment(n, r * r);
}

double moment_I_inner(int n, double r) {
  if (!(r > 0.0 && r <= 1.0)) throw ParameterError("moment_I_inner: r must lie in (0, 1]");
  return -half_moment(n, r * r);
}

double weighted_norm_series(const LaurentSeries& s, double r, Side side) {
  CompensatedSum acc;
  for (int n = s.n_min(); n <= s.n_max(); ++n) {
    const double a2 = std::norm(s[n]);
    if (a2 == 0.0) continue;
    acc.add(a2 * (side == Side::outer ? moment_I(n, r) : moment_I_inner(n, r)));
  }
  return std::sqrt(2.0 * pi * std::max(acc.value(), 0.0));
}

double wulf_pointwise_factor(double r, double s) {
  if (!(r > 1.0) || !(s > 1.0 && s < r))
    throw ParameterError("wulf_pointwise_factor: need 1 < |z| < r");
  const double r2 = r * r;
  const double s2 = s * s;
  const double a = 1.0 - s2;
  return 4.0 / std::sqrt(2.0 * pi) * std::sqrt(r2 + s2) / (r2 - s2) * a * a / (s2 + r2 + 2.0) +
         4.0 * std::sqrt(3.0) / std::sqrt(pi) * s;
}

double wulf_constant(double r, double t) {
  if (!(r > 1.0) || !(t > 1.0 && t < r)) throw ParameterError("wulf_constant: need 1 < t < r");
  const double r2 = r * r;
  const double t2 = t * t;
  const double a = 1.0 - t2;
  return 4.0 / std::sqrt(2.0 * pi) * std::sqrt(r2 + t2) / (r2 - t2) * a * a / (r2 + 3.0) +
         4.0 * std::sqrt(3.0) / std::sqrt(pi) * t;
}

double sup_weighted(const Field& f, double t, const SupGrid& grid, Side side) {
  double lo, hi;
  if (side == Side::outer) {
    if (!(t > 1.0) || !std::isfinite(t)) throw ParameterError("sup_weighted: need t > 1");
    lo = 1.0 + (t - 1.0) / (2.0 * grid.n_radial);
    hi = t;
  } else {
    if (!(t > 0.0 && t < 1.0)) throw ParameterError("sup_weighted: need 0 < t < 1 on the inner side");
    lo = t;
    hi = 1.0 - (1.0 - t) / (2.0 * grid.n_radial);
  }
  return polar_sup(
      [&f](Complex z) {
        const double w = 1.0 - std::norm(z);
        return w * w * std::abs(f(z));
      },
      lo, hi, grid);
}

}  // namespace wpnum
