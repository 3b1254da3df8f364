#include "wpnum/series.hpp"

#include <algorithm>
#include <cmath>

namespace wpnum {

PowerSeries::PowerSeries(std::vector<Complex> coeffs, double radius)
    : coeffs_(std::move(coeffs)), radius_(radius) {
  if (coeffs_.empty()) throw ParameterError("PowerSeries needs at least one coefficient");
}

PowerSeries PowerSeries::zero(int degree) {
  if (degree < 0) throw ParameterError("PowerSeries degree must be >= 0");
  return PowerSeries(std::vector<Complex>(static_cast<std::size_t>(degree) + 1));
}

PowerSeries PowerSeries::constant(Complex c, int degree) {
  PowerSeries s = zero(degree);
  s.coeffs_[0] = c;
  return s;
}

PowerSeries PowerSeries::monomial(int n, int degree, Complex c) {
  PowerSeries s = zero(degree);
  if (n >= 0 && n <= degree) s.coeffs_[static_cast<std::size_t>(n)] = c;
  return s;
}

Complex PowerSeries::operator()(Complex z) const noexcept {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

PowerSeries PowerSeries::truncated(int degree) const {
  if (degree < 0) throw ParameterError("truncation degree must be >= 0");
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  const int keep = std::min(degree, this->degree());
  std::copy_n(coeffs_.begin(), keep + 1, c.begin());
  return PowerSeries(std::move(c), radius_);
}

PowerSeries PowerSeries::derivative() const {
  if (degree() == 0) return PowerSeries(std::vector<Complex>{0.0}, radius_);
  std::vector<Complex> c(coeffs_.size() - 1);
  for (std::size_t n = 1; n < coeffs_.size(); ++n) c[n - 1] = static_cast<double>(n) * coeffs_[n];
  return PowerSeries(std::move(c), radius_);
}

PowerSeries PowerSeries::integral(Complex c0) const {
  std::vector<Complex> c(coeffs_.size() + 1);
  c[0] = c0;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) c[n + 1] = coeffs_[n] / static_cast<double>(n + 1);
  return PowerSeries(std::move(c), radius_);
}

PowerSeries PowerSeries::reciprocal() const {
  if (coeffs_[0] == Complex{}) throw DomainError("reciprocal: constant term is zero");
  const std::size_t n = coeffs_.size();
  std::vector<Complex> r(n);
  r[0] = 1.0 / coeffs_[0];
  for (std::size_t k = 1; k < n; ++k) {
    Complex acc{};
    for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * r[k - j];
    r[k] = -acc * r[0];
  }
  return PowerSeries(std::move(r), radius_);
}

PowerSeries PowerSeries::exp() const {
  // g = exp(f) satisfies g' = f' g: n g_n = sum_{k=1}^{n} k f_k g_{n-k}.
  const std::size_t n = coeffs_.size();
  std::vector<Complex> g(n);
  g[0] = std::exp(coeffs_[0]);
  for (std::size_t m = 1; m < n; ++m) {
    Complex acc{};
    for (std::size_t k = 1; k <= m; ++k) acc += static_cast<double>(k) * coeffs_[k] * g[m - k];
    g[m] = acc / static_cast<double>(m);
  }
  return PowerSeries(std::move(g), radius_);
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
  if (inner[0] != Complex{}) throw ParameterError("compose: inner series must vanish at 0");
  const int deg = std::min(degree(), inner.degree());
  // Horner in the series ring.
  PowerSeries acc = constant(coeffs_[static_cast<std::size_t>(degree())], deg);
  const PowerSeries in = inner.truncated(deg);
  for (int n = degree() - 1; n >= 0; --n) {
    acc = acc * in;
    acc.coeffs_[0] += coeffs_[static_cast<std::size_t>(n)];
  }
  acc.radius_ = std::min(radius_, inner.radius_);
  return acc;
}

PowerSeries PowerSeries::conj_coefficients() const {
  PowerSeries s = *this;
  for (auto& c : s.coeffs_) c = std::conj(c);
  return s;
}

double PowerSeries::max_abs_coefficient() const noexcept {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
  const int deg = std::min(degree(), rhs.degree());
  coeffs_.resize(static_cast<std::size_t>(deg) + 1);
  for (int n = 0; n <= deg; ++n) coeffs_[static_cast<std::size_t>(n)] += rhs[n];
  radius_ = std::min(radius_, rhs.radius_);
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
  const int deg = std::min(degree(), rhs.degree());
  coeffs_.resize(static_cast<std::size_t>(deg) + 1);
  for (int n = 0; n <= deg; ++n) coeffs_[static_cast<std::size_t>(n)] -= rhs[n];
  radius_ = std::min(radius_, rhs.radius_);
  return *this;
}

PowerSeries& PowerSeries::operator*=(Complex s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int deg = std::min(a.degree(), b.degree());
  std::vector<Complex> c(static_cast<std::size_t>(deg) + 1);
  for (int i = 0; i <= deg; ++i) {
    const Complex ai = a[i];
    if (ai == Complex{}) continue;
    for (int j = 0; i + j <= deg; ++j) c[static_cast<std::size_t>(i + j)] += ai * b[j];
  }
  return PowerSeries(std::move(c), std::min(a.radius(), b.radius()));
}

LaurentSeries::LaurentSeries(int n_min, std::vector<Complex> coeffs, double inner,
                             double outer)
    : n_min_(n_min), coeffs_(std::move(coeffs)), inner_(inner), outer_(outer) {
  if (coeffs_.empty()) throw ParameterError("LaurentSeries needs at least one coefficient");
  if (!(outer_ > inner_) || inner_ < 0.0) throw ParameterError("LaurentSeries: bad annulus");
}

Complex LaurentSeries::operator()(Complex z) const {
  if (z == Complex{} && n_min_ < 0) throw DomainError("LaurentSeries: evaluation at 0");
  // Non-negative part by Horner in z.
  Complex pos{};
  for (int n = n_max(); n >= 0; --n) pos = pos * z + (*this)[n];
  // Negative part by Horner in w = 1/z: (((a_{n_min} w + ...) + a_{-1}) w.
  Complex neg{};
  if (n_min_ < 0) {
    const Complex w = 1.0 / z;
    for (int n = n_min_; n <= -1; ++n) neg = (neg + (*this)[n]) * w;
  }
  return pos + neg;
}

LaurentSeries LaurentSeries::scaled(double s) const {
  LaurentSeries out = *this;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

}  // namespace wpnum
