#pragma once

// Truncated Taylor and Laurent series with complex coefficients.
//
// A PowerSeries of degree N carries c_0..c_N and is exact through z^N.
// Binary operations truncate to the smaller degree of their operands, so the
// result is never claimed valid beyond what both inputs support.

#include <limits>
#include <span>
#include <vector>

#include "wpnum/types.hpp"

namespace wpnum {

class PowerSeries {
 public:
  PowerSeries() : coeffs_(1) {}
  explicit PowerSeries(std::vector<Complex> coeffs,
                       double radius = std::numeric_limits<double>::infinity());

  static PowerSeries zero(int degree);
  static PowerSeries constant(Complex c, int degree);
  /// c z^n truncated at `degree`.
  static PowerSeries monomial(int n, int degree, Complex c = 1.0);
  /// z truncated at `degree`.
  static PowerSeries identity(int degree) { return monomial(1, degree); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  double radius() const noexcept { return radius_; }
  void set_radius(double r) noexcept { radius_ = r; }

  Complex operator[](int n) const noexcept {
    return n >= 0 && n <= degree() ? coeffs_[static_cast<std::size_t>(n)] : Complex{};
  }
  Complex& coeff(int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  std::span<const Complex> coefficients() const noexcept { return coeffs_; }

  /// Horner evaluation of the truncated polynomial.
  Complex operator()(Complex z) const noexcept;

  PowerSeries truncated(int degree) const;
  /// Degree drops by one.
  PowerSeries derivative() const;
  /// Antiderivative with constant term c0; degree rises by one.
  PowerSeries integral(Complex c0 = 0.0) const;
  /// 1 / f; requires f[0] != 0.
  PowerSeries reciprocal() const;
  /// exp(f) through the same degree.
  PowerSeries exp() const;
  /// (*this)(inner(z)); requires inner[0] == 0.
  PowerSeries compose(const PowerSeries& inner) const;
  PowerSeries conj_coefficients() const;

  double max_abs_coefficient() const noexcept;

  PowerSeries& operator+=(const PowerSeries& rhs);
  PowerSeries& operator-=(const PowerSeries& rhs);
  PowerSeries& operator*=(Complex s);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, Complex s) { return a *= s; }
  friend PowerSeries operator*(Complex s, PowerSeries a) { return a *= s; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
    return a * b.reciprocal();
  }
  PowerSeries operator-() const { return *this * Complex{-1.0}; }

 private:
  std::vector<Complex> coeffs_;
  double radius_ = std::numeric_limits<double>::infinity();
};

/// sum_{n = n_min}^{n_max} a_n z^n, valid on an annulus inner < |z| < outer.
class LaurentSeries {
 public:
  LaurentSeries() : coeffs_(1) {}
  LaurentSeries(int n_min, std::vector<Complex> coeffs, double inner = 1.0,
                double outer = std::numeric_limits<double>::infinity());

  int n_min() const noexcept { return n_min_; }
  int n_max() const noexcept { return n_min_ + static_cast<int>(coeffs_.size()) - 1; }
  double inner() const noexcept { return inner_; }
  double outer() const noexcept { return outer_; }

  Complex operator[](int n) const noexcept {
    return n >= n_min() && n <= n_max() ? coeffs_[static_cast<std::size_t>(n - n_min_)]
                                        : Complex{};
  }
  std::span<const Complex> coefficients() const noexcept { return coeffs_; }

  Complex operator()(Complex z) const;

  LaurentSeries scaled(double s) const;

 private:
  int n_min_ = 0;
  std::vector<Complex> coeffs_;
  double inner_ = 1.0;
  double outer_ = std::numeric_limits<double>::infinity();
};

}  // namespace wpnum
