#include <gtest/gtest.h>

#include <random>

#include "wpnum/series.hpp"

using namespace wpnum;

namespace {

PowerSeries random_series(std::mt19937_64& gen, int degree, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  std::vector<Complex> c(degree + 1);
  for (auto& x : c) x = {g(gen), g(gen)};
  return PowerSeries(c);
}

}  // namespace

TEST(PowerSeries, EvaluationMatchesNaiveSum) {
  std::mt19937_64 gen(1);
  const auto p = random_series(gen, 12);
  const Complex z{0.4, -0.7};
  Complex naive{};
  for (int n = 0; n <= 12; ++n) naive += p[n] * std::pow(z, n);
  EXPECT_LT(std::abs(p(z) - naive), 1e-12);
  EXPECT_EQ(p[13], Complex{});
  EXPECT_EQ(p[-1], Complex{});
}

TEST(PowerSeries, ProductTruncatesToSmallerDegree) {
  const PowerSeries a({1.0, 1.0, 1.0, 1.0});
  const PowerSeries b({1.0, -1.0});
  const auto c = a * b;
  EXPECT_EQ(c.degree(), 1);
  EXPECT_EQ(c[0], Complex{1.0});
  EXPECT_EQ(c[1], Complex{0.0});
  EXPECT_EQ((a + b).degree(), 1);
}

TEST(PowerSeries, ReciprocalOfOneMinusZIsGeometric) {
  const auto r = PowerSeries({1.0, -1.0, 0.0, 0.0, 0.0, 0.0}).reciprocal();
  for (int n = 0; n <= 5; ++n) EXPECT_NEAR(std::abs(r[n] - 1.0), 0.0, 1e-15);
  EXPECT_THROW(PowerSeries({0.0, 1.0}).reciprocal(), DomainError);
}

TEST(PowerSeries, ReciprocalTimesSelfIsOne) {
  std::mt19937_64 gen(2);
  auto p = random_series(gen, 15);
  p.coeff(0) = 2.0;
  const auto q = p * p.reciprocal();
  EXPECT_LT(std::abs(q[0] - 1.0), 1e-14);
  for (int n = 1; n <= 15; ++n) EXPECT_LT(std::abs(q[n]), 1e-9) << n;
}

TEST(PowerSeries, ExpMatchesTaylor) {
  const auto e = (PowerSeries::identity(10) * Complex{0.0, 2.0}).exp();
  double fact = 1.0;
  for (int n = 0; n <= 10; ++n) {
    if (n > 0) fact *= n;
    EXPECT_LT(std::abs(e[n] - std::pow(Complex{0, 2}, n) / fact), 1e-14);
  }
}

TEST(PowerSeries, ExpOfLogDerivativeRoundTrip) {
  std::mt19937_64 gen(4);
  const auto a = random_series(gen, 10, 0.3);
  const auto e = a.exp();
  // (exp a)' = a' exp a
  const auto lhs = e.derivative();
  const auto rhs = a.derivative() * e.truncated(9);
  for (int n = 0; n <= 9; ++n) EXPECT_LT(std::abs(lhs[n] - rhs[n]), 1e-12);
}

TEST(PowerSeries, DerivativeIntegralInverse) {
  std::mt19937_64 gen(6);
  const auto p = random_series(gen, 8);
  const auto q = p.integral(p[0]).derivative();
  EXPECT_EQ(q.degree(), 8);
  for (int n = 0; n <= 8; ++n) EXPECT_LT(std::abs(q[n] - p[n]), 1e-14);
  const auto r = p.derivative().integral(p[0]);
  for (int n = 0; n <= 8; ++n) EXPECT_LT(std::abs(r[n] - p[n]), 1e-14);
}

TEST(PowerSeries, ComposeAgreesPointwise) {
  std::mt19937_64 gen(8);
  const auto outer = random_series(gen, 6);
  auto inner = random_series(gen, 6, 0.2);
  inner.coeff(0) = 0.0;
  // degree-6 composition is exact through z^6; compare with a polynomial
  // evaluated at small z where the neglected tail is tiny.
  const auto c = outer.compose(inner);
  const Complex z{1e-2, 5e-3};
  EXPECT_LT(std::abs(c(z) - outer(inner(z))), 1e-11);
  EXPECT_THROW(outer.compose(PowerSeries({1.0, 1.0})), ParameterError);
}

TEST(PowerSeries, ConjugateAndScaling) {
  const PowerSeries p({Complex{1, 2}, Complex{0, -1}});
  const auto c = p.conj_coefficients();
  EXPECT_EQ(c[0], Complex(1, -2));
  EXPECT_EQ((-p)[1], Complex(0, 1));
  EXPECT_EQ((Complex{2.0} * p)[0], Complex(2, 4));
  EXPECT_DOUBLE_EQ(p.max_abs_coefficient(), std::sqrt(5.0));
}

TEST(PowerSeries, Errors) {
  EXPECT_THROW(PowerSeries(std::vector<Complex>{}), ParameterError);
  EXPECT_THROW(PowerSeries::zero(-1), ParameterError);
  EXPECT_THROW(PowerSeries({1.0}).truncated(-1), ParameterError);
}

TEST(LaurentSeries, EvaluationMatchesNaiveSum) {
  std::mt19937_64 gen(10);
  std::normal_distribution<double> g;
  for (const auto [lo, hi] : {std::pair{-5, 5}, std::pair{-7, -2}, std::pair{2, 6}, std::pair{0, 0}}) {
    std::vector<Complex> c(hi - lo + 1);
    for (auto& x : c) x = {g(gen), g(gen)};
    const LaurentSeries s(lo, c, 1.0, 3.0);
    const Complex z{1.3, 0.8};
    Complex naive{};
    for (int n = lo; n <= hi; ++n) naive += s[n] * std::pow(z, n);
    EXPECT_LT(std::abs(s(z) - naive), 1e-12 * std::max(1.0, std::abs(naive))) << lo << "," << hi;
  }
}

TEST(LaurentSeries, IndexingAndScaling) {
  const LaurentSeries s(-2, {3.0, 0.0, 1.0});
  EXPECT_EQ(s.n_min(), -2);
  EXPECT_EQ(s.n_max(), 0);
  EXPECT_EQ(s[-2], Complex{3.0});
  EXPECT_EQ(s[5], Complex{});
  EXPECT_EQ(s.scaled(2.0)[-2], Complex{6.0});
  EXPECT_THROW(s(0.0), DomainError);
  EXPECT_THROW(LaurentSeries(0, {1.0}, 2.0, 1.0), ParameterError);
}
