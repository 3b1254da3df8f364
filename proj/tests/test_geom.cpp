#include <gtest/gtest.h>

#include <random>

#include "wpnum/geom.hpp"

using namespace wpnum;

TEST(Densities, DiskValues) {
  EXPECT_DOUBLE_EQ(lambda_disk(0.0), 1.0);
  EXPECT_NEAR(lambda_disk(0.5), 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(lambda_disk(0.9), 1.0 / 0.19, 1e-13);
  EXPECT_THROW(lambda_disk(1.0), DomainError);
  EXPECT_THROW(lambda_disk(Complex{0.0, -2.0}), DomainError);
}

TEST(Densities, HalfPlaneValues) {
  EXPECT_DOUBLE_EQ(lambda_halfplane(Complex{0, 1}), 1.0);
  EXPECT_DOUBLE_EQ(lambda_halfplane(Complex{3, 2}), 0.5);
  EXPECT_NEAR(lambda_halfplane(Complex{0, 0.1}), 10.0, 1e-14);
  EXPECT_THROW(lambda_halfplane(Complex{1, 0}), DomainError);
  EXPECT_THROW(lambda_halfplane(Complex{1, -1}), DomainError);
}

TEST(Densities, ExteriorIsReflectedDisk) {
  EXPECT_NEAR(lambda_exterior(2.0), 1.0 / 3.0, 1e-15);
  EXPECT_THROW(lambda_exterior(0.5), DomainError);
}

TEST(Cayley, ValuesAndRoundTrip) {
  EXPECT_EQ(cayley(0.0), Complex(0, 1));
  EXPECT_LT(std::abs(cayley(-1.0)), 1e-16);
  const Complex z{0.3, 0.2};
  EXPECT_LT(std::abs(cayley_inv(cayley(z)) - z), 1e-14);
  EXPECT_THROW(cayley(1.0), DomainError);
  // derivative against a centered difference
  const double h = 1e-6;
  const Complex fd = (cayley(z + h) - cayley(z - h)) / (2 * h);
  EXPECT_LT(std::abs(fd - cayley_derivative(z)), 1e-8);
  const Complex w = cayley(z);
  const Complex fdi = (cayley_inv(w + h) - cayley_inv(w - h)) / (2 * h);
  EXPECT_LT(std::abs(fdi - cayley_inv_derivative(w)), 1e-8);
}

TEST(Pullback, IdentityAndRotation) {
  const auto rho = MetricDensity::disk();
  const auto id = pullback_metric(HolomorphicMap::identity(), rho);
  const auto rot = pullback_metric(MoebiusMap::rotation(1.1).as_map(), rho);
  for (const Complex z : {Complex{0, 0}, Complex{0.3, -0.4}, Complex{-0.9, 0.1}}) {
    EXPECT_DOUBLE_EQ(id(z), lambda_disk(z));
    EXPECT_NEAR(rot(z), lambda_disk(z), 1e-12 * lambda_disk(z));
  }
}

TEST(Pullback, CayleyFactorTwo) {
  const auto pb = pullback_metric(cayley_map(), MetricDensity::half_plane());
  EXPECT_NEAR(pb(0.0), 2.0, 1e-15);
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-1, 1);
  int n = 0;
  while (n < 100) {
    const Complex z{u(gen), u(gen)};
    if (std::abs(z) >= 0.99) continue;
    ++n;
    EXPECT_NEAR(pb(z) / (2 * lambda_disk(z)), 1.0, 1e-12);
  }
}

TEST(Pullback, DiskAutomorphismInvariance) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int k = 0; k < 20; ++k) {
    const auto m = MoebiusMap::disk_automorphism(u(gen) * 4, Complex{u(gen), u(gen)});
    const auto pb = pullback_metric(m.as_map(), MetricDensity::disk());
    for (int j = 0; j < 10; ++j) {
      const Complex z{u(gen), u(gen)};
      EXPECT_NEAR(pb(z) / lambda_disk(z), 1.0, 1e-12);
    }
  }
}

TEST(Pullback, ChainRule) {
  const auto g = MoebiusMap::disk_automorphism(0.4, Complex{0.2, 0.1}).as_map();
  const HolomorphicMap h{[](Complex z) { return 0.5 * z * z + 0.3 * z; },
                         [](Complex z) { return z + 0.3; }};
  const auto rho = MetricDensity::disk();
  const auto direct = pullback_metric(compose(g, h), rho);
  const auto nested = pullback_metric(h, pullback_metric(g, rho));
  for (const Complex z : {Complex{0.1, 0.2}, Complex{-0.5, 0.3}, Complex{0.6, -0.6}})
    EXPECT_NEAR(direct(z), nested(z), 1e-13 * direct(z));
}

TEST(Pullback, OutsideDomainThrowsAtEvaluation) {
  const HolomorphicMap dbl{[](Complex z) { return 3.0 * z; }, [](Complex) { return Complex{3.0}; }};
  const auto pb = pullback_metric(dbl, MetricDensity::disk());
  EXPECT_NO_THROW(pb(0.1));
  EXPECT_THROW(pb(0.5), DomainError);
}

TEST(Moebius, CompositionAndInverse) {
  const MoebiusMap m{Complex{1, 2}, Complex{0.5, 0}, Complex{0, 1}, Complex{3, -1}};
  const MoebiusMap n = MoebiusMap::disk_automorphism(0.7, Complex{0.3, -0.2});
  const Complex z{0.25, 0.1};
  EXPECT_LT(std::abs(m.compose(n)(z) - m(n(z))), 1e-14);
  EXPECT_LT(std::abs(m.inverse()(m(z)) - z), 1e-14);
  EXPECT_NE(m.compose(n).determinant(), Complex{});
  const double h = 1e-6;
  EXPECT_LT(std::abs((m(z + h) - m(z - h)) / (2 * h) - m.derivative(z)), 1e-8);
  EXPECT_THROW((MoebiusMap{1.0, 2.0, 2.0, 4.0}), ParameterError);
  EXPECT_THROW(MoebiusMap::disk_automorphism(0.0, 1.0), ParameterError);
}

TEST(Moebius, AutomorphismPreservesDisk) {
  const auto m = MoebiusMap::disk_automorphism(2.0, Complex{0.5, 0.5});
  for (int k = 0; k < 16; ++k) {
    const Complex z = std::polar(1.0, 2 * pi * k / 16);
    EXPECT_NEAR(std::abs(m(z)), 1.0, 1e-14);
  }
  EXPECT_LT(std::abs(m(Complex{0.5, 0.5})), 1e-15);
}
