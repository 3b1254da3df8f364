#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "wpnum/quad.hpp"

using namespace wpnum;

namespace {

double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  const auto gl = gauss_legendre(10, 0.0, 2.0);
  for (int k = 0; k <= 19; ++k) {
    double s = 0.0;
    for (int i = 0; i < 10; ++i) s += gl.weights[i] * std::pow(gl.nodes[i], k);
    EXPECT_NEAR(s, std::pow(2.0, k + 1) / (k + 1), 1e-12 * std::pow(2.0, k + 1)) << k;
  }
}

TEST(DiskRule, AreaAndSimpleMoments) {
  const auto rule = disk_rule(20, 64, 1.0);
  EXPECT_LT(rel_err(integrate(rule, [](Complex) { return Complex{1.0}; }).real(), pi), 1e-12);
  EXPECT_LT(std::abs(integrate(rule, [](Complex z) { return z; })), 1e-14);
  EXPECT_LT(rel_err(integrate_real(rule, [](Complex z) {
                      const double w = 1 - std::norm(z);
                      return w * w;
                    }),
                    pi / 3.0),
            1e-10);
  EXPECT_LT(rel_err(integrate_real(rule, [](Complex z) { return std::norm(z); }), pi / 2.0), 1e-12);
  EXPECT_LT(rel_err(integrate_real(rule, [](Complex z) {
                      const double w = 1 - std::norm(z);
                      return w * w * std::norm(z);
                    }),
                    pi / 12.0),
            1e-12);
  EXPECT_EQ(integrate(rule, [](Complex) { return Complex{}; }), Complex{});
}

TEST(DiskRule, MonomialExactnessUpToDeclaredDegree) {
  // z^a conj(z)^b over |z| < R: 2 pi R^{2a+2} / (2a + 2) when a == b, else 0.
  for (const double R : {1.0, 0.7}) {
    const int nr = 6, nt = 12;
    const auto rule = disk_rule(nr, nt, R);
    const int deg = std::min(2 * nr - 1, nt - 1);
    for (int a = 0; a <= deg; ++a) {
      for (int b = 0; a + b <= deg; ++b) {
        const Complex got = integrate(rule, [a, b](Complex z) {
          return std::pow(z, a) * std::pow(std::conj(z), b);
        });
        const double want = a == b ? 2 * pi * std::pow(R, a + b + 2) / (a + b + 2) : 0.0;
        EXPECT_NEAR(got.real(), want, 1e-12) << a << "," << b;
        EXPECT_NEAR(got.imag(), 0.0, 1e-12) << a << "," << b;
      }
    }
  }
}

TEST(DiskRule, RefinementNeverIncreasesError) {
  // (1 - |z|^2)^{1/2} is not polynomial; compare with the closed form 2 pi / 3.
  auto f = [](Complex z) { return std::sqrt(1 - std::norm(z)); };
  double prev = 1e300;
  for (int k = 0; k < 4; ++k) {
    const int nr = 4 << k;
    const auto rule = disk_rule(nr, 4 * nr);
    const double err = std::abs(integrate_real(rule, f) - 2 * pi / 3);
    EXPECT_LE(err, prev + 1e-15);
    prev = err;
  }
}

TEST(AnnulusRule, AreaAndWeightedMoment) {
  const auto rule = annulus_rule(2.0, 20, 64);
  EXPECT_LT(rel_err(integrate(rule, [](Complex) { return Complex{1.0}; }).real(), 3 * pi), 1e-12);
  EXPECT_LT(std::abs(integrate(rule, [](Complex z) { return 1.0 / z; })), 1e-13);
  EXPECT_LT(rel_err(integrate_real(rule, [](Complex z) {
                      const double w = 1 - std::norm(z);
                      return w * w;
                    }),
                    9 * pi),
            1e-10);
}

TEST(AnnulusRule, MatchesIndependentPolarOracle) {
  const auto rule = annulus_rule(1.5, 24, 64);
  auto f = [](Complex z) { return std::exp(z) / (z * z); };
  const Complex want = oracle::integrate_polar(f, 1.0, 1.5);
  EXPECT_LT(std::abs(integrate(rule, f) - want), 1e-11);
}

TEST(QuadratureRule, Invariants) {
  for (const auto& rule : {disk_rule(8, 16, 0.9), annulus_rule(3.0, 8, 16), shell_rule(0.5, 0.75, 4, 8)}) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      EXPECT_GT(rule.weights()[i], 0.0);
      EXPECT_TRUE(region_contains(rule.region(), rule.nodes()[i]));
      sum += rule.weights()[i];
    }
    EXPECT_NEAR(sum, region_area(rule.region()), 1e-12 * region_area(rule.region()));
  }
}

TEST(QuadratureRule, ParameterErrors) {
  EXPECT_THROW(disk_rule(0, 16), ParameterError);
  EXPECT_THROW(disk_rule(4, 3), ParameterError);
  EXPECT_THROW(disk_rule(4, 16, 1.5), ParameterError);
  EXPECT_THROW(disk_rule(4, 16, 0.0), ParameterError);
  EXPECT_THROW(annulus_rule(1.0, 4, 16), ParameterError);
  EXPECT_THROW(annulus_rule(0.5, 4, 16), ParameterError);
}

TEST(Integrate, NonFiniteSampleNamesTheNode) {
  const auto rule = disk_rule(2, 4);
  std::vector<Complex> s(rule.size(), 1.0);
  s[5] = Complex{std::nan(""), 0.0};
  try {
    integrate(rule, s);
    FAIL() << "expected NumericError";
  } catch (const NumericError& e) {
    EXPECT_NE(std::string(e.what()).find("node 5"), std::string::npos);
  }
}

TEST(Integrate, DeterministicOrder) {
  const auto rule = disk_rule(16, 64);
  auto f = [](Complex z) { return std::exp(3.0 * z) * std::conj(z); };
  EXPECT_EQ(integrate(rule, f), integrate(rule, f));
}

TEST(HalfPlaneRule, PushesForwardAreaOfTruncatedDisk) {
  const auto rule = half_plane_rule(24, 64, 0.5);
  double sum = 0.0;
  for (const double w : rule.weights()) sum += w;
  EXPECT_LT(rel_err(sum, region_area(rule.region())), 1e-10);
  for (const Complex w : rule.nodes()) EXPECT_GT(w.imag(), 0.0);
}

TEST(PolarSup, FindsInteriorAndBoundaryMaxima) {
  // (1 - r^2)^2 r^2 peaks at r^2 = 1/3 with value 4/27.
  const double v = polar_sup([](Complex z) {
    const double w = 1 - std::norm(z);
    return w * w * std::norm(z);
  }, 0.0, 1.0, {64, 64, 4, 20});
  EXPECT_NEAR(v, 4.0 / 27.0, 1e-12);
  EXPECT_NEAR(polar_sup([](Complex z) { return std::abs(z + 0.5); }, 0.0, 1.0), 1.5, 1e-12);
}
