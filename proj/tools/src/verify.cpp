#include "wpnum_cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include "wpnum/annulus.hpp"
#include "wpnum/diff.hpp"
#include "wpnum/ensemble.hpp"
#include "wpnum/geom.hpp"
#include "wpnum/project.hpp"
#include "wpnum/schwarz.hpp"
#include "wpnum/wp.hpp"
#include "wpnum_cli/parallel.hpp"

namespace wpnum::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Random stream ids. Changing one changes every report, so they are fixed.
enum Stream : std::uint64_t {
  kStreamBfrak = 1,
  kStreamAnnulus = 2,
  kStreamWulf = 10,  // + pair index; reflected pairs follow the outer ones
  kStreamSchwarzian = 20,
  kStreamPsi = 21,
  kStreamAW = 22,
  kStreamHOmega = 30,
  kStreamK = 40,
  kStreamP = 41,
  kStreamWP = 50,
  kStreamGeom = 60,
};

struct Ctx {
  const VerifyConfig& cfg;
  QuadratureRule rule;
  int workers;

  double tol(double pinned) const { return pinned * cfg.tol_scale; }
  int count(int wanted) const { return std::min(wanted, cfg.trials); }
};

double rel_err(double got, double want) {
  const double d = std::abs(got - want);
  if (d == 0.0) return 0.0;
  return d / std::max(std::abs(want), std::numeric_limits<double>::min());
}

double rel_err(Complex got, Complex want) {
  const double d = std::abs(got - want);
  if (d == 0.0) return 0.0;
  return d / std::max(std::abs(want), std::numeric_limits<double>::min());
}

// Max that keeps NaN instead of silently dropping it.
double worst(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return std::numeric_limits<double>::quiet_NaN();
  return std::max(a, b);
}

template <class T, class F>
double worst_of(const std::vector<T>& xs, F get) {
  double m = 0.0;
  for (const auto& x : xs) m = worst(m, get(x));
  return m;
}

template <class T, class F>
double least_of(const std::vector<T>& xs, F get) {
  double m = kInf;
  for (const auto& x : xs) {
    const double v = get(x);
    if (std::isnan(v)) return v;
    m = std::min(m, v);
  }
  return m;
}

CheckRecord error_check(std::string name, std::string anchor, double value, double tol,
                        json inputs) {
  CheckRecord r;
  r.check = std::move(name);
  r.anchor = std::move(anchor);
  r.value = value;
  r.bound = 0.0;
  r.tol = tol;
  r.pass = std::isfinite(value) && value <= tol;
  r.inputs = std::move(inputs);
  return r;
}

CheckRecord bound_check(std::string name, std::string anchor, double value, double bound,
                        json inputs) {
  CheckRecord r;
  r.check = std::move(name);
  r.anchor = std::move(anchor);
  r.value = value;
  r.bound = bound;
  r.tol = 0.0;
  r.pass = std::isfinite(value) && value <= bound;
  r.inputs = std::move(inputs);
  return r;
}

CheckRecord recorded(std::string name, std::string anchor, double value, bool ok, json inputs) {
  CheckRecord r;
  r.check = std::move(name);
  r.anchor = std::move(anchor);
  r.value = value;
  r.pass = ok;
  r.inputs = std::move(inputs);
  return r;
}

double l2_coefficients(std::span<const Complex> c) {
  double s = 0.0;
  for (Complex x : c) s += std::norm(x);
  return std::sqrt(s);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

// ---------------------------------------------------------------------------

std::vector<CheckRecord> group_bfrak(const Ctx& c) {
  const int n = c.count(50);
  struct Out {
    double exact = 0.0;
    double quad = 0.0;
  };
  const auto res = parallel_map(n, c.workers, [&](int i) {
    Rng rng(c.cfg.seed, kStreamBfrak, static_cast<std::uint64_t>(i));
    const PowerSeries P = random_polynomial(rng, rng.uniform_int(0, 10));
    const Differential psi(kConjQuadratic, SeriesForm{P, true, 0});
    const Differential mu = beltrami_from_quadratic(psi);
    Out o;
    // p = 2 against the coefficient sum written out here.
    double s = 0.0;
    for (int k = 0; k <= P.degree(); ++k)
      s += std::norm(P[k]) * 2.0 * pi / ((k + 1.0) * (k + 2.0) * (k + 3.0));
    o.exact = rel_err(lp_norm_series(mu, 2.0).value, std::sqrt(s));
    for (double p : {1.0, 2.0, kInf}) {
      const double a = lp_norm_series(psi, p).value;
      o.exact = worst(o.exact, rel_err(lp_norm_series(mu, p).value, a));
      const auto g = lp_norm(mu, p, c.rule);
      // p = 1 has no closed form; compare the two grid integrands instead.
      const double ref = p == 1.0 ? lp_norm(psi, p, c.rule).value : a;
      o.quad = worst(o.quad, g.diverged() ? kInf : rel_err(g.value, ref));
    }
    return o;
  });
  const json in = {{"trials", n}, {"max_degree", 10}, {"p", json::array({"1", "2", "inf"})},
                   {"rule", {c.cfg.nr, c.cfg.ntheta}}};
  return {
      error_check("bfrak_isometry_exact", "||B(alpha)||_p = ||alpha||_p",
                  worst_of(res, [](const Out& o) { return o.exact; }), c.tol(1e-10), in),
      error_check("bfrak_isometry_quadrature", "||B(alpha)||_p = ||alpha||_p",
                  worst_of(res, [](const Out& o) { return o.quad; }), c.tol(1e-6), in),
  };
}

std::vector<CheckRecord> group_annulus(const Ctx& c) {
  const int n = c.count(100);
  const std::vector<double> radii = {1.5, 2.0, 4.0};
  const int nang = std::max(c.cfg.ntheta, 128);
  std::vector<QuadratureRule> outer, inner;
  for (double r : radii) {
    outer.push_back(annulus_rule(r, c.cfg.nr, nang));
    inner.push_back(shell_rule(1.0 / r, 1.0, c.cfg.nr, nang));
  }
  struct Out {
    double outer = 0.0;
    double inner = 0.0;
  };
  const int total = n * static_cast<int>(radii.size());
  const auto res = parallel_map(total, c.workers, [&](int idx) {
    const std::size_t j = static_cast<std::size_t>(idx / n);
    const double r = radii[j];
    Rng rng(c.cfg.seed, kStreamAnnulus, static_cast<std::uint64_t>(idx));
    const int lo = -rng.uniform_int(0, 20);
    const int hi = rng.uniform_int(0, 20);
    auto weighted_sq = [](const QuadratureRule& rule, const LaurentSeries& s) {
      return integrate_real(rule, [&s](Complex z) {
        const double w = 1.0 - std::norm(z);
        return w * w * std::norm(s(z));
      });
    };
    Out o;
    const LaurentSeries so = random_laurent(rng, lo, hi, 1.0, r);
    const double eo = weighted_norm_series(so, r);
    o.outer = rel_err(weighted_sq(outer[j], so), eo * eo);
    const LaurentSeries si = random_laurent(rng, lo, hi, 1.0 / r, 1.0);
    const double ei = weighted_norm_series(si, 1.0 / r, Side::inner);
    o.inner = rel_err(weighted_sq(inner[j], si), ei * ei);
    return o;
  });
  json in = {{"trials_per_r", n}, {"r", radii}, {"n_range", {-20, 20}},
             {"rule", {c.cfg.nr, nang}}};
  json in_reflected = in;
  in_reflected["r"] = json::array({1.0 / 1.5, 0.5, 0.25});
  return {
      error_check("annulus_norm_identity", "2 pi sum |a_n|^2 I_n(r)",
                  worst_of(res, [](const Out& o) { return o.outer; }), c.tol(1e-8), in),
      error_check("annulus_norm_identity_reflected", "2 pi sum |a_n|^2 I_n(r), r < |z| < 1",
                  worst_of(res, [](const Out& o) { return o.inner; }), c.tol(1e-8),
                  in_reflected),
  };
}

LaurentSeries wulf_series(double r, std::uint64_t seed, int pair, std::uint64_t index,
                          double inner = 1.0) {
  Rng rng(seed, kStreamWulf + static_cast<std::uint64_t>(pair), index);
  const int lo = -rng.uniform_int(0, 20);
  const int hi = rng.uniform_int(0, 20);
  const LaurentSeries s = inner < 1.0 ? random_laurent(rng, lo, hi, inner, 1.0)
                                      : random_laurent(rng, lo, hi, 1.0, r);
  return s.scaled(1.0 / l2_coefficients(s.coefficients()));
}

std::vector<CheckRecord> group_wulf(const Ctx& c) {
  struct Pair {
    double r, t;
  };
  const std::vector<Pair> pairs = {{2.0, 1.5}, {4.0, 2.0}, {1.5, 1.2}};
  const int n = c.cfg.trials;
  std::vector<CheckRecord> out;
  double pointwise = 0.0;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    const auto [r, t] = pairs[j];
    struct Out {
      double ratio = 0.0;
      double pointwise = 0.0;
    };
    const auto res = parallel_map(n, c.workers, [&](int k) {
      Out o;
      const auto idx = static_cast<std::uint64_t>(k);
      o.ratio = wulf_trial(r, t, c.cfg.seed, static_cast<int>(j), idx).ratio;
      const LaurentSeries s = wulf_series(r, c.cfg.seed, static_cast<int>(j), idx);
      const double norm = weighted_norm_series(s, r);
      constexpr int kRadii = 24, kAngles = 64;
      for (int a = 0; a < kRadii; ++a) {
        const double rad = 1.0 + (r - 1.0) * (a + 0.5) / kRadii;
        const double w = rad * rad - 1.0;
        const double bound = wulf_pointwise_factor(r, rad) * norm;
        for (int b = 0; b < kAngles; ++b) {
          const Complex z = std::polar(rad, 2.0 * pi * b / kAngles);
          o.pointwise = worst(o.pointwise, w * w * std::abs(s(z)) / bound);
        }
      }
      return o;
    });
    const double max_ratio = worst_of(res, [](const Out& o) { return o.ratio; });
    pointwise = worst(pointwise, worst_of(res, [](const Out& o) { return o.pointwise; }));
    out.push_back(bound_check("wulf_bound_r" + fmt(r) + "_t" + fmt(t),
                              "sup_{A_t} (1-|z|^2)^2 |f(z)| <= C(r,t) ||f||", max_ratio, 1.0,
                              {{"r", r},
                               {"t", t},
                               {"trials", n},
                               {"C", wulf_constant(r, t)},
                               {"n_range", {-20, 20}},
                               {"sup_grid", {wulf_grid().n_radial, wulf_grid().n_angular}}}));
  }
  out.push_back(bound_check("wulf_pointwise", "(1-|z|^2)^2 |f(z)| <= C(r,|z|) ||f||", pointwise,
                            1.0, {{"trials_per_pair", n}, {"points", {24, 64}}}));

  // Reflected picture r < |z| < 1: no constant is claimed, record the empirical one.
  const int m = c.count(200);
  json constants = json::array();
  bool ok = true;
  double largest = 0.0;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    const double r = 1.0 / pairs[j].r, t = 1.0 / pairs[j].t;
    const auto res = parallel_map(m, c.workers, [&](int k) {
      const LaurentSeries s = wulf_series(1.0, c.cfg.seed, static_cast<int>(pairs.size() + j),
                                          static_cast<std::uint64_t>(k), r);
      const double sup = sup_weighted([&s](Complex z) { return s(z); }, t, wulf_grid(),
                                      Side::inner);
      return sup / weighted_norm_series(s, r, Side::inner);
    });
    const double v = worst_of(res, [](double x) { return x; });
    ok = ok && std::isfinite(v) && v > 0.0;
    largest = worst(largest, v);
    constants.push_back({{"r", r}, {"t", t}, {"max_ratio", v}});
  }
  out.push_back(recorded("wulf_reflected_constant",
                         "sup_{t<=|z|<1} (1-|z|^2)^2 |f| / ||f||_{r<|z|<1}", largest, ok,
                         {{"trials_per_pair", m}, {"pairs", constants}}));
  return out;
}

std::vector<CheckRecord> group_schwarzian(const Ctx& c) {
  const int n = c.count(200);
  const auto ratios = parallel_map(n, c.workers, [&](int i) {
    Rng rng(c.cfg.seed, kStreamSchwarzian, static_cast<std::uint64_t>(i));
    const PowerSeries S = random_polynomial(rng, rng.uniform_int(0, 20));
    return nehari_tnt_check(S).ratio;
  });
  // S = c: sup is |c| at 0, the L^2 norm is |c| sqrt(pi/3), so the ratio is 1/2.
  const int nc = std::min(10, n);
  const auto constant = parallel_map(nc, c.workers, [&](int i) {
    Rng rng(c.cfg.seed, kStreamSchwarzian, 1'000'000 + static_cast<std::uint64_t>(i));
    return std::abs(nehari_tnt_check(PowerSeries({rng.gaussian()})).ratio - 0.5);
  });
  return {
      bound_check("schwarzian_sup_l2", "sup (1-|z|^2)^2 |S| <= sqrt(12/pi) ||S||_2",
                  worst_of(ratios, [](double x) { return x; }), 1.0,
                  {{"trials", n}, {"max_degree", 20}, {"constant", sup_l2_constant()}}),
      error_check("schwarzian_sup_l2_constant_case", "sqrt(12/pi), S = c gives ratio 1/2",
                  worst_of(constant, [](double x) { return x; }), c.tol(1e-10),
                  {{"trials", nc}, {"target", 0.5}}),
  };
}

std::vector<CheckRecord> group_psi_band(const Ctx& c) {
  const int n = c.count(200);
  struct Out {
    double ratio = 0.0;
    double norm_a = 0.0;
  };
  const int N = c.cfg.degree;
  const auto res = parallel_map(n, c.workers, [&](int i) {
    Rng rng(c.cfg.seed, kStreamPsi, static_cast<std::uint64_t>(i));
    PowerSeries S = random_polynomial(rng, rng.uniform_int(0, 10));
    S = S * Complex(0.05 * rng.uniform(0.1, 1.0) / a22_norm(S));
    const Complex a0 = 0.02 * rng.uniform(0.0, 1.0) * rng.gaussian();
    // S -> A -> f -> A: the ensemble goes through the map, not just the series.
    const PowerSeries A0 = pre_schwarzian_from_schwarzian(S, a0, N);
    const PowerSeries f = map_from_pre_schwarzian(A0, 1.0);
    const WPCoordinates x = wp_coordinates(f);
    const BergmanNorms b = bergman_norms(x);
    Out o;
    o.norm_a = b.pre_schwarzian;
    o.ratio = (b.schwarzian * b.schwarzian + std::norm(x.pre_schwarzian[0])) /
              (b.pre_schwarzian * b.pre_schwarzian);
    return o;
  });
  const double lo = least_of(res, [](const Out& o) { return o.ratio; });
  const double hi = worst_of(res, [](const Out& o) { return o.ratio; });
  const double max_a = worst_of(res, [](const Out& o) { return o.norm_a; });
  const bool ok = std::isfinite(lo) && std::isfinite(hi) && lo > 0.0 && max_a <= 0.1;
  return {recorded("psi_band", "c1 ||A||^2 <= ||S||^2 + |A(0)|^2 <= c2 ||A||^2", hi, ok,
                   {{"trials", n}, {"c1", lo}, {"c2", hi}, {"max_norm_A", max_a},
                    {"truncation", N}})};
}

std::vector<CheckRecord> group_aw(const Ctx& c) {
  const int n = c.count(50);
  const QuadratureRule rhs_rule = disk_rule(c.cfg.nr / 2 + 1, c.cfg.ntheta / 2 + 1);
  struct Out {
    double ratio_err = 0.0;
    double guohui = 0.0;
  };
  const auto res = parallel_map(n, c.workers, [&](int i) {
    Rng rng(c.cfg.seed, kStreamAW, static_cast<std::uint64_t>(i));
    const PowerSeries S = random_polynomial(rng, rng.uniform_int(0, 10)) * Complex(0.5);
    Out o;
    o.ratio_err = std::abs(aw_l2_identity_check(S, c.rule, rhs_rule).ratio - 1.0);
    const Field reflected = [&S](Complex z) { return ahlfors_weill_dilatation(S, z); };
    const auto g = guohui_ratio(reflected, S, c.rule);
    o.guohui = g ? *g : std::numeric_limits<double>::quiet_NaN();
    return o;
  });
  const int nc = std::min(10, n);
  const auto constant = parallel_map(nc, c.workers, [&](int i) {
    Rng rng(c.cfg.seed, kStreamAW, 1'000'000 + static_cast<std::uint64_t>(i));
    const Complex cst = rng.gaussian();
    const double want = std::norm(cst) * pi / 12.0;
    const auto chk = aw_l2_identity_check(PowerSeries({cst}), c.rule, rhs_rule);
    return std::max(std::abs(chk.lhs - want), std::abs(chk.rhs - want));
  });
  const double g_lo = least_of(res, [](const Out& o) { return o.guohui; });
  const double g_hi = worst_of(res, [](const Out& o) { return o.guohui; });
  const json rules = {{"lhs", {c.cfg.nr, c.cfg.ntheta}},
                      {"rhs", {c.cfg.nr / 2 + 1, c.cfg.ntheta / 2 + 1}}};
  return {
      error_check("aw_quarter_identity", "||mu_S||_2^2 = 1/4 int (1-|z|^2)^2 |S|^2",
                  worst_of(res, [](const Out& o) { return o.ratio_err; }), c.tol(1e-6),
                  {{"trials", n}, {"max_degree", 10}, {"rules", rules}}),
      error_check("aw_quarter_identity_constant_case", "S = c: both sides |c|^2 pi/12",
                  worst_of(constant, [](double x) { return x; }), c.tol(1e-10),
                  {{"trials", nc}, {"rules", rules}}),
      recorded("guohui_ratio", "||S||_2^2 / ||mu||_2^2 for the reflected dilatation", g_hi,
               std::isfinite(g_lo) && std::isfinite(g_hi) && g_lo > 0.0,
               {{"trials", n}, {"min", g_lo}, {"max", g_hi}}),
  };
}

std::vector<CheckRecord> group_h_in_omega(const Ctx& c) {
  const int n = c.count(500);
  constexpr double kInterior = 0.9;
  struct Out {
    double ratio = 0.0;
    double interior = 0.0;
  };
  const SupGrid interior_grid{128, 256, 8, 12};
  const auto res = parallel_map(n, c.workers, [&](int i) {
    Rng rng(c.cfg.seed, kStreamHOmega, static_cast<std::uint64_t>(i));
    const HarmonicBeltrami mu = random_harmonic(rng, rng.uniform_int(0, 20));
    const double l2 = mu.l2_norm();
    Out o;
    o.ratio = mu.sup_norm() / (sup_l2_constant() * l2);
    o.interior = mu.sup_norm_on(kInterior, interior_grid) / l2;
    return o;
  });
  // Cauchy-Schwarz on the coefficients gives the best interior constant for
  // degree <= N: max over |z| <= 0.9 of (1-|z|^2)^2 sqrt(sum_{n<=N} |z|^{2n} / w_n).
  auto interior_constant = [&](int N) {
    double best = 0.0;
    constexpr int kScan = 2000;
    for (int i = 0; i <= kScan; ++i) {
      const double u = std::pow(kInterior * i / kScan, 2);
      double s = 0.0, un = 1.0;
      for (int k = 0; k <= N; ++k, un *= u) s += un / harmonic_weight(k);
      best = std::max(best, (1.0 - u) * (1.0 - u) * std::sqrt(s));
    }
    return best;
  };
  json dm = json::object();
  double d_min = kInf, d_max = 0.0;
  for (int N : {8, 16, std::max(20, c.cfg.degree)}) {
    const double d = interior_constant(N);
    dm[std::to_string(N)] = d;
    d_min = std::min(d_min, d);
    d_max = std::max(d_max, d);
  }
  const double empirical = worst_of(res, [](const Out& o) { return o.interior; });
  const bool stable = (d_max - d_min) <= 1e-12 * d_max;
  return {
      bound_check("h_in_omega", "||mu||_inf <= sqrt(12/pi) ||mu||_2",
                  worst_of(res, [](const Out& o) { return o.ratio; }), 1.0,
                  {{"trials", n}, {"max_degree", 20}, {"constant", sup_l2_constant()}}),
      recorded("interior_bound_DM", "sup_{|z|<=0.9} |mu| <= D_M ||mu||_2", d_max,
               stable && std::isfinite(empirical) && empirical <= d_min * (1.0 + 1e-9),
               {{"radius", kInterior}, {"D_M_by_degree", dm}, {"empirical_max", empirical},
                {"trials", n}}),
  };
}

std::vector<CheckRecord> group_k(const Ctx& c) {
  const int N = c.cfg.degree;
  std::vector<double> basis_err(9, 0.0);
  const auto errs = parallel_map(9, c.workers, [&](int n) {
    const HarmonicBeltrami mu(PowerSeries::monomial(n, n));
    const PowerSeries g = k_project_series(c.rule, mu.as_differential().field(), N);
    double e = 0.0;
    for (int k = 0; k <= g.degree(); ++k)
      e = worst(e, std::abs(g[k] - (k == n ? Complex(1.0) : Complex(0.0))));
    return e;
  });
  const int n = c.count(25);
  const auto direct = parallel_map(n, c.workers, [&](int i) {
    Rng rng(c.cfg.seed, kStreamK, static_cast<std::uint64_t>(i));
    const HarmonicBeltrami h = random_harmonic(rng, rng.uniform_int(0, 8));
    const MomentFreeMode f = random_moment_free(rng, 4);
    const Field nu = [&](Complex z) { return h(z) + f(z); };
    const PowerSeries g = k_project_series(c.rule, nu, N);
    const Complex z = std::polar(0.8 * std::sqrt(rng.uniform(0.0, 1.0)),
                                 rng.uniform(0.0, 2.0 * pi));
    const double w = 1.0 - std::norm(z);
    return std::abs(k_project_direct(c.rule, nu, z) - w * w * g(z));
  });
  return {
      error_check("k_reproducing", "3/pi (1-|z|^2)^2 int (1 - conj(zeta) z)^{-4} conj(nu)",
                  worst_of(errs, [](double x) { return x; }), c.tol(1e-10),
                  {{"n_max", 8}, {"truncation", N}, {"rule", {c.cfg.nr, c.cfg.ntheta}}}),
      error_check("k_direct_oracle", "3/pi (1-|z|^2)^2 int (1 - conj(zeta) z)^{-4} conj(nu)",
                  worst_of(direct, [](double x) { return x; }), c.tol(1e-6),
                  {{"points", n}, {"max_radius", 0.8}, {"truncation", N}}),
  };
}

std::vector<CheckRecord> group_p(const Ctx& c) {
  const int N = c.cfg.degree;
  // Kernel: the radial field and random moment-free modes.
  const HarmonicBeltrami radial =
      p_project(c.rule, [](Complex z) { return Complex(std::norm(z) - 0.5); }, N);
  double kernel = radial.phi().max_abs_coefficient();
  const int nk = c.count(100);
  const auto modes = parallel_map(nk, c.workers, [&](int i) {
    Rng rng(c.cfg.seed, kStreamP, static_cast<std::uint64_t>(i));
    const MomentFreeMode f = random_moment_free(rng, 8);
    return p_project(c.rule, f, N).phi().max_abs_coefficient() / f.sup();
  });
  kernel = worst(kernel, worst_of(modes, [](double x) { return x; }));

  const int n = c.count(100);
  struct Out {
    double idem = 0.0;
    double residual = 0.0;
  };
  const auto res = parallel_map(n, c.workers, [&](int i) {
    Rng rng(c.cfg.seed, kStreamP, 1'000'000 + static_cast<std::uint64_t>(i));
    const HarmonicBeltrami h = random_harmonic(rng, rng.uniform_int(0, 16));
    const MomentFreeMode f = random_moment_free(rng, 8);
    const Field mix = [&](Complex z) { return h(z) + f(z); };
    const HarmonicBeltrami p1 = p_project(c.rule, mix, N);
    const HarmonicBeltrami p2 = p_project(c.rule, p1.as_differential().field(), N);
    Out o;
    const double scale = std::max(p1.phi().max_abs_coefficient(), 1e-300);
    o.idem = (p2 - p1).phi().max_abs_coefficient() / scale;
    // decompose needs sup < 1; rescale the mixture into the unit ball.
    double sup = 0.0;
    for (Complex z : c.rule.nodes()) sup = std::max(sup, std::abs(mix(z)));
    const double s = sup > 0.0 ? 0.5 / sup : 1.0;
    const Decomposition d = decompose([&](Complex z) { return s * mix(z); }, N, c.rule);
    o.residual = *std::max_element(d.residual.residuals.begin(), d.residual.residuals.end());
    return o;
  });

  const int nl = c.count(10);
  const auto lin = parallel_map(nl, c.workers, [&](int i) {
    Rng rng(c.cfg.seed, kStreamP, 2'000'000 + static_cast<std::uint64_t>(i));
    const HarmonicBeltrami h = random_harmonic(rng, rng.uniform_int(0, 8));
    const MomentFreeMode f = random_moment_free(rng, 4);
    const Complex a = rng.gaussian();
    const Field nu = [&](Complex z) { return h(z) + f(z); };
    const Field anu = [&](Complex z) { return a * nu(z); };
    const MomentVector m = moments(c.rule, nu, N);
    const MomentVector am = moments(c.rule, anu, N);
    const PowerSeries pa = p_project(am).phi();
    const PowerSeries p = p_project(m).phi();
    const PowerSeries ka = k_project_series(am);
    const PowerSeries k = k_project_series(m);
    double e = 0.0;
    const double scale = std::max(std::abs(a) * p.max_abs_coefficient(), 1e-300);
    for (int j = 0; j <= N; ++j) {
      // P linear: phi of P(a nu) is conj(a) phi; K conjugate-linear: g(a nu) = conj(a) g.
      e = worst(e, std::abs(pa[j] - std::conj(a) * p[j]) / scale);
      e = worst(e, std::abs(ka[j] - std::conj(a) * k[j]) / scale);
    }
    return e;
  });
  return {
      error_check("p_kernel", "P(|zeta|^2 - 1/2) = 0", kernel, c.tol(1e-8),
                  {{"moment_free_trials", nk}, {"truncation", N}}),
      error_check("p_idempotence", "P^2 = P", worst_of(res, [](const Out& o) { return o.idem; }),
                  c.tol(1e-8), {{"trials", n}, {"truncation", N}}),
      error_check("p_linearity", "P(a nu) = a P(nu), K(a nu) = conj(a) K(nu)",
                  worst_of(lin, [](double x) { return x; }), c.tol(1e-10), {{"trials", nl}}),
      error_check("decompose_residual", "TBD = N_r + H_{-1,1}",
                  worst_of(res, [](const Out& o) { return o.residual; }), c.tol(1e-8),
                  {{"trials", n}, {"truncation", N}}),
  };
}

std::vector<CheckRecord> group_wp(const Ctx& c) {
  constexpr int kN = 10;
  const GramMatrix exact = wp_gram(kN);
  const GramMatrix quad = wp_gram(kN, c.rule);
  double diag = 0.0, off = 0.0, herm = 0.0, psd = 0.0;
  for (const GramMatrix* g : {&exact, &quad}) {
    for (int i = 0; i <= kN; ++i)
      diag = worst(diag, rel_err((*g)(i, i), Complex(2.0 * pi / ((i + 1.0) * (i + 2.0) * (i + 3.0)))));
    off = worst(off, g->max_off_diagonal());
    herm = worst(herm, g->hermitian_defect());
    psd = worst(psd, std::max(0.0, -g->min_eigenvalue()));
  }
  const json gram_in = {{"N", kN}, {"rule", {c.cfg.nr, c.cfg.ntheta}}};

  const int n = c.count(20);
  const QuadratureRule inner_rule = disk_rule(c.cfg.nr, c.cfg.ntheta, 0.999);
  struct Out {
    double quad = 0.0;
    double transport = 0.0;
    double cs = 0.0;
  };
  const auto res = parallel_map(n, c.workers, [&](int i) {
    Rng rng(c.cfg.seed, kStreamWP, static_cast<std::uint64_t>(i));
    const HarmonicBeltrami mu = random_harmonic(rng, rng.uniform_int(0, 16));
    const HarmonicBeltrami nu = random_harmonic(rng, rng.uniform_int(0, 16));
    Out o;
    const Complex want = wp_inner(mu, nu);
    o.quad = rel_err(wp_inner(mu.as_differential(), nu.as_differential(), inner_rule).value, want);
    o.cs = std::max(0.0, std::abs(want) - mu.l2_norm() * nu.l2_norm());
    const Differential a(kConjQuadratic, SeriesForm{random_polynomial(rng, 8), true, 0});
    const Differential b(kConjQuadratic, SeriesForm{random_polynomial(rng, 8), true, 0});
    const Complex ab = wp_inner_quadratic(a, b).value;
    const Differential ba = beltrami_from_quadratic(a), bb = beltrami_from_quadratic(b);
    o.transport = worst(rel_err(wp_inner(ba, bb).value, ab),
                        rel_err(wp_inner(ba, bb, c.rule).value, ab));
    return o;
  });
  return {
      error_check("wp_gram_diagonal", "<mu,nu> = int mu conj(nu) rho^2", diag, c.tol(1e-8),
                  gram_in),
      error_check("wp_gram_offdiagonal", "<mu,nu> = int mu conj(nu) rho^2", off, c.tol(1e-10),
                  gram_in),
      error_check("wp_gram_hermitian", "<mu,nu> = conj(<nu,mu>)", herm, c.tol(1e-12), gram_in),
      error_check("wp_gram_psd", "<mu,mu> >= 0", psd, c.tol(1e-10), gram_in),
      error_check("wp_exact_vs_quadrature", "<mu,nu> = sum conj(a_n) b_n w_n",
                  worst_of(res, [](const Out& o) { return o.quad; }), c.tol(1e-6),
                  {{"trials", n}, {"max_radius", 0.999}}),
      error_check("wp_bfrak_transport", "<B(a), B(b)> = (a, b)",
                  worst_of(res, [](const Out& o) { return o.transport; }), c.tol(1e-10),
                  {{"trials", n}}),
      error_check("wp_cauchy_schwarz", "|<mu,nu>| <= ||mu|| ||nu||",
                  worst_of(res, [](const Out& o) { return o.cs; }), c.tol(1e-12),
                  {{"trials", n}}),
  };
}

std::vector<CheckRecord> group_geometry(const Ctx& c) {
  Rng rng(c.cfg.seed, kStreamGeom, 0);
  const MetricDensity pulled = pullback_metric(cayley_map(), MetricDensity::half_plane());
  double cayley_err = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Complex z = std::polar(0.95 * std::sqrt(rng.uniform(0.0, 1.0)),
                                 rng.uniform(0.0, 2.0 * pi));
    cayley_err = worst(cayley_err, rel_err(pulled(z), 2.0 * lambda_disk(z)));
  }
  double auto_err = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Complex a = std::polar(0.9 * std::sqrt(rng.uniform(0.0, 1.0)),
                                 rng.uniform(0.0, 2.0 * pi));
    const MoebiusMap g = MoebiusMap::disk_automorphism(rng.uniform(0.0, 2.0 * pi), a);
    const MetricDensity back = pullback_metric(g.as_map(), MetricDensity::disk());
    for (int j = 0; j < 5; ++j) {
      const Complex z = std::polar(0.95 * std::sqrt(rng.uniform(0.0, 1.0)),
                                   rng.uniform(0.0, 2.0 * pi));
      auto_err = worst(auto_err, rel_err(back(z), lambda_disk(z)));
    }
  }
  // A constant Beltrami is not L^2 against rho^2; the guard must flag it.
  const auto flat = lp_norm(Differential(kBeltrami, DomainTag::disk,
                                         [](Complex) { return Complex(0.5); }),
                            2.0, c.rule);
  return {
      error_check("cayley_factor_two", "T^* lambda_H = 2 lambda_D", cayley_err, c.tol(1e-12),
                  {{"points", 100}, {"max_radius", 0.95}}),
      error_check("disk_automorphism_invariance", "g^* lambda_D = lambda_D", auto_err,
                  c.tol(1e-12), {{"maps", 20}, {"points_per_map", 5}}),
      bound_check("divergence_guard", "constant mu has infinite WP norm",
                  flat.diverged() ? 0.0 : 1.0, 0.0, {{"mu", 0.5}, {"p", 2}}),
  };
}

using Group = std::vector<CheckRecord> (*)(const Ctx&);

const std::vector<std::pair<std::string, Group>>& registry() {
  static const std::vector<std::pair<std::string, Group>> groups = {
      {"bfrak_isometry", group_bfrak},      {"annulus_norm_identity", group_annulus},
      {"wulf_bound", group_wulf},           {"schwarzian_sup_l2", group_schwarzian},
      {"psi_band", group_psi_band},         {"aw_quarter_identity", group_aw},
      {"k_reproducing", group_k},           {"p_projection", group_p},
      {"wp_gram", group_wp},                {"h_in_omega", group_h_in_omega},
      {"geometry", group_geometry},
  };
  return groups;
}

std::vector<CheckRecord> run_registered(Group g, const VerifyConfig& cfg) {
  const Ctx ctx{cfg, disk_rule(cfg.nr, cfg.ntheta), cfg.workers > 0 ? cfg.workers : default_workers()};
  const auto start = std::chrono::steady_clock::now();
  auto records = g(ctx);
  if (cfg.timings) {
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    for (auto& r : records) r.runtime_ms = ms / static_cast<double>(records.size());
  }
  return records;
}

std::string digest(const json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char ch : j.dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json optional_number(const std::optional<double>& x) {
  return x ? json(*x) : json(nullptr);
}

}  // namespace

void validate(const VerifyConfig& cfg) {
  if (cfg.nr < 16) throw ParameterError("--nr must be >= 16");
  if (cfg.ntheta < 64) throw ParameterError("--ntheta must be >= 64");
  if (cfg.degree < 8) throw ParameterError("--degree must be >= 8");
  if (!(cfg.tol_scale >= 0.0) || !std::isfinite(cfg.tol_scale))
    throw ParameterError("--tol-scale must be a finite value >= 0");
  if (cfg.trials < 1) throw ParameterError("--trials must be >= 1");
  if (cfg.workers < 0) throw ParameterError("worker count must be >= 0");
}

VerifyConfig apply_config_file(VerifyConfig base, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot read config file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("config " + path.string() + ": " + e.what(), 0);
  }
  if (!j.is_object()) throw ParseError("config " + path.string() + ": expected an object", 0);
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "nr") base.nr = value.get<int>();
      else if (key == "ntheta") base.ntheta = value.get<int>();
      else if (key == "degree") base.degree = value.get<int>();
      else if (key == "tol_scale") base.tol_scale = value.get<double>();
      else if (key == "seed") base.seed = value.get<std::uint64_t>();
      else if (key == "trials") base.trials = value.get<int>();
      else throw ParameterError("config " + path.string() + ": unknown key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw ParseError("config " + path.string() + ": " + e.what(), 0);
  }
  return base;
}

json config_echo(const VerifyConfig& cfg) {
  return {{"nr", cfg.nr},         {"ntheta", cfg.ntheta}, {"degree", cfg.degree},
          {"tol_scale", cfg.tol_scale}, {"seed", cfg.seed}, {"trials", cfg.trials}};
}

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& r) { return r.pass; });
}

const std::vector<std::string>& check_groups() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, g] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<CheckRecord> run_group(const std::string& name, const VerifyConfig& cfg) {
  validate(cfg);
  for (const auto& [n, g] : registry())
    if (n == name) return run_registered(g, cfg);
  throw ParameterError("unknown check group '" + name + "'");
}

Report run_verify(const VerifyConfig& cfg) {
  validate(cfg);
  Report report{cfg, {}};
  for (const auto& [name, g] : registry()) {
    auto records = run_registered(g, cfg);
    for (auto& r : records) report.checks.push_back(std::move(r));
  }
  return report;
}

std::string to_json(const Report& report) {
  json checks = json::array();
  for (const auto& r : report.checks) {
    checks.push_back({{"check", r.check},
                      {"value", r.value},
                      {"bound", optional_number(r.bound)},
                      {"tol", optional_number(r.tol)},
                      {"pass", r.pass},
                      {"anchor", r.anchor},
                      {"runtime_ms", optional_number(r.runtime_ms)},
                      {"inputs", r.inputs},
                      {"digest", digest(r.inputs)}});
  }
  const json doc = {{"seed", report.config.seed},
                    {"config", config_echo(report.config)},
                    {"pass", report.pass()},
                    {"checks", checks}};
  return doc.dump(2) + "\n";
}

SupGrid wulf_grid() { return {128, 256, 8, 12}; }

WulfTrial wulf_trial(double r, double t, std::uint64_t seed, int pair, std::uint64_t index) {
  const double c = wulf_constant(r, t);
  const LaurentSeries s = wulf_series(r, seed, pair, index);
  WulfTrial out;
  out.sup = sup_weighted([&s](Complex z) { return s(z); }, t, wulf_grid());
  out.norm = weighted_norm_series(s, r);
  out.bound = c * out.norm;
  out.ratio = out.sup / out.bound;
  return out;
}

}  // namespace wpnum::cli
