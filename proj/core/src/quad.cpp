#include "wpnum/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "wpnum/geom.hpp"

namespace wpnum {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_polar_sizes(int n_radial, int n_angular) {
  if (n_radial < 1) throw ParameterError("n_radial must be >= 1");
  if (n_angular < 4) throw ParameterError("n_angular must be >= 4");
}

// Polar product on inner < |z| < outer, Gauss-Legendre in r with the r dr Jacobian.
void polar_product(double inner, double outer, int n_radial, int n_angular,
                   std::vector<Complex>& nodes, std::vector<double>& weights) {
  const GaussLegendre gl = gauss_legendre(n_radial, inner, outer);
  const double dtheta = 2.0 * pi / n_angular;
  nodes.reserve(static_cast<std::size_t>(n_radial) * n_angular);
  weights.reserve(nodes.capacity());
  for (int i = 0; i < n_radial; ++i) {
    const double r = gl.nodes[i];
    const double w = gl.weights[i] * r * dtheta;
    for (int j = 0; j < n_angular; ++j) {
      nodes.push_back(std::polar(r, dtheta * j));
      weights.push_back(w);
    }
  }
}

}  // namespace

bool region_contains(const Region& region, Complex z) {
  return std::visit(
      overloaded{
          [z](const DiskRegion& d) { return std::abs(z) < d.radius; },
          [z](const AnnulusRegion& a) {
            const double r = std::abs(z);
            return a.inner < r && r < a.outer;
          },
          [z](const HalfPlaneRegion& h) {
            if (!(z.imag() > 0.0)) return false;
            return std::abs(cayley_inv(z)) < h.disk_radius;
          },
      },
      region);
}

double region_area(const Region& region) {
  return std::visit(
      overloaded{
          [](const DiskRegion& d) { return pi * d.radius * d.radius; },
          [](const AnnulusRegion& a) { return pi * (a.outer * a.outer - a.inner * a.inner); },
          [](const HalfPlaneRegion& h) {
            // area of T(D_R) = integral of |T'|^2 = 4 / |1 - z|^4 over D_R
            if (h.disk_radius >= 1.0) return std::numeric_limits<double>::infinity();
            const double s = h.disk_radius * h.disk_radius;
            return 4.0 * pi * s / ((1.0 - s) * (1.0 - s));
          },
      },
      region);
}

GaussLegendre gauss_legendre(int n, double a, double b) {
  if (n < 1) throw ParameterError("Gauss-Legendre order must be >= 1");
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged root
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = mid - half * x;
    rule.nodes[n - 1 - i] = mid + half * x;
    rule.weights[i] = half * w;
    rule.weights[n - 1 - i] = half * w;
  }
  return rule;
}

QuadratureRule::QuadratureRule(Region region, std::vector<Complex> nodes,
                               std::vector<double> weights, int n_radial, int n_angular)
    : region_(region),
      nodes_(std::move(nodes)),
      weights_(std::move(weights)),
      n_radial_(n_radial),
      n_angular_(n_angular) {
  if (nodes_.size() != weights_.size())
    throw ParameterError("quadrature rule: node and weight counts differ");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!(weights_[i] > 0.0)) throw ParameterError("quadrature rule: weights must be positive");
    if (!region_contains(region_, nodes_[i]))
      throw ParameterError("quadrature rule: node outside its region");
  }
}

QuadratureRule disk_rule(int n_radial, int n_angular, double max_radius) {
  require_polar_sizes(n_radial, n_angular);
  if (!(max_radius > 0.0 && max_radius <= 1.0))
    throw ParameterError("disk_rule: max_radius must lie in (0, 1]");
  std::vector<Complex> nodes;
  std::vector<double> weights;
  polar_product(0.0, max_radius, n_radial, n_angular, nodes, weights);
  return {DiskRegion{max_radius}, std::move(nodes), std::move(weights), n_radial, n_angular};
}

QuadratureRule annulus_rule(double r_outer, int n_radial, int n_angular) {
  if (!(r_outer > 1.0)) throw ParameterError("annulus_rule: r_outer must exceed 1");
  return shell_rule(1.0, r_outer, n_radial, n_angular);
}

QuadratureRule shell_rule(double inner, double outer, int n_radial, int n_angular) {
  require_polar_sizes(n_radial, n_angular);
  if (!(inner >= 0.0 && outer > inner && std::isfinite(outer)))
    throw ParameterError("shell_rule: need 0 <= inner < outer");
  std::vector<Complex> nodes;
  std::vector<double> weights;
  polar_product(inner, outer, n_radial, n_angular, nodes, weights);
  if (inner == 0.0)
    return {DiskRegion{outer}, std::move(nodes), std::move(weights), n_radial, n_angular};
  return {AnnulusRegion{inner, outer}, std::move(nodes), std::move(weights), n_radial,
          n_angular};
}

QuadratureRule half_plane_rule(int n_radial, int n_angular, double max_disk_radius) {
  const QuadratureRule base = disk_rule(n_radial, n_angular, max_disk_radius);
  std::vector<Complex> nodes;
  std::vector<double> weights;
  nodes.reserve(base.size());
  weights.reserve(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    const Complex z = base.nodes()[i];
    const double jac = std::norm(cayley_derivative(z));
    nodes.push_back(cayley(z));
    weights.push_back(base.weights()[i] * jac);
  }
  return {HalfPlaneRegion{max_disk_radius}, std::move(nodes), std::move(weights), n_radial,
          n_angular};
}

std::vector<Complex> sample(const QuadratureRule& rule, const Field& f) {
  std::vector<Complex> out;
  out.reserve(rule.size());
  for (const Complex z : rule.nodes()) out.push_back(f(z));
  return out;
}

void CompensatedSum::add(double x) noexcept {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x))
    comp_ += (sum_ - t) + x;
  else
    comp_ += (x - t) + sum_;
  sum_ = t;
}

Complex integrate(const QuadratureRule& rule, std::span<const Complex> samples) {
  if (samples.size() != rule.size())
    throw ParameterError("integrate: sample count does not match rule size");
  ComplexCompensatedSum acc;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Complex v = samples[i];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      std::ostringstream msg;
      msg << "integrate: non-finite sample at node " << i << " (z = " << rule.nodes()[i]
          << ")";
      throw NumericError(msg.str());
    }
    acc.add(rule.weights()[i] * v);
  }
  return acc.value();
}

Complex integrate(const QuadratureRule& rule, const Field& f) {
  const std::vector<Complex> values = sample(rule, f);
  return integrate(rule, values);
}

double integrate_real(const QuadratureRule& rule, const std::function<double(Complex)>& f) {
  std::vector<Complex> values;
  values.reserve(rule.size());
  for (const Complex z : rule.nodes()) values.emplace_back(f(z), 0.0);
  return integrate(rule, values).real();
}

double polar_sup(const std::function<double(Complex)>& g, double inner, double outer,
                 const SupGrid& grid) {
  if (grid.n_radial < 1 || grid.n_angular < 4 || !(outer > inner) || inner < 0.0)
    throw ParameterError("polar_sup: invalid grid");
  const int nr = grid.n_radial + 1;  // radii include both circles
  const int nt = grid.n_angular;
  const double dr = (outer - inner) / grid.n_radial;
  const double dt = 2.0 * pi / nt;
  std::vector<double> values(static_cast<std::size_t>(nr) * nt);
  auto at = [&](int i, int j) -> double& {
    return values[static_cast<std::size_t>(i) * nt + ((j % nt) + nt) % nt];
  };
  std::vector<Complex> roots(static_cast<std::size_t>(nt));
  for (int j = 0; j < nt; ++j) roots[static_cast<std::size_t>(j)] = std::polar(1.0, dt * j);
  for (int i = 0; i < nr; ++i) {
    const double r = inner + dr * i;
    for (int j = 0; j < nt; ++j) {
      const double v = g(r * roots[static_cast<std::size_t>(j)]);
      if (!std::isfinite(v)) throw NumericError("polar_sup: non-finite value on grid");
      at(i, j) = v;
    }
  }

  // Local maxima of the grid, best first.
  std::vector<std::pair<double, std::pair<int, int>>> peaks;
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nt; ++j) {
      const double v = at(i, j);
      bool is_peak = true;
      for (int di = -1; di <= 1 && is_peak; ++di) {
        const int ii = i + di;
        if (ii < 0 || ii >= nr) continue;
        for (int dj = -1; dj <= 1; ++dj) {
          if ((di || dj) && at(ii, j + dj) > v) {
            is_peak = false;
            break;
          }
        }
      }
      if (is_peak) peaks.push_back({v, {i, j}});
    }
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  if (peaks.size() > static_cast<std::size_t>(grid.candidates))
    peaks.resize(static_cast<std::size_t>(grid.candidates));

  double best = 0.0;
  for (const double v : values) best = std::max(best, v);

  for (const auto& [value, ij] : peaks) {
    double r0 = inner + dr * ij.first;
    double t0 = dt * ij.second;
    double v0 = value;
    double hr = dr;
    double ht = dt;
    for (int step = 0; step < grid.refine_steps; ++step) {
      double br = r0, bt = t0, bv = v0;
      for (int a = -2; a <= 2; ++a) {
        const double r = std::clamp(r0 + 0.5 * a * hr, inner, outer);
        for (int b = -2; b <= 2; ++b) {
          const double t = t0 + 0.5 * b * ht;
          const double v = g(std::polar(r, t));
          if (std::isfinite(v) && v > bv) {
            bv = v;
            br = r;
            bt = t;
          }
        }
      }
      r0 = br;
      t0 = bt;
      v0 = bv;
      hr *= 0.5;
      ht *= 0.5;
    }
    best = std::max(best, v0);
  }
  return best;
}

}  // namespace wpnum
