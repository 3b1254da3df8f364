#include "wpnum/geom.hpp"

#include <cmath>
#include <sstream>

namespace wpnum {

namespace {

[[noreturn]] void domain_fail(const char* what, Complex z) {
  std::ostringstream msg;
  msg << what << ": point " << z << " outside domain";
  throw DomainError(msg.str());
}

constexpr Complex I{0.0, 1.0};

}  // namespace

double lambda_disk(Complex z) {
  const double s = std::norm(z);
  if (!(s < 1.0)) domain_fail("lambda_disk", z);
  return 1.0 / (1.0 - s);
}

double lambda_halfplane(Complex z) {
  if (!(z.imag() > 0.0)) domain_fail("lambda_halfplane", z);
  return 1.0 / z.imag();
}

double lambda_exterior(Complex z) {
  const double s = std::norm(z);
  if (!(s > 1.0) || !std::isfinite(s)) domain_fail("lambda_exterior", z);
  return 1.0 / (s - 1.0);
}

MetricDensity MetricDensity::for_domain(DomainTag tag) {
  switch (tag) {
    case DomainTag::disk:
      return disk();
    case DomainTag::half_plane:
      return half_plane();
    case DomainTag::annulus:
      return exterior();
  }
  throw ParameterError("unknown domain tag");
}

HolomorphicMap HolomorphicMap::identity() {
  return {[](Complex z) { return z; }, [](Complex) { return Complex{1.0, 0.0}; }};
}

HolomorphicMap compose(const HolomorphicMap& g, const HolomorphicMap& h) {
  return {[g, h](Complex z) { return g.value(h.value(z)); },
          [g, h](Complex z) { return g.derivative(h.value(z)) * h.derivative(z); }};
}

Complex cayley(Complex z) {
  if (z == Complex{1.0, 0.0}) domain_fail("cayley", z);
  return I * (1.0 + z) / (1.0 - z);
}

Complex cayley_derivative(Complex z) {
  if (z == Complex{1.0, 0.0}) domain_fail("cayley_derivative", z);
  const Complex q = 1.0 - z;
  return 2.0 * I / (q * q);
}

Complex cayley_inv(Complex w) {
  if (w == -I) domain_fail("cayley_inv", w);
  return (w - I) / (w + I);
}

Complex cayley_inv_derivative(Complex w) {
  if (w == -I) domain_fail("cayley_inv_derivative", w);
  const Complex q = w + I;
  return 2.0 * I / (q * q);
}

HolomorphicMap cayley_map() { return {cayley, cayley_derivative}; }
HolomorphicMap cayley_inv_map() { return {cayley_inv, cayley_inv_derivative}; }

MoebiusMap::MoebiusMap(Complex a, Complex b, Complex c, Complex d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (std::abs(determinant()) == 0.0) throw ParameterError("Moebius map: ad - bc == 0");
}

MoebiusMap MoebiusMap::rotation(double theta) {
  return {std::polar(1.0, theta), 0.0, 0.0, 1.0};
}

MoebiusMap MoebiusMap::disk_automorphism(double theta, Complex a) {
  if (!(std::abs(a) < 1.0)) throw ParameterError("disk automorphism: need |a| < 1");
  const Complex e = std::polar(1.0, theta);
  return {e, -e * a, -std::conj(a), 1.0};
}

Complex MoebiusMap::operator()(Complex z) const {
  const Complex den = c_ * z + d_;
  if (den == Complex{}) domain_fail("Moebius map pole", z);
  return (a_ * z + b_) / den;
}

Complex MoebiusMap::derivative(Complex z) const {
  const Complex den = c_ * z + d_;
  if (den == Complex{}) domain_fail("Moebius map pole", z);
  return determinant() / (den * den);
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& inner) const {
  return {a_ * inner.a_ + b_ * inner.c_, a_ * inner.b_ + b_ * inner.d_,
          c_ * inner.a_ + d_ * inner.c_, c_ * inner.b_ + d_ * inner.d_};
}

MoebiusMap MoebiusMap::inverse() const { return {d_, -b_, -c_, a_}; }

HolomorphicMap MoebiusMap::as_map() const {
  const MoebiusMap m = *this;
  return {[m](Complex z) { return m(z); }, [m](Complex z) { return m.derivative(z); }};
}

MetricDensity pullback_metric(const HolomorphicMap& g, const MetricDensity& rho,
                              DomainTag new_domain) {
  return {new_domain, [g, rho](Complex w) { return rho(g.value(w)) * std::abs(g.derivative(w)); }};
}

}  // namespace wpnum
