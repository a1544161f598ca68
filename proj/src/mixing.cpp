#include "flavent/mixing.hpp"

#include <cmath>
#include <numbers>

namespace flavent {

namespace {

constexpr double kPi = std::numbers::pi;

cplx phase(double delta) { return std::polar(1.0, delta); }

// Elementary 4x4 rotation in the (i,j) plane, optional CP phase on the
// sin entries; i, j are 0-based.
ComplexMatrix rot4(int i, int j, double theta, const cplx* d = nullptr) {
  ComplexMatrix m = ComplexMatrix::identity(4);
  const double c = std::cos(theta), s = std::sin(theta);
  m(i, i) = c;
  m(j, j) = c;
  if (d) {
    m(i, j) = std::conj(*d) * s;
    m(j, i) = -(*d) * s;
  } else {
    m(i, j) = s;
    m(j, i) = -s;
  }
  return m;
}

}  // namespace

ComplexMatrix u3(const MixingParams3& p) {
  const double c12 = std::cos(p.theta12), s12 = std::sin(p.theta12);
  const double c13 = std::cos(p.theta13), s13 = std::sin(p.theta13);
  const double c23 = std::cos(p.theta23), s23 = std::sin(p.theta23);
  const cplx ed = phase(p.delta);
  ComplexMatrix u(3);
  u(0, 0) = c12 * c13;
  u(0, 1) = s12 * c13;
  u(0, 2) = s13 * std::conj(ed);
  u(1, 0) = -s12 * c23 - c12 * s23 * s13 * ed;
  u(1, 1) = c12 * c23 - s12 * s23 * s13 * ed;
  u(1, 2) = s23 * c13;
  u(2, 0) = s12 * s23 - c12 * c23 * s13 * ed;
  u(2, 1) = -c12 * s23 - s12 * c23 * s13 * ed;
  u(2, 2) = c23 * c13;
  return u;
}

ComplexMatrix u3f(const MixingParams3& p) {
  ComplexMatrix u = u3(p);
  const cplx ed = phase(p.delta);
  for (int r = 0; r < 3; ++r) u(r, 2) *= ed;
  return u;
}

ComplexMatrix u4f(const MixingParams4& p) {
  const cplx d14 = phase(p.delta14);
  const cplx d23 = phase(p.delta23);
  const cplx d34 = phase(p.delta34);
  ComplexMatrix u_delta = ComplexMatrix::identity(4);
  u_delta(3, 3) = d14;
  return rot4(2, 3, p.theta34, &d34) * rot4(1, 3, p.theta24) * rot4(1, 2, p.theta23, &d23) *
         rot4(0, 3, p.theta14, &d14) * rot4(0, 2, p.theta13) * rot4(0, 1, p.theta12) * u_delta;
}

MixingParams3 maximal3() {
  return {kPi / 4, std::acos(std::sqrt(2.0 / 3.0)), kPi / 4, kPi / 2};
}

MixingParams4 maximal4(double phi) {
  MixingParams4 p;
  p.theta12 = kPi / 4;
  p.theta34 = kPi / 4;
  p.theta14 = kPi / 6;
  p.theta23 = kPi / 6;
  p.theta13 = std::acos(std::sqrt(2.0 / 3.0));
  p.theta24 = std::asin(std::sqrt(1.0 / 3.0));
  p.delta14 = phi;
  p.delta23 = kPi - phi;
  p.delta34 = phi;
  return p;
}

namespace {
double deg(double d) { return d * kPi / 180.0; }
}  // namespace

ExperimentalPreset ckm_preset() {
  ExperimentalPreset p;
  p.central = {deg(13.0), deg(0.2), deg(2.4), 1.05};
  p.sigma = {deg(0.1), deg(0.1), deg(0.1)};
  p.sigma_delta = 0.24;
  p.delta_free = false;
  return p;
}

ExperimentalPreset mnsp_preset() {
  // sin^2 central values with asymmetric errors; the spread is the larger
  // extreme propagated through arcsin(sqrt(.)), divided by 3.
  auto angle = [](double sin2) { return std::asin(std::sqrt(sin2)); };
  auto spread = [&](double sin2, double sin2_up) { return (angle(sin2_up) - angle(sin2)) / 3.0; };
  ExperimentalPreset p;
  const double s12 = 0.314, s13 = 0.008, s23 = 0.45;
  p.central = {angle(s12), angle(s13), angle(s23), 0.0};
  p.sigma = {spread(s12, s12 * 1.18), spread(s13, s13 + 0.023), spread(s23, s23 * 1.35)};
  p.delta_free = true;
  p.dm2_small = 7.92e-5;
  p.dm2_large = 2.6e-3;
  return p;
}

}  // namespace flavent
