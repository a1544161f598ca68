#pragma once

#include <array>

#include "flavent/matrix.hpp"

namespace flavent {

/// Three-flavor mixing parameters, radians throughout.
struct MixingParams3 {
  double theta12 = 0.0;
  double theta13 = 0.0;
  double theta23 = 0.0;
  double delta = 0.0;
};

/// Four-flavor mixing parameters: six angles, three phases, radians.
struct MixingParams4 {
  double theta12 = 0.0, theta13 = 0.0, theta14 = 0.0;
  double theta23 = 0.0, theta24 = 0.0, theta34 = 0.0;
  double delta14 = 0.0, delta23 = 0.0, delta34 = 0.0;
};

/// Experimentally measured central values with Gaussian 1-sigma spreads.
struct ExperimentalPreset {
  MixingParams3 central;            // central.delta meaningful only if !delta_free
  std::array<double, 3> sigma;      // spreads for theta12, theta13, theta23
  double sigma_delta = 0.0;
  bool delta_free = false;          // true: the CP phase is undetermined
  double dm2_small = 0.0;           // eV^2 (neutrino preset only)
  double dm2_large = 0.0;           // eV^2
};

/// Standard 3x3 mixing matrix U(theta~, delta).
ComplexMatrix u3(const MixingParams3& p);

/// u3 with the third column multiplied by e^{i delta}; same entanglement row by row.
ComplexMatrix u3f(const MixingParams3& p);

/// 4x4 mixing matrix as the product U34 U24 U23 U14 U13 U12 U_delta(delta14).
ComplexMatrix u4f(const MixingParams4& p);

/// Parameter choice making all |U_ij| = 1/sqrt(3).
MixingParams3 maximal3();

/// Parameter choice making all |U_ij| = 1/2, phases tied to a single free phi.
MixingParams4 maximal4(double phi);

ExperimentalPreset ckm_preset();
ExperimentalPreset mnsp_preset();

}  // namespace flavent
