#pragma once

#include <array>

#include "flavent/measures.hpp"
#include "flavent/mixing.hpp"

namespace flavent {

struct UnitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BracketInvalidError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// GeV-based conversion: x[GeV^-1] = x[m] / kHBarC.
inline constexpr double kHBarC = 1.9732696e-16;  // GeV * m
inline constexpr double kEV2ToGeV2 = 1e-18;

/// Beam and mixing parameters for the stationary wave-packet density matrix.
/// Energies in GeV, splittings in eV^2, distances in meters at the API surface.
struct WavePacketParams {
  double energy = 10.0;    // E, massless-limit neutrino energy (GeV)
  double sigma_p = 1.0;    // momentum spread (GeV)
  double xi = 0.0;         // production-process constant
  double dm2_21 = 0.0;     // eV^2
  double dm2_31 = 0.0;
  double dm2_32 = 0.0;
  MixingParams3 mixing;
  double hbar_c = kHBarC;

  /// sigma_p << E wanted for the relativistic expansion; informational only.
  bool narrow_packet() const { return sigma_p < 0.1 * energy; }
};

/// (dm2_21, dm2_31, dm2_32) from the solar and atmospheric splittings.
std::array<double, 3> splittings(double dm2_small, double dm2_large);

WavePacketParams default_beam(const MixingParams3& mixing);

/// Stationary beam density matrix at distance x (meters), 8x8 in the one-hot
/// three-qubit embedding. Unit trace; PSD up to roundoff.
ComplexMatrix rho_stationary(int flavor_row, double x_m, const WavePacketParams& p);

/// Space-time density matrix at (x, t), both in meters (t is c*t); the spatial
/// density prefactor is replaced by trace normalization. Exploratory API.
ComplexMatrix rho_dynamic(int flavor_row, double x_m, double t_m, const WavePacketParams& p,
                          double m1_ev = 0.0);

struct CoherenceProfile {
  std::vector<double> x;                    // meters, strictly increasing
  std::vector<Bipartition> parts;
  std::vector<std::vector<double>> curves;  // curves[p][i] over x grid
  std::vector<double> average;
};

CoherenceProfile negativity_profile(int flavor_row, const std::vector<double>& x_grid,
                                    const WavePacketParams& p, int split_size);

/// Smallest x (1% relative resolution, log-x bisection) where the average
/// 2:1 log-negativity drops to <= eps.
double decoherence_length(int flavor_row, const WavePacketParams& p, double eps = 1e-9,
                          double x_lo = 1.0, double x_hi = 1e12);

std::vector<double> log_grid(double x_lo, double x_hi, int points);

}  // namespace flavent
