#include "flavent/wavepacket.hpp"

#include <cmath>

#include "flavent/states.hpp"

namespace flavent {

std::array<double, 3> splittings(double dm2_small, double dm2_large) {
  return {dm2_small, dm2_large + 0.5 * dm2_small, dm2_large - 0.5 * dm2_small};
}

WavePacketParams default_beam(const MixingParams3& mixing) {
  WavePacketParams p;
  const ExperimentalPreset nu = mnsp_preset();
  const auto [d21, d31, d32] = splittings(nu.dm2_small, nu.dm2_large);
  p.dm2_21 = d21;
  p.dm2_31 = d31;
  p.dm2_32 = d32;
  p.mixing = mixing;
  return p;
}

namespace {

void check_units(const WavePacketParams& p) {
  if (p.energy <= 0.0 || p.sigma_p <= 0.0)
    throw UnitError("wave packet requires positive energy and momentum spread");
  if (std::abs((p.dm2_31 - p.dm2_32) - p.dm2_21) > 1e-12 * std::max(1.0, std::abs(p.dm2_21)))
    throw UnitError("inconsistent squared-mass splittings: dm2_31 - dm2_32 != dm2_21");
}

// dm2[j][k] in GeV^2, j,k 0-based mass indices.
double dm2_gev2(const WavePacketParams& p, int j, int k) {
  auto m2 = [&](int i) {  // squared mass relative to m1
    return i == 0 ? 0.0 : i == 1 ? p.dm2_21 : p.dm2_31;
  };
  return (m2(j) - m2(k)) * kEV2ToGeV2;
}

ComplexMatrix embed_mass_basis(const ComplexMatrix& mass3) {
  // 3x3 operator over mass modes -> 8x8 over the one-hot embedding
  ComplexMatrix rho(8);
  const int idx[3] = {4, 2, 1};  // |100>, |010>, |001>
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) rho(idx[j], idx[k]) = mass3(j, k);
  return rho;
}

}  // namespace

ComplexMatrix rho_stationary(int flavor_row, double x_m, const WavePacketParams& p) {
  check_units(p);
  const ComplexMatrix u = u3(p.mixing);
  const double x = x_m / p.hbar_c;          // GeV^-1
  const double sigma_x = 0.5 / p.sigma_p;   // GeV^-1
  ComplexMatrix mass(3);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      const double dm2 = dm2_gev2(p, j, k);
      const double phase = dm2 * x / (2.0 * p.energy);
      const double sep = dm2 * x / (4.0 * std::sqrt(2.0) * p.energy * p.energy * sigma_x);
      const double loc = p.xi * dm2 / (4.0 * std::sqrt(2.0) * p.energy * p.sigma_p);
      mass(j, k) = u(flavor_row - 1, j) * std::conj(u(flavor_row - 1, k)) *
                   std::exp(-sep * sep - loc * loc) * std::polar(1.0, -phase);
    }
  }
  return embed_mass_basis(mass);
}

ComplexMatrix rho_dynamic(int flavor_row, double x_m, double t_m, const WavePacketParams& p,
                          double m1_ev) {
  check_units(p);
  const ComplexMatrix u = u3(p.mixing);
  const double x = x_m / p.hbar_c;
  const double t = t_m / p.hbar_c;
  const double sigma_x = 0.5 / p.sigma_p;
  auto m2 = [&](int j) {  // GeV^2
    const double anchor = m1_ev * m1_ev * 1e-18;
    return anchor + (j == 0 ? 0.0 : j == 1 ? p.dm2_21 : p.dm2_31) * kEV2ToGeV2;
  };
  auto energy = [&](int j) { return p.energy + p.xi * m2(j) / (2.0 * p.energy); };
  // Mass-induced kinematic differences are ~20 orders below E; form them
  // analytically instead of subtracting near-equal momenta or positions.
  auto packet_lag = [&](int j) {  // x - v_j t  with  v_j = 1 - m2_j / (2 E_j^2)
    const double e = energy(j);
    return (x - t) + t * m2(j) / (2.0 * e * e);
  };
  ComplexMatrix mass(3);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      const double dm2 = m2(j) - m2(k);
      // (p_j - p_k) x - (E_j - E_k) t, with E_j - E_k = xi dm2 / 2E and
      // p_j - p_k = -(1 - xi) dm2 / 2E
      const double arg = -(p.xi * t + (1.0 - p.xi) * x) * dm2 / (2.0 * p.energy);
      const double dj = packet_lag(j);
      const double dk = packet_lag(k);
      const double damp = (dj * dj + dk * dk) / (4.0 * sigma_x * sigma_x);
      mass(j, k) = u(flavor_row - 1, j) * std::conj(u(flavor_row - 1, k)) * std::exp(-damp) *
                   std::polar(1.0, arg);
    }
  }
  const double tr = mass.trace().real();
  if (tr <= 0.0) throw UnitError("rho_dynamic: vanishing packet weight at this (x,t)");
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) mass(j, k) /= tr;
  return embed_mass_basis(mass);
}

CoherenceProfile negativity_profile(int flavor_row, const std::vector<double>& x_grid,
                                    const WavePacketParams& p, int split_size) {
  for (size_t i = 1; i < x_grid.size(); ++i)
    if (x_grid[i] <= x_grid[i - 1]) throw BadSplitError("x grid must be strictly increasing");
  CoherenceProfile out;
  out.x = x_grid;
  out.parts = bipartitions(3, split_size);
  out.curves.assign(out.parts.size(), {});
  for (double x : x_grid) {
    const MeasureReport r = average_negativity(rho_stationary(flavor_row, x, p), split_size);
    for (size_t i = 0; i < r.values.size(); ++i) out.curves[i].push_back(r.values[i]);
    out.average.push_back(r.average);
  }
  return out;
}

double decoherence_length(int flavor_row, const WavePacketParams& p, double eps, double x_lo,
                          double x_hi) {
  auto avg = [&](double x) { return average_negativity(rho_stationary(flavor_row, x, p), 2).average; };
  if (!(avg(x_lo) > eps)) throw BracketInvalidError("decoherence_length: lower bound already decohered");
  if (!(avg(x_hi) <= eps)) throw BracketInvalidError("decoherence_length: upper bound still coherent");
  double lo = std::log(x_lo), hi = std::log(x_hi);
  while (hi - lo > std::log(1.01)) {
    const double mid = 0.5 * (lo + hi);
    (avg(std::exp(mid)) <= eps ? hi : lo) = mid;
  }
  return std::exp(hi);
}

std::vector<double> log_grid(double x_lo, double x_hi, int points) {
  if (points < 2 || x_lo <= 0.0 || x_hi <= x_lo) throw BadSplitError("bad log grid parameters");
  std::vector<double> g(points);
  const double step = (std::log(x_hi) - std::log(x_lo)) / (points - 1);
  for (int i = 0; i < points; ++i) g[i] = std::exp(std::log(x_lo) + i * step);
  g.front() = x_lo;
  g.back() = x_hi;
  return g;
}

}  // namespace flavent
