#include <algorithm>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "flavent/analytic.hpp"
#include "flavent/csv.hpp"
#include "flavent/measures.hpp"
#include "flavent/mixing.hpp"
#include "flavent/rng.hpp"
#include "flavent/states.hpp"
#include "flavent/wavepacket.hpp"

namespace {

using namespace flavent;

constexpr const char* kVersion = "0.1.0";
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct OutFile {
  std::ofstream file;
  std::ostream& open(const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);  // binary: LF endings, byte-stable
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
  }
};

std::string fmt(double v) { return CsvWriter::format(v); }

// 2:1 entropies of a 3-flavor row, enumeration order (1,2;3),(1,3;2),(2,3;1).
std::vector<double> row_entropies(const ComplexMatrix& u, int row) {
  const MeasureReport r = average_entropy(flavor_state(u, row), 2);
  std::vector<double> out = r.values;
  out.push_back(r.average);
  return out;
}

int cmd_table_quark(const std::string& out_path) {
  OutFile out;
  CsvWriter csv(out.open(out_path));
  const ExperimentalPreset q = ckm_preset();
  csv.meta("version", kVersion);
  csv.meta("preset", "ckm");
  csv.meta("theta12", q.central.theta12);
  csv.meta("theta13", q.central.theta13);
  csv.meta("theta23", q.central.theta23);
  csv.meta("delta", q.central.delta);
  csv.header({"flavor", "E(d,s;b)", "E(d,b;s)", "E(s,b;d)", "average"});
  const ComplexMatrix u = u3(q.central);
  const char* labels[] = {"d'", "s'", "b'"};
  for (int row = 1; row <= 3; ++row) {
    std::vector<std::string> cells{labels[row - 1]};
    for (double v : row_entropies(u, row)) cells.push_back(fmt(v));
    csv.row(cells);
  }
  return 0;
}

int cmd_table_neutrino(int delta_grid, const std::string& out_path) {
  OutFile out;
  CsvWriter csv(out.open(out_path));
  const ExperimentalPreset nu = mnsp_preset();
  csv.meta("version", kVersion);
  csv.meta("preset", "mnsp");
  csv.meta("theta12", nu.central.theta12);
  csv.meta("theta13", nu.central.theta13);
  csv.meta("theta23", nu.central.theta23);
  csv.meta("delta_grid", static_cast<long long>(delta_grid));
  csv.header({"flavor", "E(1,2;3)_min", "E(1,2;3)_max", "E(1,3;2)_min", "E(1,3;2)_max",
              "E(2,3;1)_min", "E(2,3;1)_max", "average_min", "average_max"});
  const char* labels[] = {"e", "mu", "tau"};
  for (int row = 1; row <= 3; ++row) {
    std::vector<double> lo(4, 1e300), hi(4, -1e300);
    for (int g = 0; g < delta_grid; ++g) {
      MixingParams3 p = nu.central;
      p.delta = kTwoPi * g / delta_grid;
      const std::vector<double> vals = row_entropies(u3(p), row);
      for (int i = 0; i < 4; ++i) {
        lo[i] = std::min(lo[i], vals[i]);
        hi[i] = std::max(hi[i], vals[i]);
      }
    }
    std::vector<std::string> cells{labels[row - 1]};
    for (int i = 0; i < 4; ++i) {
      cells.push_back(fmt(lo[i]));
      cells.push_back(fmt(hi[i]));
    }
    csv.row(cells);
  }
  return 0;
}

struct SweepOpts {
  std::string preset = "maximal";
  std::string flavor = "e";
  std::string measure = "entropy";
  int n_flavors = 3;
  int split = 2;
  std::string param = "delta";
  double start = 0.0, stop = kTwoPi;
  int count = 128;
  std::string param2;
  double start2 = 0.0, stop2 = kTwoPi;
  int count2 = 2;
  std::optional<double> delta, delta14, delta23, delta34;
  std::string out_path;
};

ComplexMatrix sweep_matrix(const SweepOpts& o, double v1, double v2) {
  auto phase = [&](const std::string& name, std::optional<double> fixed, double dflt) {
    if (o.param == name) return v1;
    if (o.param2 == name) return v2;
    return fixed.value_or(dflt);
  };
  if (o.n_flavors == 3) {
    MixingParams3 p;
    if (o.preset == "maximal")
      p = maximal3();
    else if (o.preset == "ckm")
      p = ckm_preset().central;
    else if (o.preset == "mnsp")
      p = mnsp_preset().central;
    else
      throw CLI::ValidationError("unknown preset: " + o.preset);
    if (o.preset == "mnsp" && !o.delta && o.param != "delta" && o.param2 != "delta")
      throw CLI::ValidationError("mnsp preset: the CP phase is undetermined, pass --delta or sweep it");
    p.delta = phase("delta", o.delta, p.delta);
    return u3f(p);
  }
  if (o.preset != "maximal")
    throw CLI::ValidationError("4-flavor sweeps support only the maximal preset");
  MixingParams4 p = maximal4(0.0);
  p.delta14 = phase("delta14", o.delta14, 0.0);
  p.delta23 = phase("delta23", o.delta23, 0.0);
  p.delta34 = phase("delta34", o.delta34, 0.0);
  return u4f(p);
}

int cmd_sweep(const SweepOpts& o) {
  if (o.count < 2 || !(o.start < o.stop)) throw CLI::ValidationError("bad sweep axis");
  const bool two_d = !o.param2.empty();
  if (two_d && (o.count2 < 2 || !(o.start2 < o.stop2))) throw CLI::ValidationError("bad sweep axis 2");
  OutFile out;
  CsvWriter csv(out.open(o.out_path));
  csv.meta("version", kVersion);
  csv.meta("preset", o.preset);
  csv.meta("flavor", o.flavor);
  csv.meta("measure", o.measure);
  csv.meta("nflavors", static_cast<long long>(o.n_flavors));
  csv.meta("split", static_cast<long long>(o.split));
  csv.meta("param", o.param + "[" + fmt(o.start) + ":" + fmt(o.stop) + ":" + std::to_string(o.count) + "]");
  if (two_d)
    csv.meta("param2",
             o.param2 + "[" + fmt(o.start2) + ":" + fmt(o.stop2) + ":" + std::to_string(o.count2) + "]");
  const FlavorIndex flavor = parse_flavor(o.flavor, o.n_flavors);
  std::vector<std::string> cols{o.param};
  if (two_d) cols.push_back(o.param2);
  for (const Bipartition& b : bipartitions(o.n_flavors, o.split)) cols.push_back(bipartition_label(b));
  cols.push_back("average");
  csv.header(cols);
  for (int i = 0; i < o.count; ++i) {
    const double v1 = o.start + (o.stop - o.start) * i / (o.count - 1);
    for (int j = 0; j < (two_d ? o.count2 : 1); ++j) {
      const double v2 = two_d ? o.start2 + (o.stop2 - o.start2) * j / (o.count2 - 1) : 0.0;
      const PureState psi = flavor_state(sweep_matrix(o, v1, v2), flavor.row);
      const MeasureReport r = o.measure == "entropy"
                                  ? average_entropy(psi, o.split)
                                  : average_negativity(density_matrix(psi), o.split);
      std::vector<std::string> cells{fmt(v1)};
      if (two_d) cells.push_back(fmt(v2));
      for (double v : r.values) cells.push_back(fmt(v));
      cells.push_back(fmt(r.average));
      csv.row(cells);
    }
  }
  return 0;
}

struct McOpts {
  int samples = 200;
  std::uint64_t seed = 1;
  int delta_grid = 64;
  double sigma_scale = 1.0;  // multiplies the preset 1-sigma spreads
  std::string flavor = "mu";
  std::string out_path;
};

int cmd_mc(const McOpts& o) {
  if (o.samples < 1) throw CLI::ValidationError("samples must be >= 1");
  OutFile out;
  CsvWriter csv(out.open(o.out_path));
  const ExperimentalPreset nu = mnsp_preset();
  const FlavorIndex flavor = parse_flavor(o.flavor, 3);
  csv.meta("version", kVersion);
  csv.meta("preset", "mnsp");
  csv.meta("flavor", o.flavor);
  csv.meta("samples", static_cast<long long>(o.samples));
  csv.meta("seed", static_cast<long long>(o.seed));
  csv.meta("sigma_scale", o.sigma_scale);
  csv.meta("delta_grid", static_cast<long long>(o.delta_grid));

  // angle draws are per sample, shared across the delta grid
  std::vector<MixingParams3> draws(o.samples, nu.central);
  for (int s = 0; s < o.samples; ++s) {
    SplitMix64 rng = sample_stream(o.seed, static_cast<std::uint64_t>(s));
    auto truncated = [&](double center, double sigma) {
      for (int attempt = 0; attempt < 100; ++attempt) {
        const double v = center + o.sigma_scale * sigma * rng.normal();
        if (v >= 0.0 && v <= std::numbers::pi / 2.0) return v;
      }
      throw std::runtime_error("angle rejection sampling failed 100 times");
    };
    draws[s].theta12 = truncated(nu.central.theta12, nu.sigma[0]);
    draws[s].theta13 = truncated(nu.central.theta13, nu.sigma[1]);
    draws[s].theta23 = truncated(nu.central.theta23, nu.sigma[2]);
  }

  std::vector<std::string> cols{"delta"};
  std::vector<Bipartition> parts = bipartitions(3, 2);
  for (size_t b = 0; b <= parts.size(); ++b) {
    const std::string tag = b < parts.size() ? bipartition_label(parts[b]) : "average";
    for (const char* stat : {"central", "mean", "min", "max", "p16", "p84"})
      cols.push_back(tag + "_" + stat);
  }
  csv.header(cols);

  auto percentile = [](std::vector<double> v, double q) {
    std::sort(v.begin(), v.end());
    const size_t idx = static_cast<size_t>(std::llround(q * (v.size() - 1)));
    return v[idx];
  };

  for (int g = 0; g < o.delta_grid; ++g) {
    const double delta = kTwoPi * g / o.delta_grid;
    MixingParams3 central = nu.central;
    central.delta = delta;
    const std::vector<double> cvals = row_entropies(u3(central), flavor.row);
    std::vector<std::vector<double>> samples(4);
    for (const MixingParams3& d : draws) {
      MixingParams3 p = d;
      p.delta = delta;
      const std::vector<double> vals = row_entropies(u3(p), flavor.row);
      for (int i = 0; i < 4; ++i) samples[i].push_back(vals[i]);
    }
    std::vector<std::string> cells{fmt(delta)};
    for (int i = 0; i < 4; ++i) {
      const std::vector<double>& v = samples[i];
      const double mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
      cells.push_back(fmt(cvals[i]));
      cells.push_back(fmt(mean));
      cells.push_back(fmt(*std::min_element(v.begin(), v.end())));
      cells.push_back(fmt(*std::max_element(v.begin(), v.end())));
      cells.push_back(fmt(percentile(v, 0.16)));
      cells.push_back(fmt(percentile(v, 0.84)));
    }
    csv.row(cells);
  }
  return 0;
}

struct BeamOpts {
  std::string flavor = "e";
  std::optional<double> delta;
  double energy = 10.0, sigma_p = 1.0, xi = 0.0;
  double dm2_small = 7.92e-5, dm2_large = 2.6e-3;
  double x_lo = 1.0, x_hi = 1e12;
  int points = 120;
  int split = 2;
  double epsilon = 1e-9;
  std::string out_path;

  WavePacketParams params() const {
    if (!delta) throw CLI::ValidationError("the CP phase is undetermined, pass --delta explicitly");
    MixingParams3 mix = mnsp_preset().central;
    mix.delta = *delta;
    WavePacketParams p = default_beam(mix);
    p.energy = energy;
    p.sigma_p = sigma_p;
    p.xi = xi;
    const auto [d21, d31, d32] = splittings(dm2_small, dm2_large);
    p.dm2_21 = d21;
    p.dm2_31 = d31;
    p.dm2_32 = d32;
    return p;
  }

  void describe(CsvWriter& csv) const {
    csv.meta("version", kVersion);
    csv.meta("flavor", flavor);
    csv.meta("delta", delta.value_or(0.0));
    csv.meta("energy_gev", energy);
    csv.meta("sigma_p_gev", sigma_p);
    csv.meta("xi", xi);
    csv.meta("dm2_small_ev2", dm2_small);
    csv.meta("dm2_large_ev2", dm2_large);
  }
};

int cmd_wavepacket(const BeamOpts& o) {
  OutFile out;
  CsvWriter csv(out.open(o.out_path));
  o.describe(csv);
  csv.meta("x_lo_m", o.x_lo);
  csv.meta("x_hi_m", o.x_hi);
  csv.meta("points", static_cast<long long>(o.points));
  const FlavorIndex flavor = parse_flavor(o.flavor, 3);
  const CoherenceProfile prof =
      negativity_profile(flavor.row, log_grid(o.x_lo, o.x_hi, o.points), o.params(), o.split);
  std::vector<std::string> cols{"x_m"};
  for (const Bipartition& b : prof.parts) cols.push_back("EN" + bipartition_label(b));
  cols.push_back("average");
  csv.header(cols);
  for (size_t i = 0; i < prof.x.size(); ++i) {
    std::vector<std::string> cells{fmt(prof.x[i])};
    for (const std::vector<double>& curve : prof.curves) cells.push_back(fmt(curve[i]));
    cells.push_back(fmt(prof.average[i]));
    csv.row(cells);
  }
  return 0;
}

int cmd_decoherence(const BeamOpts& o) {
  OutFile out;
  CsvWriter csv(out.open(o.out_path));
  o.describe(csv);
  csv.meta("epsilon", o.epsilon);
  csv.meta("x_lo_m", o.x_lo);
  csv.meta("x_hi_m", o.x_hi);
  const FlavorIndex flavor = parse_flavor(o.flavor, 3);
  const double L = decoherence_length(flavor.row, o.params(), o.epsilon, o.x_lo, o.x_hi);
  csv.header({"L_decoh_m", "L_decoh_km"});
  csv.row({fmt(L), fmt(L / 1000.0)});
  return 0;
}

void add_beam_flags(CLI::App* cmd, BeamOpts& o) {
  cmd->add_option("--flavor", o.flavor, "neutrino flavor: e|mu|tau");
  auto* d = cmd->add_option("--delta", o.delta, "CP-violating phase (radians, required)");
  d->required();
  cmd->add_option("--energy", o.energy, "beam energy E (GeV)");
  cmd->add_option("--sigma-p", o.sigma_p, "momentum spread (GeV)");
  cmd->add_option("--xi", o.xi, "production-process constant");
  cmd->add_option("--dm2-small", o.dm2_small, "solar splitting (eV^2)");
  cmd->add_option("--dm2-large", o.dm2_large, "atmospheric splitting (eV^2)");
  cmd->add_option("--out", o.out_path, "output CSV path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flavor-mixing entanglement toolkit"};
  app.require_subcommand(1);

  std::string tq_out, tn_out;
  int tn_grid = 256;
  auto* tq = app.add_subcommand("table-quark", "2:1 entropies of the CKM flavor states");
  tq->add_option("--out", tq_out, "output CSV path (default stdout)");
  auto* tn = app.add_subcommand("table-neutrino", "2:1 entropy ranges of the MNSP flavor states");
  tn->add_option("--delta-grid", tn_grid, "CP-phase grid size (>= 64)")
      ->check(CLI::Range(64, 1 << 20));
  tn->add_option("--out", tn_out, "output CSV path (default stdout)");

  SweepOpts sweep;
  auto* sw = app.add_subcommand("sweep", "phase sweeps of entanglement measures");
  sw->add_option("--preset", sweep.preset, "maximal|ckm|mnsp");
  sw->add_option("--flavor", sweep.flavor, "flavor label (e|mu|tau|s, d|s|b for ckm)");
  sw->add_option("--measure", sweep.measure, "entropy|negativity")
      ->check(CLI::IsMember({"entropy", "negativity"}));
  sw->add_option("--nflavors", sweep.n_flavors, "3 or 4")->check(CLI::IsMember({3, 4}));
  sw->add_option("-n,--split", sweep.split, "bipartition size n");
  sw->add_option("--param", sweep.param, "swept phase: delta|delta14|delta23|delta34");
  sw->add_option("--start", sweep.start, "axis start (radians)");
  sw->add_option("--stop", sweep.stop, "axis stop (radians)");
  sw->add_option("--count", sweep.count, "axis point count (>= 2)");
  sw->add_option("--param2", sweep.param2, "optional second swept phase");
  sw->add_option("--start2", sweep.start2, "second axis start");
  sw->add_option("--stop2", sweep.stop2, "second axis stop");
  sw->add_option("--count2", sweep.count2, "second axis point count");
  sw->add_option("--delta", sweep.delta, "fixed CP phase (3-flavor)");
  sw->add_option("--delta14", sweep.delta14, "fixed delta14 (4-flavor)");
  sw->add_option("--delta23", sweep.delta23, "fixed delta23 (4-flavor)");
  sw->add_option("--delta34", sweep.delta34, "fixed delta34 (4-flavor)");
  sw->add_option("--out", sweep.out_path, "output CSV path (default stdout)");

  McOpts mc;
  auto* mcc = app.add_subcommand("mc", "Gaussian Monte Carlo over the MNSP angles");
  mcc->add_option("--samples", mc.samples, "number of angle draws");
  mcc->add_option("--seed", mc.seed, "RNG seed");
  mcc->add_option("--delta-grid", mc.delta_grid, "CP-phase grid size");
  mcc->add_option("--sigma-scale", mc.sigma_scale, "multiplier on the 1-sigma spreads");
  mcc->add_option("--flavor", mc.flavor, "flavor label e|mu|tau");
  mcc->add_option("--out", mc.out_path, "output CSV path (default stdout)");

  BeamOpts wp, dl;
  auto* wpc = app.add_subcommand("wavepacket", "negativity-vs-distance profile of a beam");
  add_beam_flags(wpc, wp);
  wpc->add_option("--xmin", wp.x_lo, "grid start (m)");
  wpc->add_option("--xmax", wp.x_hi, "grid stop (m)");
  wpc->add_option("--points", wp.points, "log-grid point count");
  wpc->add_option("-n,--split", wp.split, "bipartition size n");
  auto* dlc = app.add_subcommand("decoherence-length", "distance where the beam entanglement vanishes");
  add_beam_flags(dlc, dl);
  dlc->add_option("--epsilon", dl.epsilon, "vanishing threshold");
  dlc->add_option("--xlo", dl.x_lo, "bracket lower bound (m)");
  dlc->add_option("--xhi", dl.x_hi, "bracket upper bound (m)");

  try {
    app.parse(argc, argv);
    if (tq->parsed()) return cmd_table_quark(tq_out);
    if (tn->parsed()) return cmd_table_neutrino(tn_grid, tn_out);
    if (sw->parsed()) return cmd_sweep(sweep);
    if (mcc->parsed()) return cmd_mc(mc);
    if (wpc->parsed()) return cmd_wavepacket(wp);
    if (dlc->parsed()) return cmd_decoherence(dl);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
