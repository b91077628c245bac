#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vortex/circuit.hpp"
#include "vortex/complementarity.hpp"
#include "vortex/config.hpp"
#include "vortex/csv.hpp"
#include "vortex/induction.hpp"

namespace {

using namespace vortex;

struct CommonOpts {
  std::string config_path;
  std::string output_path;
  bool human = false;
};

void add_common(CLI::App* sub, CommonOpts& opts, bool config_required) {
  auto* config = sub->add_option("--config", opts.config_path, "JSON configuration file");
  if (config_required) config->required();
  sub->add_option("--output", opts.output_path, "write the CSV here instead of stdout");
  sub->add_flag("--human", opts.human, "append pA/um/ps convenience columns");
}

void emit(const CsvTable& table, const CommonOpts& opts) {
  if (opts.output_path.empty()) {
    write_csv(table, std::cout);
    return;
  }
  std::ofstream out(opts.output_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + opts.output_path + "'");
  write_csv(table, out);
}

void warn_on_narrow_tube(const SimulationConfig& config, const std::vector<int>& oams) {
  for (const int l : oams) {
    ElectronState electron = config.electron;
    electron.oam = l;
    if (!tube_radius_adequate(config.tube, loop_model(electron, PhysicalConstants::codata2018()))) {
      std::cerr << "warning: tube radius is below 5x the beam ring radius for oam=" << l
                << "; the localized-loop model degrades\n";
    }
  }
}

std::vector<double> circuit_times(const SimulationConfig& config, double transits) {
  const double transit =
      transit_time(config.electron, config.tube, PhysicalConstants::codata2018());
  const int n = config.sampling.n_samples;
  const int mid = n / 2;
  const double step = transits * transit / mid;
  std::vector<double> times(n);
  for (int i = 0; i < n; ++i) times[i] = (i - mid) * step;
  return times;
}

std::string oam_column(const std::string& base, int l, bool single) {
  return single ? base : base + "_l" + std::to_string(l);
}

int run_current(const CommonOpts& opts, const std::vector<int>& oam_list) {
  const SimulationConfig config = load_config(opts.config_path);
  const bool single = oam_list.empty();
  const std::vector<int> oams = single ? std::vector<int>{config.electron.oam} : oam_list;
  warn_on_narrow_tube(config, oams);

  const std::vector<double> grid = sample_grid(config.sampling);
  std::vector<CurrentTrace> traces;
  traces.reserve(oams.size());
  for (const int l : oams) {
    ElectronState electron = config.electron;
    electron.oam = l;
    traces.push_back(current_trace(electron, config.tube, grid, config.quadrature));
  }

  CsvTable table;
  table.header.push_back("z_m");
  for (const int l : oams) table.header.push_back(oam_column("current_A", l, single));
  if (opts.human) {
    table.header.push_back("z_um");
    for (const int l : oams) table.header.push_back(oam_column("current_pA", l, single));
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<std::string> row;
    row.push_back(format_double(grid[i]));
    for (const auto& trace : traces) row.push_back(format_double(trace.currents[i]));
    if (opts.human) {
      row.push_back(format_double(grid[i] * 1e6));
      for (const auto& trace : traces) row.push_back(format_double(trace.currents[i] * 1e12));
    }
    table.append_row(std::move(row));
  }
  emit(table, opts);
  return 0;
}

int run_energy_loss(const CommonOpts& opts, const std::vector<int>& oam_list) {
  const SimulationConfig config = load_config(opts.config_path);
  const std::vector<int> oams =
      oam_list.empty() ? std::vector<int>{config.electron.oam} : oam_list;
  warn_on_narrow_tube(config, oams);

  CsvTable table;
  table.header = {"oam", "delta_e_ev"};
  for (const int l : oams) {
    ElectronState electron = config.electron;
    electron.oam = l;
    const EnergyLoss loss = energy_loss(electron, config.tube, config.quadrature);
    if (loss.window_warning) {
      std::cerr << "warning: energy-loss outer window still contributes at its edges\n";
    }
    table.append_row({format_int(l), format_double(loss.sign * loss.magnitude_ev)});
  }
  emit(table, opts);
  return 0;
}

int run_field_map(const CommonOpts& opts, double electron_z, int grid_nr, int grid_nz,
                  int rings) {
  const SimulationConfig config = load_config(opts.config_path);
  warn_on_narrow_tube(config, {config.electron.oam});

  const double a = config.tube.radius;
  const double half_len = 0.5 * config.tube.length;
  std::vector<double> r_axis(grid_nr);
  std::vector<double> z_axis(grid_nz);
  for (int i = 0; i < grid_nr; ++i) r_axis[i] = 2.5 * a * i / (grid_nr - 1);
  const double z_extent = half_len + 2.0 * a;
  for (int i = 0; i < grid_nz; ++i) {
    z_axis[i] = -z_extent + 2.0 * z_extent * i / (grid_nz - 1);
  }

  const FieldGrid grid =
      field_energy_map(config.electron, config.tube, electron_z, r_axis, z_axis, rings);

  CsvTable table;
  table.header = {"r_m", "z_m", "energy_density_j_per_m3"};
  if (opts.human) {
    table.header.push_back("r_um");
    table.header.push_back("z_um");
  }
  for (std::size_t ir = 0; ir < grid.r_axis.size(); ++ir) {
    for (std::size_t iz = 0; iz < grid.z_axis.size(); ++iz) {
      std::vector<std::string> row{format_double(grid.r_axis[ir]),
                                   format_double(grid.z_axis[iz]),
                                   format_double(grid.at(ir, iz))};
      if (opts.human) {
        row.push_back(format_double(grid.r_axis[ir] * 1e6));
        row.push_back(format_double(grid.z_axis[iz] * 1e6));
      }
      table.append_row(std::move(row));
    }
  }
  emit(table, opts);
  return 0;
}

int run_circuit(const CommonOpts& opts, const std::vector<double>& inductance_ph) {
  const SimulationConfig config = load_config(opts.config_path);
  warn_on_narrow_tube(config, {config.electron.oam});

  const bool single = inductance_ph.empty();
  std::vector<double> inductances;  // H
  std::vector<std::string> labels;
  if (single) {
    inductances.push_back(config.circuit.inductance_h);
    labels.push_back("current_A");
  } else {
    for (const double ph : inductance_ph) {
      inductances.push_back(ph * 1e-12);
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%g", ph);
      labels.push_back(std::string("current_A_") + buf + "pH");
    }
  }

  const double resistance =
      config.circuit.resistance_ohm.value_or(default_resistance(config.tube));
  const std::vector<double> times = circuit_times(config, 10.0);
  const TimeTrace emf = emf_waveform(config.electron, config.tube, times, resistance);

  // RK4 substeps: ten per output sample.
  const int substeps = 10;
  const double span = times.back() - times.front();
  const OdeSpec ode{span / ((times.size() - 1) * substeps), times.front(), times.back()};

  std::vector<std::vector<double>> currents;
  for (const double inductance : inductances) {
    const RlCircuit circuit{resistance, inductance};
    std::vector<std::string> warnings;
    const TimeTrace response = rl_response(emf, circuit, ode, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    if (inductance == 0.0) {
      currents.push_back(response.values);
    } else {
      std::vector<double> sampled(times.size());
      for (std::size_t i = 0; i < times.size(); ++i) sampled[i] = response.values[i * substeps];
      currents.push_back(std::move(sampled));
    }
  }

  CsvTable table;
  table.header = {"t_s", "emf_v"};
  for (const auto& label : labels) table.header.push_back(label);
  if (opts.human) {
    table.header.push_back("t_ps");
    for (const auto& label : labels) table.header.push_back(label + "_pA");
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    std::vector<std::string> row{format_double(times[i]), format_double(emf.values[i])};
    for (const auto& column : currents) row.push_back(format_double(column[i]));
    if (opts.human) {
      row.push_back(format_double(times[i] * 1e12));
      for (const auto& column : currents) row.push_back(format_double(column[i] * 1e12));
    }
    table.append_row(std::move(row));
  }
  emit(table, opts);
  return 0;
}

int run_autocorr(const CommonOpts& opts, const std::vector<int>& oam_list) {
  const SimulationConfig config = load_config(opts.config_path);
  const bool single = oam_list.empty();
  const std::vector<int> oams = single ? std::vector<int>{config.electron.oam} : oam_list;
  warn_on_narrow_tube(config, oams);

  const double resistance =
      config.circuit.resistance_ohm.value_or(default_resistance(config.tube));
  // The induced pulse only decays like z^-3, so the correlation window is
  // wider than the RL one to push edge leakage below 1e-6 of the peak.
  const std::vector<double> times = circuit_times(config, 50.0);
  const double dt = times[1] - times[0];
  const int mid = static_cast<int>(times.size()) / 2;
  std::vector<double> delays(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    delays[i] = (static_cast<int>(i) - mid) * dt;
  }

  auto signal_for = [&](int l) {
    ElectronState electron = config.electron;
    electron.oam = l;
    const TimeTrace emf = emf_waveform(electron, config.tube, times, resistance);
    TimeTrace current;
    current.times = times;
    current.values.reserve(emf.values.size());
    for (const double v : emf.values) current.values.push_back(v / resistance);
    return current;
  };

  // Normalization reference: C_1(0).
  std::vector<std::string> warnings;
  const TimeTrace reference = autocorrelation(signal_for(1), {0.0}, &warnings);
  const double c1_zero = reference.values[0];

  std::vector<TimeTrace> correlations;
  for (const int l : oams) {
    correlations.push_back(autocorrelation(signal_for(l), delays, &warnings));
  }
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';

  CsvTable table;
  table.header = {"tau_s"};
  for (const int l : oams) table.header.push_back(oam_column("c_norm", l, single));
  if (opts.human) table.header.push_back("tau_ps");
  for (std::size_t i = 0; i < delays.size(); ++i) {
    std::vector<std::string> row{format_double(delays[i])};
    for (const auto& corr : correlations) row.push_back(format_double(corr.values[i] / c1_zero));
    if (opts.human) row.push_back(format_double(delays[i] * 1e12));
    table.append_row(std::move(row));
  }
  emit(table, opts);
  return 0;
}

int run_offset(const CommonOpts& opts, double offset_max, const std::vector<int>& oam_list) {
  const SimulationConfig config = load_config(opts.config_path);
  const std::vector<int> requested =
      oam_list.empty() ? std::vector<int>{config.electron.oam} : oam_list;
  warn_on_narrow_tube(config, requested);

  // The ratio column is taken against oam = 1, so the scan always includes it.
  std::vector<int> scan_oams{1};
  for (const int l : requested) {
    if (std::find(scan_oams.begin(), scan_oams.end(), l) == scan_oams.end()) {
      scan_oams.push_back(l);
    }
  }

  const double d_max = offset_max > 0.0 ? offset_max : 0.5 * config.tube.radius;
  const int n_offsets = 21;
  std::vector<double> offsets(n_offsets);
  for (int i = 0; i < n_offsets; ++i) offsets[i] = d_max * i / (n_offsets - 1);

  const OffsetScanResult scan =
      offset_scan(config.electron, config.tube, offsets, scan_oams);

  CsvTable table;
  table.header = {"offset_m", "oam", "peak_current_A", "ratio_to_l1"};
  if (opts.human) {
    table.header.push_back("offset_um");
    table.header.push_back("peak_current_pA");
  }
  for (std::size_t io = 0; io < offsets.size(); ++io) {
    for (const int l : requested) {
      const std::size_t il = static_cast<std::size_t>(
          std::find(scan_oams.begin(), scan_oams.end(), l) - scan_oams.begin());
      const double peak = scan.peak_currents[scan.index(io, il)];
      const double ratio = scan.ratios[scan.index(io, il)];
      std::vector<std::string> row{format_double(offsets[io]), format_int(l),
                                   format_double(peak), format_double(ratio)};
      if (opts.human) {
        row.push_back(format_double(offsets[io] * 1e6));
        row.push_back(format_double(peak * 1e12));
      }
      table.append_row(std::move(row));
    }
  }
  emit(table, opts);
  return 0;
}

int run_visibility(const CommonOpts& opts, const std::vector<double>& lambda_list, double delta,
                   int dim) {
  std::vector<double> lambdas = lambda_list;
  if (lambdas.empty()) {
    for (int i = 0; i <= 20; ++i) lambdas.push_back(0.1 * i);
  }

  CsvTable table;
  table.header = {"alpha_re", "alpha_im", "visibility", "purity"};
  for (const double lambda : lambdas) {
    const CircuitQuantumState state = coherent_circuit_state(lambda, dim);
    const std::complex<double> alpha = alpha_coefficient(state, state);
    const ReducedDensityMatrix rho = reduced_density(PathState::balanced(delta), state, state);
    table.append_row({format_double(alpha.real()), format_double(alpha.imag()),
                      format_double(visibility(rho)), format_double(purity(rho))});
  }
  emit(table, opts);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eddy currents induced by an OAM-carrying electron in a conductive tube"};
  app.require_subcommand(1);

  CommonOpts current_opts;
  std::vector<int> current_oams;
  auto* current = app.add_subcommand("current", "Induced current vs electron position");
  add_common(current, current_opts, true);
  current->add_option("--oam-list", current_oams, "comma separated OAM values")->delimiter(',');

  CommonOpts loss_opts;
  std::vector<int> loss_oams;
  auto* loss = app.add_subcommand("energy-loss", "Electron energy lost to the eddy currents");
  add_common(loss, loss_opts, true);
  loss->add_option("--oam-list", loss_oams, "comma separated OAM values")->delimiter(',');

  CommonOpts map_opts;
  double electron_z = 0.0;
  int grid_nr = 101;
  int grid_nz = 121;
  int rings = 256;
  auto* map = app.add_subcommand("field-map", "Magnetic energy density of the eddy currents");
  add_common(map, map_opts, true);
  map->add_option("--electron-z", electron_z, "electron position relative to the tube centre, m");
  map->add_option("--grid-nr", grid_nr, "radial grid points")->check(CLI::Range(2, 200));
  map->add_option("--grid-nz", grid_nz, "axial grid points")->check(CLI::Range(2, 200));
  map->add_option("--rings", rings, "tube discretization (>= 200)");

  CommonOpts circuit_opts;
  std::vector<double> inductance_ph;
  auto* circuit = app.add_subcommand("circuit", "Series RL readout of the induced EMF");
  add_common(circuit, circuit_opts, true);
  circuit->add_option("--inductance-list", inductance_ph, "comma separated inductances, pH")
      ->delimiter(',');

  CommonOpts autocorr_opts;
  std::vector<int> autocorr_oams;
  auto* autocorr = app.add_subcommand("autocorr", "Autocorrelation of the induced current");
  add_common(autocorr, autocorr_opts, true);
  autocorr->add_option("--oam-list", autocorr_oams, "comma separated OAM values")->delimiter(',');

  CommonOpts offset_opts;
  double offset_max = 0.0;
  std::vector<int> offset_oams;
  auto* offset = app.add_subcommand("offset", "Peak current vs transverse beam offset");
  add_common(offset, offset_opts, true);
  offset->add_option("--offset-max", offset_max, "largest offset, m (default 0.5 radius)");
  offset->add_option("--oam-list", offset_oams, "comma separated OAM values")->delimiter(',');

  CommonOpts vis_opts;
  std::vector<double> lambda_list;
  double delta = 0.0;
  int dim = 16;
  auto* vis = app.add_subcommand("visibility", "Which-path coupling vs fringe visibility");
  add_common(vis, vis_opts, false);
  vis->add_option("--lambda-list", lambda_list, "comma separated coupling strengths")
      ->delimiter(',');
  vis->add_option("--delta", delta, "relative path phase, rad");
  vis->add_option("--dim", dim, "circuit Hilbert space dimension")->check(CLI::Range(1, 4096));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 64;
  }

  try {
    if (current->parsed()) return run_current(current_opts, current_oams);
    if (loss->parsed()) return run_energy_loss(loss_opts, loss_oams);
    if (map->parsed()) return run_field_map(map_opts, electron_z, grid_nr, grid_nz, rings);
    if (circuit->parsed()) return run_circuit(circuit_opts, inductance_ph);
    if (autocorr->parsed()) return run_autocorr(autocorr_opts, autocorr_oams);
    if (offset->parsed()) return run_offset(offset_opts, offset_max, offset_oams);
    if (vis->parsed()) return run_visibility(vis_opts, lambda_list, delta, dim);
  } catch (const vortex::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const vortex::NonConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
