#include "vortex/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace vortex {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError("config: " + path + ": " + what);
}

const json& require_object(const json& j, const std::string& path,
                           const std::set<std::string>& allowed,
                           const std::set<std::string>& required) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (allowed.count(key) == 0) fail(path + "." + key, "unknown key");
  }
  for (const auto& key : required) {
    if (!j.contains(key)) fail(path + "." + key, "missing required key");
  }
  return j;
}

double get_number(const json& j, const std::string& path, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  const double out = v.get<double>();
  if (!std::isfinite(out)) fail(path + "." + key, "must be finite");
  return out;
}

int get_int(const json& j, const std::string& path, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  return v.get<int>();
}

double get_positive(const json& j, const std::string& path, const std::string& key) {
  const double v = get_number(j, path, key);
  if (!(v > 0.0)) fail(path + "." + key, "must be positive");
  return v;
}

}  // namespace

SimulationConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }

  require_object(root, "$", {"electron", "tube", "sampling", "circuit", "quadrature"},
                 {"electron", "tube", "sampling", "circuit", "quadrature"});

  SimulationConfig config;

  {
    const auto& e = require_object(root.at("electron"), "electron",
                                   {"energy_ev", "oam", "waist_m"},
                                   {"energy_ev", "oam", "waist_m"});
    config.electron.kinetic_energy_ev = get_positive(e, "electron", "energy_ev");
    config.electron.oam = get_int(e, "electron", "oam");
    config.electron.waist = get_positive(e, "electron", "waist_m");
  }

  {
    const auto& t = require_object(
        root.at("tube"), "tube",
        {"radius_m", "thickness_m", "length_m", "conductivity_s_per_m", "rel_permeability"},
        {"radius_m", "thickness_m", "length_m", "conductivity_s_per_m", "rel_permeability"});
    config.tube.radius = get_positive(t, "tube", "radius_m");
    config.tube.thickness = get_positive(t, "tube", "thickness_m");
    config.tube.length = get_positive(t, "tube", "length_m");
    config.tube.conductivity = get_positive(t, "tube", "conductivity_s_per_m");
    config.tube.rel_permeability = get_positive(t, "tube", "rel_permeability");
  }

  {
    const auto& s = require_object(root.at("sampling"), "sampling",
                                   {"z_min_m", "z_max_m", "n_samples"},
                                   {"z_min_m", "z_max_m", "n_samples"});
    config.sampling.z_min_m = get_number(s, "sampling", "z_min_m");
    config.sampling.z_max_m = get_number(s, "sampling", "z_max_m");
    config.sampling.n_samples = get_int(s, "sampling", "n_samples");
    if (!(config.sampling.z_max_m > config.sampling.z_min_m)) {
      fail("sampling.z_max_m", "must exceed z_min_m");
    }
    if (config.sampling.n_samples < 3 || config.sampling.n_samples % 2 == 0) {
      fail("sampling.n_samples", "must be an odd integer >= 3");
    }
  }

  {
    const auto& c = require_object(root.at("circuit"), "circuit",
                                   {"inductance_h", "resistance_ohm"}, {"inductance_h"});
    config.circuit.inductance_h = get_number(c, "circuit", "inductance_h");
    if (config.circuit.inductance_h < 0.0) fail("circuit.inductance_h", "must be >= 0");
    if (c.contains("resistance_ohm")) {
      config.circuit.resistance_ohm = get_positive(c, "circuit", "resistance_ohm");
    }
  }

  {
    const auto& q = require_object(root.at("quadrature"), "quadrature",
                                   {"abs_tol", "rel_tol", "max_depth"},
                                   {"abs_tol", "rel_tol", "max_depth"});
    config.quadrature.abs_tol = get_positive(q, "quadrature", "abs_tol");
    config.quadrature.rel_tol = get_positive(q, "quadrature", "rel_tol");
    config.quadrature.max_depth = get_int(q, "quadrature", "max_depth");
    if (config.quadrature.max_depth < 1) fail("quadrature.max_depth", "must be >= 1");
  }

  try {
    validate(config.electron);
    validate(config.tube);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return config;
}

SimulationConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::vector<double> sample_grid(const SamplingConfig& sampling) {
  const int n = sampling.n_samples;
  std::vector<double> grid(n);
  const double lo = sampling.z_min_m;
  const double hi = sampling.z_max_m;
  if (lo == -hi) {
    // Symmetric window: build around zero so mirrored samples are exact
    // negations and the midpoint is exactly zero.
    const int mid = n / 2;
    const double step = hi / mid;
    for (int i = 0; i < n; ++i) grid[i] = (i - mid) * step;
  } else {
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) grid[i] = lo + i * step;
    grid[n - 1] = hi;
  }
  return grid;
}

}  // namespace vortex
