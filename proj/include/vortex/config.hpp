#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vortex/core_model.hpp"
#include "vortex/numerics.hpp"

namespace vortex {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SamplingConfig {
  double z_min_m;
  double z_max_m;
  int n_samples;  ///< >= 3 and odd, so z = 0 is on a symmetric grid
};

struct CircuitConfig {
  double inductance_h;
  std::optional<double> resistance_ohm;  ///< defaults to the tube-derived value
};

struct SimulationConfig {
  ElectronState electron;
  Tube tube;
  SamplingConfig sampling;
  CircuitConfig circuit;
  QuadratureSpec quadrature;
};

/// Strict JSON loader: every section and key of the schema is required
/// (except circuit.resistance_ohm), unknown keys are rejected, and errors
/// carry the offending key path.
SimulationConfig load_config(const std::string& path);

/// Parse a config from JSON text (same validation as load_config).
SimulationConfig parse_config(const std::string& text);

/// Electron position grid from the sampling block.  Symmetric ranges with an
/// odd count produce an exactly symmetric grid through z = 0.
std::vector<double> sample_grid(const SamplingConfig& sampling);

}  // namespace vortex
