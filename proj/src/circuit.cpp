#include "vortex/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vortex {

namespace {

void check_uniform_times(const std::vector<double>& times, const char* who) {
  if (times.size() < 2) {
    throw std::invalid_argument(std::string(who) + ": need at least two samples");
  }
  const double dt = times[1] - times[0];
  if (!(dt > 0.0)) throw std::invalid_argument(std::string(who) + ": times must increase");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (std::abs(times[i] - times[i - 1] - dt) > 1e-9 * dt) {
      throw std::invalid_argument(std::string(who) + ": times must be uniformly spaced");
    }
  }
}

}  // namespace

double default_resistance(const Tube& tube) {
  validate(tube);
  return 2.0 * std::numbers::pi * tube.radius /
         (tube.conductivity * tube.thickness * tube.length);
}

double transit_time(const ElectronState& electron, const Tube& tube,
                    const PhysicalConstants& constants) {
  validate(tube);
  const Kinematics kin = kinematics_from_energy(electron, constants);
  return tube.length / kin.speed;
}

TimeTrace emf_waveform(const ElectronState& electron, const Tube& tube,
                       const std::vector<double>& times, double resistance,
                       const PhysicalConstants& constants) {
  validate(electron);
  validate(tube);
  check_uniform_times(times, "emf_waveform");
  const double transit = transit_time(electron, tube, constants);
  if (times.back() - times.front() < 5.0 * transit) {
    throw std::invalid_argument("emf_waveform: window must span at least five transit times");
  }
  const double r_circuit = resistance > 0.0 ? resistance : default_resistance(tube);
  const Kinematics kin = kinematics_from_energy(electron, constants);

  TimeTrace emf;
  emf.times = times;
  emf.values.reserve(times.size());
  for (const double t : times) {
    emf.values.push_back(current_at(electron, tube, kin.speed * t, constants) * r_circuit);
  }
  return emf;
}

TimeTrace rl_response(const TimeTrace& emf, const RlCircuit& circuit, const OdeSpec& spec,
                      std::vector<std::string>* warnings) {
  if (!(circuit.resistance > 0.0)) {
    throw std::invalid_argument("rl_response: resistance must be positive");
  }
  if (circuit.inductance < 0.0) {
    throw std::invalid_argument("rl_response: inductance must be non-negative");
  }
  check_uniform_times(emf.times, "rl_response");
  if (emf.values.size() != emf.times.size()) {
    throw std::invalid_argument("rl_response: emf arrays differ in length");
  }

  if (circuit.inductance == 0.0) {
    TimeTrace out;
    out.times = emf.times;
    out.values.reserve(emf.values.size());
    for (const double v : emf.values) out.values.push_back(v / circuit.resistance);
    return out;
  }

  const double tau = circuit.inductance / circuit.resistance;
  const double emf_dt = emf.times[1] - emf.times[0];
  if (!(emf_dt < tau)) {
    throw std::invalid_argument("rl_response: emf must be sampled finer than L/R");
  }
  if (warnings != nullptr && spec.step > 0.1 * tau) {
    warnings->push_back("rl_response: ODE step exceeds 0.1 L/R; the integration may be unstable");
  }

  auto drive = [&emf, emf_dt](double t) {
    // Linear interpolation, clamped to the end samples (the trace decays
    // to ~0 there by precondition).
    if (t <= emf.times.front()) return emf.values.front();
    if (t >= emf.times.back()) return emf.values.back();
    const double s = (t - emf.times.front()) / emf_dt;
    const auto idx = static_cast<std::size_t>(s);
    const double frac = s - static_cast<double>(idx);
    return (1.0 - frac) * emf.values[idx] + frac * emf.values[idx + 1];
  };

  const double resistance = circuit.resistance;
  const double inductance = circuit.inductance;
  const OdeTrajectory traj = solve_ode(
      [&drive, resistance, inductance](double t, double current) {
        return (drive(t) - resistance * current) / inductance;
      },
      0.0, spec);
  return {traj.times, traj.values};
}

TimeTrace autocorrelation(const TimeTrace& current, const std::vector<double>& delays,
                          std::vector<std::string>* warnings) {
  check_uniform_times(current.times, "autocorrelation");
  if (current.values.size() != current.times.size()) {
    throw std::invalid_argument("autocorrelation: arrays differ in length");
  }
  const std::size_t n = current.values.size();
  const double dt = current.times[1] - current.times[0];

  double peak = 0.0;
  for (const double v : current.values) peak = std::max(peak, std::abs(v));
  if (warnings != nullptr && peak > 0.0) {
    const double edge = std::max(std::abs(current.values.front()),
                                 std::abs(current.values.back()));
    if (edge >= 1e-6 * peak) {
      warnings->push_back("autocorrelation: trace has not decayed below 1e-6 of its peak at "
                          "the window edges; the correlation leaks");
    }
  }

  // Shifted sample by linear interpolation, zero outside the record.
  auto shifted = [&](std::ptrdiff_t k, double tau) {
    const double pos = static_cast<double>(k) - tau / dt;
    const double floor_pos = std::floor(pos);
    const auto j = static_cast<std::ptrdiff_t>(floor_pos);
    const double frac = pos - floor_pos;
    const double lo = (j >= 0 && j < static_cast<std::ptrdiff_t>(n))
                          ? current.values[static_cast<std::size_t>(j)] : 0.0;
    const double hi = (j + 1 >= 0 && j + 1 < static_cast<std::ptrdiff_t>(n))
                          ? current.values[static_cast<std::size_t>(j + 1)] : 0.0;
    return (1.0 - frac) * lo + frac * hi;
  };

  TimeTrace out;
  out.times = delays;
  out.values.reserve(delays.size());
  for (const double tau : delays) {
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double weight = (k == 0 || k == n - 1) ? 0.5 : 1.0;
      sum += weight * current.values[k] * shifted(static_cast<std::ptrdiff_t>(k), tau);
    }
    out.values.push_back(sum * dt);
  }
  return out;
}

}  // namespace vortex
