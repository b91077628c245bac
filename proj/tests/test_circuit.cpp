#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "vortex/circuit.hpp"

using namespace vortex;

namespace {

const PhysicalConstants& kConst = PhysicalConstants::codata2018();
const ElectronState kElectron{1.0e5, 1, 5.0e-8};
const Tube kTube{1.0e-5, 1.0e-6, 2.0e-5, 9.43e6, 1.0};

std::vector<double> window(double transits, int n) {
  const double transit = transit_time(kElectron, kTube);
  std::vector<double> times(n);
  const int mid = n / 2;
  const double step = transits * transit / mid;
  for (int i = 0; i < n; ++i) times[i] = (i - mid) * step;
  return times;
}

double peak_abs(const std::vector<double>& values) {
  double peak = 0.0;
  for (const double v : values) peak = std::max(peak, std::abs(v));
  return peak;
}

/// 1/e decay time of the post-exit pulse, measured from its late |I| maximum.
/// The search starts half a transit after the exit so the zero crossing of
/// the inductive responses (which sits at the exit itself) is skipped.
double decay_time(const TimeTrace& trace, double t_search) {
  std::size_t start = 0;
  while (start + 1 < trace.times.size() && trace.times[start] < t_search) ++start;
  std::size_t peak = start;
  for (std::size_t i = start; i < trace.times.size(); ++i) {
    if (std::abs(trace.values[i]) > std::abs(trace.values[peak])) peak = i;
  }
  const double reference = std::abs(trace.values[peak]) / std::exp(1.0);
  for (std::size_t i = peak + 1; i < trace.times.size(); ++i) {
    if (std::abs(trace.values[i]) <= reference) return trace.times[i] - trace.times[peak];
  }
  return trace.times.back() - trace.times[peak];
}

}  // namespace

TEST_CASE("default_resistance: azimuthal conductor value") {
  CHECK(default_resistance(kTube) ==
        doctest::Approx(2.0 * oracle::kPi * kTube.radius /
                        (kTube.conductivity * kTube.thickness * kTube.length)));
}

TEST_CASE("transit_time: a tenth of a picosecond at 100 keV") {
  const double transit = transit_time(kElectron, kTube);
  CHECK(transit > 0.08e-12);
  CHECK(transit < 0.16e-12);
}

TEST_CASE("emf_waveform: odd pulse crossing zero at the mid-plane") {
  const TimeTrace emf = emf_waveform(kElectron, kTube, window(10.0, 801));
  CHECK(emf.values[400] == 0.0);
  for (std::size_t i = 0; i < emf.values.size(); ++i) {
    CHECK(std::abs(emf.values[i] + emf.values[emf.values.size() - 1 - i]) <=
          1e-12 * peak_abs(emf.values));
  }
  CHECK_THROWS_AS(emf_waveform(kElectron, kTube, window(2.0, 101)), std::invalid_argument);
}

TEST_CASE("rl_response: zero inductance degenerates to emf over R") {
  const TimeTrace emf = emf_waveform(kElectron, kTube, window(10.0, 501));
  const double resistance = default_resistance(kTube);
  const TimeTrace response =
      rl_response(emf, {resistance, 0.0}, {1e-15, emf.times.front(), emf.times.back()});
  REQUIRE(response.values.size() == emf.values.size());
  for (std::size_t i = 0; i < emf.values.size(); ++i) {
    CHECK(response.values[i] == emf.values[i] / resistance);
  }
}

TEST_CASE("rl_response: charge balance for the resistive tube") {
  const TimeTrace emf = emf_waveform(kElectron, kTube, window(10.0, 2001));
  const double resistance = default_resistance(kTube);
  const TimeTrace response =
      rl_response(emf, {resistance, 0.0}, {1e-15, emf.times.front(), emf.times.back()});
  const double dt = response.times[1] - response.times[0];
  double net = 0.0, gross = 0.0;
  for (const double v : response.values) {
    net += v * dt;
    gross += std::abs(v) * dt;
  }
  CHECK(std::abs(net) <= 1e-10 * gross);
}

TEST_CASE("rl_response: inductance trades amplitude for duration") {
  const TimeTrace emf = emf_waveform(kElectron, kTube, window(10.0, 2001));
  const double resistance = default_resistance(kTube);
  const OdeSpec ode{(emf.times.back() - emf.times.front()) / 20000.0, emf.times.front(),
                    emf.times.back()};
  const double t_search = transit_time(kElectron, kTube);

  double previous_peak = std::numeric_limits<double>::infinity();
  double previous_decay = 0.0;
  for (const double ph : {0.0, 0.05, 0.1, 0.2}) {
    const RlCircuit circuit{resistance, ph * 1e-12};
    const TimeTrace response = rl_response(emf, circuit, ode);
    const double peak = peak_abs(response.values);
    const double decay = decay_time(response, t_search);
    CHECK(peak < previous_peak);
    CHECK(decay > previous_decay);
    previous_peak = peak;
    previous_decay = decay;
  }
}

TEST_CASE("rl_response: currents stay proportional to the OAM index") {
  const std::vector<double> times = window(10.0, 1001);
  const double resistance = default_resistance(kTube);
  const OdeSpec ode{(times.back() - times.front()) / 20000.0, times.front(), times.back()};
  const RlCircuit circuit{resistance, 0.1e-12};

  const TimeTrace base = rl_response(emf_waveform(kElectron, kTube, times), circuit, ode);
  const double base_peak = peak_abs(base.values);
  for (int l : {5, 10}) {
    ElectronState electron = kElectron;
    electron.oam = l;
    const TimeTrace scaled = rl_response(emf_waveform(electron, kTube, times), circuit, ode);
    for (std::size_t i = 0; i < scaled.values.size(); ++i) {
      CHECK(std::abs(scaled.values[i] / l - base.values[i]) <= 1e-9 * base_peak);
    }
  }
}

TEST_CASE("rl_response: RK4 peak converges under step halving") {
  const std::vector<double> times = window(10.0, 1001);
  const double resistance = default_resistance(kTube);
  const RlCircuit circuit{resistance, 0.1e-12};
  const double span = times.back() - times.front();
  const TimeTrace emf = emf_waveform(kElectron, kTube, times);
  const double coarse =
      peak_abs(rl_response(emf, circuit, {span / 20000.0, times.front(), times.back()}).values);
  const double fine =
      peak_abs(rl_response(emf, circuit, {span / 40000.0, times.front(), times.back()}).values);
  CHECK(std::abs(coarse - fine) <= 1e-6 * fine);
}

TEST_CASE("rl_response: validation and stability warning") {
  const TimeTrace emf = emf_waveform(kElectron, kTube, window(10.0, 501));
  const OdeSpec ode{(emf.times.back() - emf.times.front()) / 20000.0, emf.times.front(),
                    emf.times.back()};
  CHECK_THROWS_AS(rl_response(emf, {0.0, 1e-12}, ode), std::invalid_argument);
  CHECK_THROWS_AS(rl_response(emf, {1.0, -1e-12}, ode), std::invalid_argument);
  // EMF sampled coarser than L/R.
  const double dt_emf = emf.times[1] - emf.times[0];
  CHECK_THROWS_AS(rl_response(emf, {1e6, dt_emf * 0.5}, ode), std::invalid_argument);

  std::vector<std::string> warnings;
  const double resistance = default_resistance(kTube);
  const double tau = 0.1e-12 / resistance;
  const OdeSpec coarse{0.2 * tau, emf.times.front(), emf.times.back()};
  rl_response(emf, {resistance, 0.1e-12}, coarse, &warnings);
  CHECK_FALSE(warnings.empty());
}

TEST_CASE("dissipated energy agrees with the field-drag route within an order") {
  // Lumped I^2 R underestimates the distributed ring dissipation, but the two
  // stay within a small factor of each other (Cauchy-Schwarz puts the
  // distributed result above the lumped one).
  const ElectronState electron{1e5, 100, 5e-8};
  const TimeTrace emf = emf_waveform(electron, kTube, window(30.0, 4001));
  const double resistance = default_resistance(kTube);
  const TimeTrace response =
      rl_response(emf, {resistance, 0.0}, {1e-15, emf.times.front(), emf.times.back()});
  const double dt = response.times[1] - response.times[0];
  double dissipated = 0.0;
  for (const double i : response.values) dissipated += i * i * resistance * dt;
  const double dissipated_ev = dissipated / kConst.elementary_charge;

  const double drag_ev = energy_loss(electron, kTube).magnitude_ev;
  CHECK(drag_ev >= dissipated_ev);
  CHECK(drag_ev <= 30.0 * dissipated_ev);
}

TEST_CASE("autocorrelation: symmetry, peak at zero delay, and OAM squared law") {
  const std::vector<double> times = window(50.0, 2001);
  const double resistance = default_resistance(kTube);

  auto signal_for = [&](int l) {
    ElectronState electron = kElectron;
    electron.oam = l;
    const TimeTrace emf = emf_waveform(electron, kTube, times, resistance);
    TimeTrace current;
    current.times = times;
    for (const double v : emf.values) current.values.push_back(v / resistance);
    return current;
  };

  const double dt = times[1] - times[0];
  std::vector<double> delays;
  for (int j = -400; j <= 400; ++j) delays.push_back(j * dt);

  std::vector<std::string> warnings;
  const TimeTrace base = autocorrelation(signal_for(1), delays, &warnings);
  CHECK(warnings.empty());

  const double c_zero = base.values[400];
  CHECK(c_zero > 0.0);
  for (std::size_t i = 0; i < delays.size(); ++i) {
    CHECK(std::abs(base.values[i] - base.values[delays.size() - 1 - i]) <= 1e-12 * c_zero);
    CHECK(base.values[i] <= c_zero * (1.0 + 1e-12));
  }

  for (int l = 2; l <= 10; ++l) {
    const TimeTrace scaled = autocorrelation(signal_for(l), {0.0});
    CHECK(scaled.values[0] / c_zero == doctest::Approx(double(l) * l).epsilon(1e-9));
  }
}

TEST_CASE("autocorrelation: edge leakage is reported") {
  // A window barely wider than the pulse leaves visible tails.
  const std::vector<double> times = window(6.0, 301);
  const double resistance = default_resistance(kTube);
  const TimeTrace emf = emf_waveform(kElectron, kTube, times, resistance);
  TimeTrace current;
  current.times = times;
  for (const double v : emf.values) current.values.push_back(v / resistance);

  std::vector<std::string> warnings;
  autocorrelation(current, {0.0}, &warnings);
  CHECK_FALSE(warnings.empty());
}

TEST_CASE("autocorrelation: rejects ragged input") {
  TimeTrace trace;
  trace.times = {0.0, 1.0, 3.0};
  trace.values = {0.0, 1.0, 0.0};
  CHECK_THROWS_AS(autocorrelation(trace, {0.0}), std::invalid_argument);
}
