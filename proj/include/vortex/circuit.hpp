#pragma once

#include <string>
#include <vector>

#include "vortex/core_model.hpp"
#include "vortex/induction.hpp"
#include "vortex/numerics.hpp"

namespace vortex {

/// Lumped series RL readout circuit.  The default resistance treats the tube
/// as one azimuthal conductor: R = 2 pi a / (sigma w L).
struct RlCircuit {
  double resistance;  ///< Ohm
  double inductance;  ///< H
};

double default_resistance(const Tube& tube);

/// Uniformly sampled time series (A for currents, V for EMF traces).
struct TimeTrace {
  std::vector<double> times;
  std::vector<double> values;
};

/// Transit duration L / (beta c).
double transit_time(const ElectronState& electron, const Tube& tube,
                    const PhysicalConstants& constants = PhysicalConstants::codata2018());

/// EMF driving the lumped circuit: the closed-form induced current at
/// z = v t times the circuit resistance (t = 0 is the electron at the tube
/// mid-plane).  resistance <= 0 selects the tube-derived default.  The time
/// window must span at least five transit times.
TimeTrace emf_waveform(const ElectronState& electron, const Tube& tube,
                       const std::vector<double>& times, double resistance = 0.0,
                       const PhysicalConstants& constants = PhysicalConstants::codata2018());

/// Current response of the series RL circuit to an EMF trace:
/// solves emf(t) - L dI/dt = I R by RK4 from I = 0.  A zero inductance
/// degenerates to I = emf/R evaluated exactly on the EMF grid (the OdeSpec is
/// ignored in that case).  Appends a stability warning when
/// step > 0.1 L/R.
TimeTrace rl_response(const TimeTrace& emf, const RlCircuit& circuit, const OdeSpec& spec,
                      std::vector<std::string>* warnings = nullptr);

/// Discrete autocorrelation C(tau) = integral i(t) i(t - tau) dt (trapezoid
/// in t, linear interpolation of the shifted signal), evaluated at each
/// requested delay.  Appends an edge-leakage warning when the trace does not
/// decay below 1e-6 of its peak at the window edges.
TimeTrace autocorrelation(const TimeTrace& current, const std::vector<double>& delays,
                          std::vector<std::string>* warnings = nullptr);

}  // namespace vortex
