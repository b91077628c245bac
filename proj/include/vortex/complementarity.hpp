#pragma once

#include <array>
#include <complex>
#include <vector>

namespace vortex {

/// State of a measurement loop expanded over its current eigenstates; index 0
/// is the no-current state.  Amplitudes must be normalized to 1e-12.
struct CircuitQuantumState {
  std::vector<std::complex<double>> amplitudes;
};

void validate(const CircuitQuantumState& state);

/// Illustrative coupling family: c_n proportional to lambda^n / sqrt(n!),
/// normalized over a truncated space of the given dimension.  For identical
/// loops the which-path coefficient is |c_0|^2 ~ exp(-|lambda|^2), so lambda
/// acts as a smooth coupling knob.  Not derived from the electromagnetic
/// model; the mapping from induced currents to amplitudes is left open.
CircuitQuantumState coherent_circuit_state(std::complex<double> lambda, int dim = 16);

/// Two-path electron state (|u> + e^{i delta} |d>) with explicit amplitudes;
/// |amplitude_u|^2 + |amplitude_d|^2 must be 1 to 1e-12.
struct PathState {
  double relative_phase;
  std::complex<double> amplitude_u;
  std::complex<double> amplitude_d;

  static PathState balanced(double delta);
};

void validate(const PathState& path);

/// Which-path overlap alpha = <0|i_u> <i_d|0> = c0_u * conj(c0_d).
std::complex<double> alpha_coefficient(const CircuitQuantumState& state_u,
                                       const CircuitQuantumState& state_d);

/// 2x2 reduced density matrix in the {|u>, |d>} path basis.
struct ReducedDensityMatrix {
  std::array<std::complex<double>, 4> entries;  ///< row-major

  std::complex<double> at(int row, int col) const { return entries[2 * row + col]; }
  /// Eigenvalues, descending.
  std::array<double, 2> eigenvalues() const;
};

void validate(const ReducedDensityMatrix& rho);

/// Partial trace of (a_u |u>|i_u>|0_d> + e^{i delta} a_d |d>|0_u>|i_d>) over
/// both loop registers:
///   rho = [ |a_u|^2,              a_u conj(a_d) e^{-i delta} alpha ]
///         [ conj(o.d.),           |a_d|^2                          ].
ReducedDensityMatrix reduced_density(const PathState& path, const CircuitQuantumState& state_u,
                                     const CircuitQuantumState& state_d);

/// Fringe visibility V = 2 |rho_ud|, in [0, 1]; equals |alpha| for balanced
/// paths.
double visibility(const ReducedDensityMatrix& rho);

/// Tr(rho^2) = (1 + |alpha|^2)/2 for balanced paths.
double purity(const ReducedDensityMatrix& rho);

/// Which-path distinguishability sqrt(1 - |alpha|^2) of the balanced model.
double distinguishability(std::complex<double> alpha);

}  // namespace vortex
