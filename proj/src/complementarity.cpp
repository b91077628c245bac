#include "vortex/complementarity.hpp"

#include <cmath>
#include <stdexcept>

namespace vortex {

namespace {
constexpr double kNormTol = 1e-12;
}

void validate(const CircuitQuantumState& state) {
  if (state.amplitudes.empty()) {
    throw std::invalid_argument("circuit state: no amplitudes");
  }
  double norm = 0.0;
  for (const auto& c : state.amplitudes) norm += std::norm(c);
  if (std::abs(norm - 1.0) > kNormTol) {
    throw std::invalid_argument("circuit state: amplitudes are not normalized");
  }
}

CircuitQuantumState coherent_circuit_state(std::complex<double> lambda, int dim) {
  if (dim < 1) throw std::invalid_argument("coherent_circuit_state: dim must be >= 1");
  CircuitQuantumState state;
  state.amplitudes.resize(dim);
  std::complex<double> term = 1.0;  // lambda^n / sqrt(n!)
  double norm = 0.0;
  for (int n = 0; n < dim; ++n) {
    if (n > 0) term *= lambda / std::sqrt(static_cast<double>(n));
    state.amplitudes[n] = term;
    norm += std::norm(term);
  }
  const double inv = 1.0 / std::sqrt(norm);
  for (auto& c : state.amplitudes) c *= inv;
  return state;
}

PathState PathState::balanced(double delta) {
  const double amp = 1.0 / std::sqrt(2.0);
  return {delta, amp, amp};
}

void validate(const PathState& path) {
  const double norm = std::norm(path.amplitude_u) + std::norm(path.amplitude_d);
  if (std::abs(norm - 1.0) > kNormTol) {
    throw std::invalid_argument("path state: amplitudes are not normalized");
  }
}

std::complex<double> alpha_coefficient(const CircuitQuantumState& state_u,
                                       const CircuitQuantumState& state_d) {
  validate(state_u);
  validate(state_d);
  return state_u.amplitudes[0] * std::conj(state_d.amplitudes[0]);
}

std::array<double, 2> ReducedDensityMatrix::eigenvalues() const {
  // Hermitian 2x2: mean of the diagonal +- half the discriminant.
  const double a = at(0, 0).real();
  const double d = at(1, 1).real();
  const double off = std::abs(at(0, 1));
  const double mid = 0.5 * (a + d);
  const double radius = std::sqrt(0.25 * (a - d) * (a - d) + off * off);
  return {mid + radius, mid - radius};
}

void validate(const ReducedDensityMatrix& rho) {
  const auto& e = rho.entries;
  if (std::abs(e[0].imag()) > kNormTol || std::abs(e[3].imag()) > kNormTol) {
    throw std::invalid_argument("density matrix: diagonal must be real");
  }
  if (std::abs(e[1] - std::conj(e[2])) > kNormTol) {
    throw std::invalid_argument("density matrix: not Hermitian");
  }
  if (std::abs(e[0].real() + e[3].real() - 1.0) > kNormTol) {
    throw std::invalid_argument("density matrix: trace must be 1");
  }
  const auto eig = rho.eigenvalues();
  if (eig[1] < -kNormTol) {
    throw std::invalid_argument("density matrix: not positive semidefinite");
  }
}

ReducedDensityMatrix reduced_density(const PathState& path, const CircuitQuantumState& state_u,
                                     const CircuitQuantumState& state_d) {
  validate(path);
  const std::complex<double> alpha = alpha_coefficient(state_u, state_d);
  const std::complex<double> phase(std::cos(path.relative_phase),
                                   -std::sin(path.relative_phase));
  const std::complex<double> off =
      path.amplitude_u * std::conj(path.amplitude_d) * phase * alpha;
  ReducedDensityMatrix rho;
  rho.entries = {std::norm(path.amplitude_u), off, std::conj(off),
                 std::norm(path.amplitude_d)};
  return rho;
}

double visibility(const ReducedDensityMatrix& rho) { return 2.0 * std::abs(rho.at(0, 1)); }

double purity(const ReducedDensityMatrix& rho) {
  const double a = rho.at(0, 0).real();
  const double d = rho.at(1, 1).real();
  return a * a + d * d + 2.0 * std::norm(rho.at(0, 1));
}

double distinguishability(std::complex<double> alpha) {
  const double mod_sq = std::norm(alpha);
  return std::sqrt(std::max(0.0, 1.0 - mod_sq));
}

}  // namespace vortex
