#include "vortex/core_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vortex {

const PhysicalConstants& PhysicalConstants::codata2018() {
  static const PhysicalConstants k{
      1.602176634e-19,    // elementary_charge, exact
      9.1093837015e-31,   // electron_mass
      1.054571817e-34,    // hbar
      9.2740100783e-24,   // bohr_magneton
      2.99792458e8,       // light_speed, exact
      1.25663706212e-6,   // vacuum_permeability
  };
  return k;
}

double PhysicalConstants::electron_rest_energy_ev() const {
  return electron_mass * light_speed * light_speed / elementary_charge;
}

bool PhysicalConstants::self_consistent() const {
  const double derived = elementary_charge * hbar / (2.0 * electron_mass);
  return std::abs(derived - bohr_magneton) <= 1e-6 * bohr_magneton;
}

void validate(const ElectronState& electron) {
  if (!(electron.kinetic_energy_ev > 0.0)) {
    throw std::invalid_argument("electron: kinetic_energy_ev must be positive");
  }
  if (!(electron.waist > 0.0)) {
    throw std::invalid_argument("electron: waist must be positive");
  }
  if (electron.radial_index != 0 || electron.longitudinal_index != 0) {
    throw std::invalid_argument("electron: only the p = 0, n = 0 mode is supported");
  }
}

Kinematics kinematics_from_energy(const ElectronState& electron,
                                  const PhysicalConstants& constants) {
  if (!(electron.kinetic_energy_ev > 0.0)) {
    throw std::invalid_argument("kinematics_from_energy: kinetic energy must be positive");
  }
  const double gamma = 1.0 + electron.kinetic_energy_ev / constants.electron_rest_energy_ev();
  const double beta = std::sqrt(1.0 - 1.0 / (gamma * gamma));
  const double speed = beta * constants.light_speed;
  const double momentum = gamma * constants.electron_mass * speed;
  return {gamma, beta, speed, momentum};
}

double kinetic_energy_from_gamma(double gamma, const PhysicalConstants& constants) {
  return (gamma - 1.0) * constants.electron_rest_energy_ev();
}

double lg_radial_density(double r, const ElectronState& electron) {
  if (r < 0.0) throw std::domain_error("lg_radial_density: r must be non-negative");
  if (electron.radial_index != 0) {
    throw std::invalid_argument("lg_radial_density: only p = 0 modes are supported");
  }
  const int abs_oam = std::abs(electron.oam);
  const double w0 = electron.waist;
  const double gauss = std::exp(-2.0 * r * r / (w0 * w0));
  if (abs_oam == 0) return gauss;
  return std::pow(r, 2.0 * abs_oam) * gauss;
}

LoopModel loop_model(const ElectronState& electron, const PhysicalConstants& constants) {
  validate(electron);
  const double w0 = electron.waist;
  const double loop_radius = w0 * std::sqrt(std::abs(electron.oam) / 2.0);
  const double loop_current =
      constants.elementary_charge * constants.hbar /
      (std::numbers::pi * constants.electron_mass * w0 * w0);
  const double dipole_moment = electron.oam * constants.bohr_magneton;
  return {loop_radius, loop_current, dipole_moment};
}

void validate(const Tube& tube) {
  if (!(tube.radius > 0.0)) throw std::invalid_argument("tube: radius must be positive");
  if (!(tube.thickness > 0.0)) throw std::invalid_argument("tube: thickness must be positive");
  if (!(tube.length > 0.0)) throw std::invalid_argument("tube: length must be positive");
  if (!(tube.conductivity > 0.0)) {
    throw std::invalid_argument("tube: conductivity must be positive");
  }
  if (!(tube.rel_permeability > 0.0)) {
    throw std::invalid_argument("tube: rel_permeability must be positive");
  }
}

bool tube_radius_adequate(const Tube& tube, const LoopModel& loop) {
  return tube.radius >= 5.0 * loop.loop_radius;
}

FourCurrent boost_four_current(const FourCurrent& rest, const Kinematics& kin) {
  const double gamma = kin.gamma;
  const double beta = kin.beta;
  return {
      gamma * (rest.charge_component + beta * rest.longitudinal),
      rest.radial,
      rest.azimuthal,
      gamma * (rest.longitudinal + beta * rest.charge_component),
  };
}

}  // namespace vortex
