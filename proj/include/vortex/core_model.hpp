#pragma once

#include "vortex/constants.hpp"

namespace vortex {

/// A vortex electron: central kinetic energy, orbital angular momentum index
/// and transverse Gaussian waist.  Only the lowest radial and longitudinal
/// mode (p = 0, n = 0) is supported.
struct ElectronState {
  double kinetic_energy_ev;
  int oam;
  double waist;  ///< m
  int radial_index = 0;
  int longitudinal_index = 0;
};

/// Throws std::invalid_argument when the state violates its invariants.
void validate(const ElectronState& electron);

struct Kinematics {
  double gamma;
  double beta;
  double speed;     ///< m/s, beta * c
  double momentum;  ///< kg m/s, gamma * m_e * beta * c
};

/// Relativistic kinematics from the kinetic energy:
/// gamma = 1 + E/(m_e c^2), beta = sqrt(1 - gamma^-2).
Kinematics kinematics_from_energy(const ElectronState& electron,
                                  const PhysicalConstants& constants);

/// Kinetic energy in eV recovered from a Lorentz factor (round trip check).
double kinetic_energy_from_gamma(double gamma, const PhysicalConstants& constants);

/// Unnormalized p = 0 Laguerre-Gauss intensity profile r^(2|l|) exp(-2r^2/w0^2).
double lg_radial_density(double r, const ElectronState& electron);

/// The electron's transverse probability current collapsed onto a single
/// circular loop: radius w0 sqrt(|l|/2), current e hbar/(pi m_e w0^2), dipole
/// moment l mu_B (signed; the loop current is kept as a positive magnitude).
struct LoopModel {
  double loop_radius;    ///< m
  double loop_current;   ///< A
  double dipole_moment;  ///< J/T, signed by the OAM index
};

LoopModel loop_model(const ElectronState& electron, const PhysicalConstants& constants);

/// Conductive tube the electron flies through.
struct Tube {
  double radius;            ///< m
  double thickness;         ///< m
  double length;            ///< m
  double conductivity;      ///< S/m
  double rel_permeability;  ///< mu / mu0
};

void validate(const Tube& tube);

/// The loop model is only meaningful when the wall is well outside the beam;
/// false signals that radius < 5 * loop_radius and results should be taken
/// with caution.
bool tube_radius_adequate(const Tube& tube, const LoopModel& loop);

/// Cylindrical four-current density components (c rho, J_r, J_phi, J_z).
struct FourCurrent {
  double charge_component;  ///< c * rho, A/m^2 scale
  double radial;            ///< A/m^2
  double azimuthal;         ///< A/m^2
  double longitudinal;      ///< A/m^2
};

/// Boost along the propagation axis from the electron rest frame to the lab:
/// the charge component picks up gamma, the longitudinal component becomes
/// gamma*beta times the rest charge component, transverse components are
/// untouched.  (j0)^2 - (j3)^2 is preserved for any beta.
FourCurrent boost_four_current(const FourCurrent& rest, const Kinematics& kin);

}  // namespace vortex
