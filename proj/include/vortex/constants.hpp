#pragma once

namespace vortex {

/// Fundamental constants in SI units (CODATA 2018 values, hard coded so
/// results are reproducible without any runtime data source).
struct PhysicalConstants {
  double elementary_charge;    ///< C
  double electron_mass;        ///< kg
  double hbar;                 ///< J s
  double bohr_magneton;        ///< J/T
  double light_speed;          ///< m/s
  double vacuum_permeability;  ///< T m / A

  static const PhysicalConstants& codata2018();

  /// m_e c^2 expressed in eV (~510998.95 eV).
  double electron_rest_energy_ev() const;

  /// True when bohr_magneton == e*hbar/(2 m_e) to 1e-6 relative.
  bool self_consistent() const;
};

}  // namespace vortex
