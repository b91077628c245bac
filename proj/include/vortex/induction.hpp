#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "vortex/constants.hpp"
#include "vortex/core_model.hpp"
#include "vortex/numerics.hpp"

namespace vortex {

/// Total induced current sampled against the electron's position relative to
/// the tube centre.
struct CurrentTrace {
  std::vector<double> positions;  ///< m, uniform, strictly increasing
  std::vector<double> currents;   ///< A
  ElectronState electron;
  Tube tube;
};

/// 2-D magnetic energy density map of the eddy currents, on an (r, z) grid.
struct FieldGrid {
  std::vector<double> r_axis;          ///< m, strictly increasing
  std::vector<double> z_axis;          ///< m, strictly increasing
  std::vector<double> energy_density;  ///< J/m^3, row-major [r][z]
  double electron_position;            ///< m

  std::size_t index(std::size_t ir, std::size_t iz) const { return ir * z_axis.size() + iz; }
  double at(std::size_t ir, std::size_t iz) const { return energy_density[index(ir, iz)]; }
};

/// Peak induced current as a function of transverse beam offset, per OAM
/// value, with the ratio of each row to the first OAM in the list.
struct OffsetScanResult {
  std::vector<double> offsets;    ///< m
  std::vector<int> oam_values;
  std::vector<double> peak_currents;  ///< A, row-major [offset][oam]
  std::vector<double> ratios;         ///< peak(l_i, d) / peak(l_0, d)

  std::size_t index(std::size_t io, std::size_t il) const { return io * oam_values.size() + il; }
};

/// Azimuthal induced field sampled along the tube wall.
struct EmfProfile {
  std::vector<double> ring_positions;  ///< m, ring centre h
  std::vector<double> azimuthal_field; ///< V/m at the wall radius
};

/// Azimuthal vector potential of the electron's effective current loop at
/// (r, z), loop centred at the origin in the z = 0 plane.
///
/// Standard circular-filament result,
///   A_phi = mu0 I / pi * sqrt((R+r)^2 + z^2) / (2 r) * [(1 - m/2) K(m) - E(m)],
///   m = 4 R r / ((R+r)^2 + z^2),
/// with the signed loop current I = dipole_moment / (pi R^2).  Returns 0 on
/// the axis and for a zero dipole moment; throws std::domain_error for r < 0.
double vector_potential(double r, double z, const LoopModel& loop,
                        const PhysicalConstants& constants = PhysicalConstants::codata2018());

/// Magnetic flux through a coaxial circle of radius a at axial distance d
/// from a point dipole: mu0 m a^2 / (2 (a^2 + d^2)^(3/2)).
double flux_dipole(double a, double d, double dipole_moment,
                   const PhysicalConstants& constants = PhysicalConstants::codata2018());

/// Magnetic field of a circular current filament of radius ring_radius in the
/// z = 0 plane, at cylindrical point (r, z).
struct RingField {
  double radial;  ///< T
  double axial;   ///< T
};

RingField loop_field(double ring_radius, double current, double r, double z,
                     const PhysicalConstants& constants = PhysicalConstants::codata2018());

/// Total induced current at each sampled electron position.
///
/// Every sample is evaluated twice: by adaptive quadrature of the dipole
/// induction kernel over the tube length, and by its closed-form
/// antiderivative.  The two routes must agree to 1e-9 relative (with a
/// relative floor of 1e-9 of the trace scale at the zero crossing); the
/// closed-form values populate the trace.
CurrentTrace current_trace(const ElectronState& electron, const Tube& tube,
                           const std::vector<double>& z_samples,
                           const QuadratureSpec& quad = {},
                           const PhysicalConstants& constants = PhysicalConstants::codata2018());

/// Closed-form total induced current at a single electron position.
double current_at(const ElectronState& electron, const Tube& tube, double z,
                  const PhysicalConstants& constants = PhysicalConstants::codata2018());

/// Energy dissipated in the tube by the eddy currents over a full transit.
struct EnergyLoss {
  double magnitude_ev;      ///< positive loss magnitude
  int sign;                 ///< -1 for a loss, 0 when no dipole couples
  bool window_warning;      ///< outer window edge still contributed > rel_tol
};

/// Nested quadrature of (2 pi sigma a w) v * integral dz integral dh
/// (d/dz A_phi(a, z + h))^2: inner h over the tube length, outer z over a
/// window widened until the tail estimate drops below rel_tol of the total.
/// The derivative is a Richardson-extrapolated central difference.
EnergyLoss energy_loss(const ElectronState& electron, const Tube& tube,
                       const QuadratureSpec& spec = {},
                       const PhysicalConstants& constants = PhysicalConstants::codata2018());

/// Azimuthal induced field E_phi(h) at the wall for an electron at z, from
/// the finite-loop vector potential with the boosted axial coordinate.
/// Integrating sigma * E_phi * w dh over the rings reproduces the current
/// trace in the a >> loop_radius limit.
EmfProfile emf_profile(const ElectronState& electron, const Tube& tube, double z,
                       int n_rings = 400,
                       const PhysicalConstants& constants = PhysicalConstants::codata2018());

/// Same wall field from the point-dipole induction kernel (the integrand of
/// the current closed form); used for cross checks and the field map.
double dipole_wall_field(const ElectronState& electron, const Tube& tube, double x,
                         const PhysicalConstants& constants = PhysicalConstants::codata2018());

/// Magnetic energy density map of the induced ring currents.
///
/// The tube is discretized into n_rings >= 200 filaments whose currents come
/// from the dipole induction kernel at the given electron position; each grid
/// point superposes every ring field in a fixed order (bit-identical results
/// for any thread count).  Points landing exactly on a source filament are
/// assigned the average of their valid neighbours afterwards.
FieldGrid field_energy_map(const ElectronState& electron, const Tube& tube, double electron_z,
                           const std::vector<double>& r_axis, const std::vector<double>& z_axis,
                           int n_rings = 256,
                           const PhysicalConstants& constants = PhysicalConstants::codata2018());

/// 2 pi * double trapezoid of u(r, z) * r over the grid, in J.  Appends a
/// warning when the boundary cells carry more than 1% of the total.
double total_field_energy(const FieldGrid& grid, std::vector<std::string>* warnings = nullptr);

/// Peak induced current versus transverse beam offset.
///
/// Effective-distance model: the wall point farthest from the displaced axis
/// sits at radius a + d, and the closed-form trace evaluated with that radius
/// gives the reported peak.  The peak location is found once per offset on
/// the OAM-independent kernel, so the tabulated peaks are exactly linear in
/// the OAM index.
OffsetScanResult offset_scan(const ElectronState& electron, const Tube& tube,
                             const std::vector<double>& offsets,
                             const std::vector<int>& oam_values,
                             const PhysicalConstants& constants = PhysicalConstants::codata2018());

}  // namespace vortex
