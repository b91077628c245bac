#include "vortex/induction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

namespace vortex {

namespace {

constexpr double kPi = std::numbers::pi;

// Shared pieces of the induction closed form,
//   I(z) = pref * [ (a^2 + g^2 (z - L/2)^2)^(-3/2) - (a^2 + g^2 (z + L/2)^2)^(-3/2) ],
// with pref = (1/4pi) (p0/m_e) (sigma mu w a) (l mu_B).
struct TraceParams {
  double pref;
  double gamma_sq;
  double a_sq;
  double half_len;
};

TraceParams trace_params(const ElectronState& electron, const Tube& tube,
                         const PhysicalConstants& constants) {
  const Kinematics kin = kinematics_from_energy(electron, constants);
  const double velocity_factor = kin.momentum / constants.electron_mass;  // gamma beta c
  const double mu = tube.rel_permeability * constants.vacuum_permeability;
  const double dipole = electron.oam * constants.bohr_magneton;
  const double pref = velocity_factor * tube.conductivity * mu * tube.thickness * tube.radius *
                      dipole / (4.0 * kPi);
  return {pref, kin.gamma * kin.gamma, tube.radius * tube.radius, 0.5 * tube.length};
}

double inv_pow_3_2(double u) { return 1.0 / (u * std::sqrt(u)); }

double closed_current(const TraceParams& p, double z) {
  const double lo = p.a_sq + p.gamma_sq * (z - p.half_len) * (z - p.half_len);
  const double hi = p.a_sq + p.gamma_sq * (z + p.half_len) * (z + p.half_len);
  return p.pref * (inv_pow_3_2(lo) - inv_pow_3_2(hi));
}

// g^2 x (a^2 + g^2 x^2)^(-5/2), the induction kernel; the closed form above
// is (1/3) of its antiderivative across the tube.
double induction_kernel(const TraceParams& p, double x) {
  const double u = p.a_sq + p.gamma_sq * x * x;
  return p.gamma_sq * x / (u * u * std::sqrt(u));
}

double quadrature_current(const TraceParams& p, double z, const QuadratureSpec& quad) {
  if (p.pref == 0.0) return 0.0;
  // The closed-form agreement gate is 1e-9 relative, so the kernel integral
  // requests at least 1e-10; its magnitude (~a^-3) makes any reasonable
  // absolute cutoff meaningless.
  QuadratureSpec effective = quad;
  effective.abs_tol = std::numeric_limits<double>::min();
  effective.rel_tol = std::min(quad.rel_tol, 1e-10);
  const double integral = integrate([&p, z](double h) { return induction_kernel(p, z - h); },
                                    -p.half_len, p.half_len, effective);
  return 3.0 * p.pref * integral;
}

// Richardson-extrapolated central difference, O(h^4).
template <typename F>
double derivative(F&& f, double x, double h) {
  const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
  const double d2 = (f(x + 0.5 * h) - f(x - 0.5 * h)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

int thread_budget() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* cap = std::getenv("VORTEX_INDUCT_THREADS")) {
    const long requested = std::strtol(cap, nullptr, 10);
    if (requested >= 1 && static_cast<unsigned>(requested) < n) {
      n = static_cast<unsigned>(requested);
    }
  }
  return static_cast<int>(n);
}

void check_axis(const std::vector<double>& axis, const char* name) {
  if (axis.size() < 2) {
    throw std::invalid_argument(std::string("field_energy_map: ") + name +
                                " needs at least two points");
  }
  for (std::size_t i = 1; i < axis.size(); ++i) {
    if (!(axis[i] > axis[i - 1])) {
      throw std::invalid_argument(std::string("field_energy_map: ") + name +
                                  " must be strictly increasing");
    }
  }
}

}  // namespace

double vector_potential(double r, double z, const LoopModel& loop,
                        const PhysicalConstants& constants) {
  if (r < 0.0) throw std::domain_error("vector_potential: r must be non-negative");
  if (r == 0.0 || loop.loop_radius <= 0.0 || loop.dipole_moment == 0.0) return 0.0;
  const double loop_radius = loop.loop_radius;
  const double current = loop.dipole_moment / (kPi * loop_radius * loop_radius);
  const double denom = (loop_radius + r) * (loop_radius + r) + z * z;
  const double m = 4.0 * loop_radius * r / denom;
  return constants.vacuum_permeability * current / kPi * std::sqrt(denom) / (2.0 * r) *
         loop_bracket(m);
}

double flux_dipole(double a, double d, double dipole_moment, const PhysicalConstants& constants) {
  if (!(a > 0.0)) throw std::invalid_argument("flux_dipole: a must be positive");
  const double u = a * a + d * d;
  return constants.vacuum_permeability * dipole_moment * a * a / (2.0 * u * std::sqrt(u));
}

RingField loop_field(double ring_radius, double current, double r, double z,
                     const PhysicalConstants& constants) {
  if (!(ring_radius > 0.0)) {
    throw std::invalid_argument("loop_field: ring_radius must be positive");
  }
  if (r < 0.0) throw std::domain_error("loop_field: r must be non-negative");
  const double R = ring_radius;
  const double pref = constants.vacuum_permeability * current / (2.0 * kPi);
  if (r < 1e-8 * R) {
    // Near-axis limit; the general expression divides by r.
    const double d2 = R * R + z * z;
    const double axial = constants.vacuum_permeability * current * R * R /
                         (2.0 * d2 * std::sqrt(d2));
    const double radial = 3.0 * constants.vacuum_permeability * current * R * R * z * r /
                          (4.0 * d2 * d2 * std::sqrt(d2));
    return {radial, axial};
  }
  const double u0 = R * R + r * r + z * z;
  const double alpha_sq = u0 - 2.0 * R * r;  // (R - r)^2 + z^2
  const double beta_sq = u0 + 2.0 * R * r;   // (R + r)^2 + z^2
  const double beta = std::sqrt(beta_sq);
  const double m = 4.0 * R * r / beta_sq;
  const double k_val = ellip_k(m);
  const double e_val = ellip_e(m);
  const double radial = pref * z / (r * alpha_sq * beta) * (u0 * e_val - alpha_sq * k_val);
  const double axial =
      pref / (alpha_sq * beta) * ((R * R - r * r - z * z) * e_val + alpha_sq * k_val);
  return {radial, axial};
}

double current_at(const ElectronState& electron, const Tube& tube, double z,
                  const PhysicalConstants& constants) {
  validate(electron);
  validate(tube);
  return closed_current(trace_params(electron, tube, constants), z);
}

CurrentTrace current_trace(const ElectronState& electron, const Tube& tube,
                           const std::vector<double>& z_samples, const QuadratureSpec& quad,
                           const PhysicalConstants& constants) {
  validate(electron);
  validate(tube);
  if (z_samples.empty()) throw std::invalid_argument("current_trace: no samples");
  if (z_samples.size() >= 2) {
    const double dz = z_samples[1] - z_samples[0];
    if (!(dz > 0.0)) throw std::invalid_argument("current_trace: positions must increase");
    for (std::size_t i = 1; i < z_samples.size(); ++i) {
      const double step = z_samples[i] - z_samples[i - 1];
      if (std::abs(step - dz) > 1e-9 * dz) {
        throw std::invalid_argument("current_trace: positions must be uniformly spaced");
      }
    }
  }

  const TraceParams params = trace_params(electron, tube, constants);
  // Relative floor for the cross check at the zero crossing, where both
  // routes cancel to ~0 and a pure relative test is meaningless.
  const double scale = std::abs(params.pref) * inv_pow_3_2(params.a_sq);

  CurrentTrace trace;
  trace.positions = z_samples;
  trace.currents.reserve(z_samples.size());
  trace.electron = electron;
  trace.tube = tube;
  for (const double z : z_samples) {
    const double closed = closed_current(params, z);
    const double quadrature = quadrature_current(params, z, quad);
    const double tol = 1e-9 * std::max(std::abs(closed), 1e-9 * scale);
    if (std::abs(quadrature - closed) > tol) {
      throw std::runtime_error(
          "current_trace: quadrature and closed-form evaluations disagree at z = " +
          std::to_string(z));
    }
    trace.currents.push_back(closed);
  }
  return trace;
}

EnergyLoss energy_loss(const ElectronState& electron, const Tube& tube,
                       const QuadratureSpec& spec, const PhysicalConstants& constants) {
  validate(electron);
  validate(tube);
  const LoopModel loop = loop_model(electron, constants);
  if (loop.dipole_moment == 0.0) return {0.0, 0, false};

  const Kinematics kin = kinematics_from_energy(electron, constants);
  const double velocity_factor = kin.momentum / constants.electron_mass;
  const double wall = tube.radius;
  const double half_len = 0.5 * tube.length;
  const double fd_step = 1e-4 * wall;

  // The nested integrals act on (dA/dz)^2 whose magnitude is far below any
  // caller-supplied absolute cutoff; drive them by rel_tol alone.
  QuadratureSpec nested = spec;
  nested.abs_tol = std::numeric_limits<double>::min();

  auto potential = [&](double x) { return vector_potential(wall, x, loop, constants); };
  auto slope_sq = [&](double x) {
    const double s = derivative(potential, x, fd_step);
    return s * s;
  };
  auto inner = [&](double z) {
    return integrate([&](double h) { return slope_sq(z + h); }, -half_len, half_len, nested);
  };

  double window = half_len + 20.0 * wall / kin.gamma;
  double outer = integrate(inner, -window, window, nested);
  // The integrand falls off like |z|^-8, so the one-sided tail beyond the
  // window is roughly g(window) * window / 7.
  double tail = 2.0 * inner(window) * window / 7.0;
  for (int doubling = 0; doubling < 6 && tail > spec.rel_tol * outer; ++doubling) {
    window *= 2.0;
    outer = integrate(inner, -window, window, nested);
    tail = 2.0 * inner(window) * window / 7.0;
  }
  const bool window_warning = tail > spec.rel_tol * outer;

  const double joules = 2.0 * kPi * tube.conductivity * wall * tube.thickness *
                        velocity_factor * outer;
  return {joules / constants.elementary_charge, -1, window_warning};
}

double dipole_wall_field(const ElectronState& electron, const Tube& tube, double x,
                         const PhysicalConstants& constants) {
  const Kinematics kin = kinematics_from_energy(electron, constants);
  const double velocity_factor = kin.momentum / constants.electron_mass;
  const double mu = tube.rel_permeability * constants.vacuum_permeability;
  const double dipole = electron.oam * constants.bohr_magneton;
  const double gamma_sq = kin.gamma * kin.gamma;
  const double u = tube.radius * tube.radius + gamma_sq * x * x;
  return 3.0 / (4.0 * kPi) * velocity_factor * mu * dipole * tube.radius * gamma_sq * x /
         (u * u * std::sqrt(u));
}

EmfProfile emf_profile(const ElectronState& electron, const Tube& tube, double z, int n_rings,
                       const PhysicalConstants& constants) {
  validate(electron);
  validate(tube);
  if (n_rings < 2) throw std::invalid_argument("emf_profile: need at least two rings");
  const LoopModel loop = loop_model(electron, constants);
  const Kinematics kin = kinematics_from_energy(electron, constants);
  const double velocity_factor = kin.momentum / constants.electron_mass;
  const double fd_step = 1e-4 * tube.radius;
  const double dh = tube.length / n_rings;

  auto potential = [&](double x) { return vector_potential(tube.radius, x, loop, constants); };

  EmfProfile profile;
  profile.ring_positions.reserve(n_rings);
  profile.azimuthal_field.reserve(n_rings);
  for (int j = 0; j < n_rings; ++j) {
    const double h = -0.5 * tube.length + (j + 0.5) * dh;
    const double contracted = kin.gamma * (z - h);
    const double slope = derivative(potential, contracted, fd_step);
    // E_phi = -v (mu/mu0) dA(a, gamma (z - h))/dz; the chain rule supplies
    // one factor of gamma.
    const double field = -velocity_factor * tube.rel_permeability * kin.gamma * slope;
    profile.ring_positions.push_back(h);
    profile.azimuthal_field.push_back(field);
  }
  return profile;
}

FieldGrid field_energy_map(const ElectronState& electron, const Tube& tube, double electron_z,
                           const std::vector<double>& r_axis, const std::vector<double>& z_axis,
                           int n_rings, const PhysicalConstants& constants) {
  validate(electron);
  validate(tube);
  check_axis(r_axis, "r_axis");
  check_axis(z_axis, "z_axis");
  if (r_axis.front() < 0.0) {
    throw std::invalid_argument("field_energy_map: r_axis must be non-negative");
  }
  if (n_rings < 200) {
    throw std::invalid_argument("field_energy_map: tube must be cut into at least 200 rings");
  }

  const double dh = tube.length / n_rings;
  std::vector<double> ring_h(n_rings);
  std::vector<double> ring_current(n_rings);
  for (int j = 0; j < n_rings; ++j) {
    ring_h[j] = -0.5 * tube.length + (j + 0.5) * dh;
    ring_current[j] = tube.conductivity * tube.thickness * dh *
                      dipole_wall_field(electron, tube, electron_z - ring_h[j], constants);
  }

  const std::size_t nr = r_axis.size();
  const std::size_t nz = z_axis.size();
  FieldGrid grid;
  grid.r_axis = r_axis;
  grid.z_axis = z_axis;
  grid.energy_density.assign(nr * nz, 0.0);
  grid.electron_position = electron_z;
  std::vector<char> singular(nr * nz, 0);

  // Grid points closer to a filament than ~dh/pi see the 1/d^2 near field
  // of the discretization instead of the physical wall sheet; they take the
  // average of their neighbours instead (this also covers points exactly on
  // a source ring).
  const double sing_tol = 0.4 * dh;
  auto near_filament = [&](double r, double z) {
    const double dr = r - tube.radius;
    if (std::abs(dr) >= sing_tol) return false;
    const auto j = std::llround((z - ring_h[0]) / dh);
    if (j < 0 || j >= n_rings) return false;
    const double dz = z - ring_h[j];
    return dr * dr + dz * dz < sing_tol * sing_tol;
  };
  auto fill_rows = [&](std::size_t row_begin, std::size_t row_end) {
    for (std::size_t ir = row_begin; ir < row_end; ++ir) {
      const double r = r_axis[ir];
      for (std::size_t iz = 0; iz < nz; ++iz) {
        const double z = z_axis[iz];
        const std::size_t cell = grid.index(ir, iz);
        if (near_filament(r, z)) {
          singular[cell] = 1;
          continue;
        }
        double b_r = 0.0;
        double b_z = 0.0;
        for (int j = 0; j < n_rings; ++j) {
          const RingField field = loop_field(tube.radius, ring_current[j], r, z - ring_h[j],
                                             constants);
          b_r += field.radial;
          b_z += field.axial;
        }
        grid.energy_density[cell] =
            (b_r * b_r + b_z * b_z) / (2.0 * constants.vacuum_permeability);
      }
    }
  };

  const int threads = std::min<int>(thread_budget(), static_cast<int>(nr));
  if (threads <= 1) {
    fill_rows(0, nr);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::size_t chunk = (nr + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(nr, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(fill_rows, begin, end);
    }
    for (auto& worker : pool) worker.join();
  }

  // Points that landed exactly on a source filament take the average of
  // their valid neighbours.
  for (std::size_t ir = 0; ir < nr; ++ir) {
    for (std::size_t iz = 0; iz < nz; ++iz) {
      if (!singular[grid.index(ir, iz)]) continue;
      double sum = 0.0;
      int count = 0;
      const auto add = [&](std::size_t jr, std::size_t jz) {
        if (!singular[grid.index(jr, jz)]) {
          sum += grid.energy_density[grid.index(jr, jz)];
          ++count;
        }
      };
      if (ir > 0) add(ir - 1, iz);
      if (ir + 1 < nr) add(ir + 1, iz);
      if (iz > 0) add(ir, iz - 1);
      if (iz + 1 < nz) add(ir, iz + 1);
      grid.energy_density[grid.index(ir, iz)] = count > 0 ? sum / count : 0.0;
    }
  }
  return grid;
}

double total_field_energy(const FieldGrid& grid, std::vector<std::string>* warnings) {
  const std::size_t nr = grid.r_axis.size();
  const std::size_t nz = grid.z_axis.size();
  if (nr < 2 || nz < 2) {
    throw std::invalid_argument("total_field_energy: grid needs at least 2x2 points");
  }
  auto trapezoid_weight = [](const std::vector<double>& axis, std::size_t i) {
    const std::size_t n = axis.size();
    if (i == 0) return 0.5 * (axis[1] - axis[0]);
    if (i == n - 1) return 0.5 * (axis[n - 1] - axis[n - 2]);
    return 0.5 * (axis[i + 1] - axis[i - 1]);
  };

  double total = 0.0;
  double boundary = 0.0;
  for (std::size_t ir = 0; ir < nr; ++ir) {
    const double wr = trapezoid_weight(grid.r_axis, ir);
    for (std::size_t iz = 0; iz < nz; ++iz) {
      const double wz = trapezoid_weight(grid.z_axis, iz);
      const double contribution = grid.at(ir, iz) * grid.r_axis[ir] * wr * wz;
      total += contribution;
      if (ir == 0 || ir == nr - 1 || iz == 0 || iz == nz - 1) boundary += contribution;
    }
  }
  if (warnings != nullptr && total > 0.0 && boundary > 0.01 * total) {
    warnings->push_back("total_field_energy: boundary cells carry more than 1% of the total; "
                        "enlarge the grid");
  }
  return 2.0 * kPi * total;
}

OffsetScanResult offset_scan(const ElectronState& electron, const Tube& tube,
                             const std::vector<double>& offsets,
                             const std::vector<int>& oam_values,
                             const PhysicalConstants& constants) {
  validate(electron);
  validate(tube);
  if (offsets.empty()) throw std::invalid_argument("offset_scan: no offsets");
  if (oam_values.empty()) throw std::invalid_argument("offset_scan: no OAM values");

  int max_abs_oam = 0;
  for (const int l : oam_values) max_abs_oam = std::max(max_abs_oam, std::abs(l));
  const double max_loop_radius = electron.waist * std::sqrt(max_abs_oam / 2.0);
  for (const double d : offsets) {
    if (!(d >= 0.0)) throw std::invalid_argument("offset_scan: offsets must be non-negative");
    if (!(d < tube.radius - max_loop_radius)) {
      throw std::invalid_argument("offset_scan: offset too large, the beam would hit the wall");
    }
  }

  const Kinematics kin = kinematics_from_energy(electron, constants);
  const double velocity_factor = kin.momentum / constants.electron_mass;
  const double mu = tube.rel_permeability * constants.vacuum_permeability;
  const double gamma_sq = kin.gamma * kin.gamma;
  const double half_len = 0.5 * tube.length;

  OffsetScanResult result;
  result.offsets = offsets;
  result.oam_values = oam_values;
  result.peak_currents.reserve(offsets.size() * oam_values.size());
  result.ratios.reserve(offsets.size() * oam_values.size());

  for (const double d : offsets) {
    // Farthest wall point from the displaced axis, at effective radius a + d.
    const double wall = tube.radius + d;
    const double wall_sq = wall * wall;
    auto kernel = [&](double z) {
      const double lo = wall_sq + gamma_sq * (z - half_len) * (z - half_len);
      const double hi = wall_sq + gamma_sq * (z + half_len) * (z + half_len);
      return std::abs(inv_pow_3_2(lo) - inv_pow_3_2(hi));
    };

    // The kernel shape is OAM independent: locate its peak once per offset,
    // coarse scan plus golden-section refinement.
    const double z_hi = half_len + 8.0 * wall / kin.gamma;
    const int n_scan = 4001;
    double best_z = 0.0;
    double best_val = -1.0;
    for (int i = 0; i < n_scan; ++i) {
      const double z = z_hi * static_cast<double>(i) / (n_scan - 1);
      const double val = kernel(z);
      if (val > best_val) {
        best_val = val;
        best_z = z;
      }
    }
    double lo = std::max(0.0, best_z - z_hi / (n_scan - 1));
    double hi = std::min(z_hi, best_z + z_hi / (n_scan - 1));
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - golden * (hi - lo);
    double x2 = lo + golden * (hi - lo);
    double f1 = kernel(x1);
    double f2 = kernel(x2);
    for (int iter = 0; iter < 200 && hi - lo > 1e-14 * z_hi; ++iter) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + golden * (hi - lo);
        f2 = kernel(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - golden * (hi - lo);
        f1 = kernel(x1);
      }
    }
    const double kernel_peak = kernel(0.5 * (lo + hi));

    std::vector<double> row;
    row.reserve(oam_values.size());
    for (const int l : oam_values) {
      const double pref = velocity_factor * tube.conductivity * mu * tube.thickness * wall *
                          std::abs(l) * constants.bohr_magneton / (4.0 * kPi);
      row.push_back(pref * kernel_peak);
    }
    for (std::size_t il = 0; il < row.size(); ++il) {
      result.peak_currents.push_back(row[il]);
      result.ratios.push_back(row[0] > 0.0 ? row[il] / row[0] : 0.0);
    }
  }
  return result;
}

}  // namespace vortex
