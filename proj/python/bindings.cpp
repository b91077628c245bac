#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vortex/circuit.hpp"
#include "vortex/complementarity.hpp"
#include "vortex/config.hpp"
#include "vortex/induction.hpp"

namespace py = pybind11;
using namespace vortex;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Eddy currents induced by an OAM-carrying electron in a conductive tube";

  py::register_exception<NonConvergenceError>(m, "NonConvergenceError", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<PhysicalConstants>(m, "PhysicalConstants")
      .def_static("codata2018", &PhysicalConstants::codata2018,
                  py::return_value_policy::reference)
      .def_readonly("elementary_charge", &PhysicalConstants::elementary_charge)
      .def_readonly("electron_mass", &PhysicalConstants::electron_mass)
      .def_readonly("hbar", &PhysicalConstants::hbar)
      .def_readonly("bohr_magneton", &PhysicalConstants::bohr_magneton)
      .def_readonly("light_speed", &PhysicalConstants::light_speed)
      .def_readonly("vacuum_permeability", &PhysicalConstants::vacuum_permeability)
      .def("electron_rest_energy_ev", &PhysicalConstants::electron_rest_energy_ev)
      .def("self_consistent", &PhysicalConstants::self_consistent);

  py::class_<ElectronState>(m, "ElectronState")
      .def(py::init([](double energy_ev, int oam, double waist) {
             ElectronState state{energy_ev, oam, waist, 0, 0};
             validate(state);
             return state;
           }),
           py::arg("kinetic_energy_ev"), py::arg("oam"), py::arg("waist"))
      .def_readwrite("kinetic_energy_ev", &ElectronState::kinetic_energy_ev)
      .def_readwrite("oam", &ElectronState::oam)
      .def_readwrite("waist", &ElectronState::waist);

  py::class_<Tube>(m, "Tube")
      .def(py::init([](double radius, double thickness, double length, double conductivity,
                       double rel_permeability) {
             Tube tube{radius, thickness, length, conductivity, rel_permeability};
             validate(tube);
             return tube;
           }),
           py::arg("radius"), py::arg("thickness"), py::arg("length"), py::arg("conductivity"),
           py::arg("rel_permeability") = 1.0)
      .def_readwrite("radius", &Tube::radius)
      .def_readwrite("thickness", &Tube::thickness)
      .def_readwrite("length", &Tube::length)
      .def_readwrite("conductivity", &Tube::conductivity)
      .def_readwrite("rel_permeability", &Tube::rel_permeability);

  py::class_<Kinematics>(m, "Kinematics")
      .def_readonly("gamma", &Kinematics::gamma)
      .def_readonly("beta", &Kinematics::beta)
      .def_readonly("speed", &Kinematics::speed)
      .def_readonly("momentum", &Kinematics::momentum);

  py::class_<LoopModel>(m, "LoopModel")
      .def_readonly("loop_radius", &LoopModel::loop_radius)
      .def_readonly("loop_current", &LoopModel::loop_current)
      .def_readonly("dipole_moment", &LoopModel::dipole_moment);

  py::class_<QuadratureSpec>(m, "QuadratureSpec")
      .def(py::init<>())
      .def(py::init([](double abs_tol, double rel_tol, int max_depth) {
             return QuadratureSpec{abs_tol, rel_tol, max_depth};
           }),
           py::arg("abs_tol"), py::arg("rel_tol"), py::arg("max_depth") = 40)
      .def_readwrite("abs_tol", &QuadratureSpec::abs_tol)
      .def_readwrite("rel_tol", &QuadratureSpec::rel_tol)
      .def_readwrite("max_depth", &QuadratureSpec::max_depth);

  py::class_<OdeSpec>(m, "OdeSpec")
      .def(py::init([](double step, double t_start, double t_end) {
             return OdeSpec{step, t_start, t_end};
           }),
           py::arg("step"), py::arg("t_start"), py::arg("t_end"))
      .def_readwrite("step", &OdeSpec::step)
      .def_readwrite("t_start", &OdeSpec::t_start)
      .def_readwrite("t_end", &OdeSpec::t_end);

  m.def("ellip_k", &ellip_k, py::arg("m"));
  m.def("ellip_e", &ellip_e, py::arg("m"));
  m.def(
      "integrate",
      [](const std::function<double(double)>& f, double a, double b,
         const QuadratureSpec& spec) { return integrate(f, a, b, spec); },
      py::arg("f"), py::arg("a"), py::arg("b"), py::arg("spec") = QuadratureSpec{});
  m.def(
      "solve_ode",
      [](const std::function<double(double, double)>& rhs, double y0, const OdeSpec& spec) {
        const OdeTrajectory traj = solve_ode(rhs, y0, spec);
        return py::make_tuple(traj.times, traj.values);
      },
      py::arg("rhs"), py::arg("y0"), py::arg("spec"));

  m.def(
      "kinematics_from_energy",
      [](const ElectronState& e) {
        return kinematics_from_energy(e, PhysicalConstants::codata2018());
      },
      py::arg("electron"));
  m.def(
      "loop_model",
      [](const ElectronState& e) { return loop_model(e, PhysicalConstants::codata2018()); },
      py::arg("electron"));
  m.def("lg_radial_density", &lg_radial_density, py::arg("r"), py::arg("electron"));
  m.def("tube_radius_adequate", &tube_radius_adequate, py::arg("tube"), py::arg("loop"));

  py::class_<FourCurrent>(m, "FourCurrent")
      .def(py::init([](double charge, double radial, double azimuthal, double longitudinal) {
             return FourCurrent{charge, radial, azimuthal, longitudinal};
           }),
           py::arg("charge_component"), py::arg("radial") = 0.0, py::arg("azimuthal") = 0.0,
           py::arg("longitudinal") = 0.0)
      .def_readonly("charge_component", &FourCurrent::charge_component)
      .def_readonly("radial", &FourCurrent::radial)
      .def_readonly("azimuthal", &FourCurrent::azimuthal)
      .def_readonly("longitudinal", &FourCurrent::longitudinal);
  m.def("boost_four_current", &boost_four_current, py::arg("rest"), py::arg("kinematics"));

  m.def(
      "vector_potential",
      [](double r, double z, const LoopModel& loop) {
        return vector_potential(r, z, loop, PhysicalConstants::codata2018());
      },
      py::arg("r"), py::arg("z"), py::arg("loop"));
  m.def(
      "flux_dipole",
      [](double a, double d, double moment) {
        return flux_dipole(a, d, moment, PhysicalConstants::codata2018());
      },
      py::arg("a"), py::arg("d"), py::arg("dipole_moment"));

  py::class_<CurrentTrace>(m, "CurrentTrace")
      .def_readonly("positions", &CurrentTrace::positions)
      .def_readonly("currents", &CurrentTrace::currents);
  m.def(
      "current_trace",
      [](const ElectronState& e, const Tube& tube, const std::vector<double>& z,
         const QuadratureSpec& spec) { return current_trace(e, tube, z, spec); },
      py::arg("electron"), py::arg("tube"), py::arg("z_samples"),
      py::arg("quadrature") = QuadratureSpec{});
  m.def(
      "current_at",
      [](const ElectronState& e, const Tube& tube, double z) { return current_at(e, tube, z); },
      py::arg("electron"), py::arg("tube"), py::arg("z"));

  py::class_<EnergyLoss>(m, "EnergyLoss")
      .def_readonly("magnitude_ev", &EnergyLoss::magnitude_ev)
      .def_readonly("sign", &EnergyLoss::sign)
      .def_readonly("window_warning", &EnergyLoss::window_warning);
  m.def(
      "energy_loss",
      [](const ElectronState& e, const Tube& tube, const QuadratureSpec& spec) {
        return energy_loss(e, tube, spec);
      },
      py::arg("electron"), py::arg("tube"), py::arg("quadrature") = QuadratureSpec{});

  py::class_<EmfProfile>(m, "EmfProfile")
      .def_readonly("ring_positions", &EmfProfile::ring_positions)
      .def_readonly("azimuthal_field", &EmfProfile::azimuthal_field);
  m.def(
      "emf_profile",
      [](const ElectronState& e, const Tube& tube, double z, int n_rings) {
        return emf_profile(e, tube, z, n_rings);
      },
      py::arg("electron"), py::arg("tube"), py::arg("z"), py::arg("n_rings") = 400);

  py::class_<FieldGrid>(m, "FieldGrid")
      .def_readonly("r_axis", &FieldGrid::r_axis)
      .def_readonly("z_axis", &FieldGrid::z_axis)
      .def_readonly("energy_density", &FieldGrid::energy_density)
      .def_readonly("electron_position", &FieldGrid::electron_position)
      .def("at", &FieldGrid::at, py::arg("ir"), py::arg("iz"));
  m.def(
      "field_energy_map",
      [](const ElectronState& e, const Tube& tube, double electron_z,
         const std::vector<double>& r_axis, const std::vector<double>& z_axis, int n_rings) {
        return field_energy_map(e, tube, electron_z, r_axis, z_axis, n_rings);
      },
      py::arg("electron"), py::arg("tube"), py::arg("electron_z"), py::arg("r_axis"),
      py::arg("z_axis"), py::arg("n_rings") = 256);
  m.def(
      "total_field_energy", [](const FieldGrid& grid) { return total_field_energy(grid); },
      py::arg("grid"));

  py::class_<OffsetScanResult>(m, "OffsetScanResult")
      .def_readonly("offsets", &OffsetScanResult::offsets)
      .def_readonly("oam_values", &OffsetScanResult::oam_values)
      .def_readonly("peak_currents", &OffsetScanResult::peak_currents)
      .def_readonly("ratios", &OffsetScanResult::ratios);
  m.def(
      "offset_scan",
      [](const ElectronState& e, const Tube& tube, const std::vector<double>& offsets,
         const std::vector<int>& oams) { return offset_scan(e, tube, offsets, oams); },
      py::arg("electron"), py::arg("tube"), py::arg("offsets"), py::arg("oam_values"));

  py::class_<RlCircuit>(m, "RlCircuit")
      .def(py::init([](double resistance, double inductance) {
             return RlCircuit{resistance, inductance};
           }),
           py::arg("resistance"), py::arg("inductance"))
      .def_readwrite("resistance", &RlCircuit::resistance)
      .def_readwrite("inductance", &RlCircuit::inductance);
  m.def("default_resistance", &default_resistance, py::arg("tube"));
  m.def(
      "transit_time",
      [](const ElectronState& e, const Tube& tube) { return transit_time(e, tube); },
      py::arg("electron"), py::arg("tube"));

  py::class_<TimeTrace>(m, "TimeTrace")
      .def(py::init([](std::vector<double> times, std::vector<double> values) {
             TimeTrace trace;
             trace.times = std::move(times);
             trace.values = std::move(values);
             return trace;
           }),
           py::arg("times"), py::arg("values"))
      .def_readonly("times", &TimeTrace::times)
      .def_readonly("values", &TimeTrace::values);
  m.def(
      "emf_waveform",
      [](const ElectronState& e, const Tube& tube, const std::vector<double>& times,
         double resistance) { return emf_waveform(e, tube, times, resistance); },
      py::arg("electron"), py::arg("tube"), py::arg("times"), py::arg("resistance") = 0.0);
  m.def(
      "rl_response",
      [](const TimeTrace& emf, const RlCircuit& circuit, const OdeSpec& spec) {
        return rl_response(emf, circuit, spec);
      },
      py::arg("emf"), py::arg("circuit"), py::arg("spec"));
  m.def(
      "autocorrelation",
      [](const TimeTrace& current, const std::vector<double>& delays) {
        return autocorrelation(current, delays);
      },
      py::arg("current"), py::arg("delays"));

  py::class_<CircuitQuantumState>(m, "CircuitQuantumState")
      .def(py::init([](std::vector<std::complex<double>> amplitudes) {
             CircuitQuantumState state{std::move(amplitudes)};
             validate(state);
             return state;
           }),
           py::arg("amplitudes"))
      .def_readonly("amplitudes", &CircuitQuantumState::amplitudes);
  m.def("coherent_circuit_state", &coherent_circuit_state, py::arg("lambda_"),
        py::arg("dim") = 16);
  m.def("alpha_coefficient", &alpha_coefficient, py::arg("state_u"), py::arg("state_d"));

  py::class_<PathState>(m, "PathState")
      .def_static("balanced", &PathState::balanced, py::arg("delta"))
      .def_readwrite("relative_phase", &PathState::relative_phase)
      .def_readwrite("amplitude_u", &PathState::amplitude_u)
      .def_readwrite("amplitude_d", &PathState::amplitude_d);

  py::class_<ReducedDensityMatrix>(m, "ReducedDensityMatrix")
      .def_readonly("entries", &ReducedDensityMatrix::entries)
      .def("at", &ReducedDensityMatrix::at, py::arg("row"), py::arg("col"))
      .def("eigenvalues", &ReducedDensityMatrix::eigenvalues);
  m.def("reduced_density", &reduced_density, py::arg("path"), py::arg("state_u"),
        py::arg("state_d"));
  m.def("visibility", &visibility, py::arg("rho"));
  m.def("purity", &purity, py::arg("rho"));
  m.def("distinguishability", &distinguishability, py::arg("alpha"));

  py::class_<SamplingConfig>(m, "SamplingConfig")
      .def_readonly("z_min_m", &SamplingConfig::z_min_m)
      .def_readonly("z_max_m", &SamplingConfig::z_max_m)
      .def_readonly("n_samples", &SamplingConfig::n_samples);
  py::class_<CircuitConfig>(m, "CircuitConfig")
      .def_readonly("inductance_h", &CircuitConfig::inductance_h)
      .def_readonly("resistance_ohm", &CircuitConfig::resistance_ohm);
  py::class_<SimulationConfig>(m, "SimulationConfig")
      .def_readonly("electron", &SimulationConfig::electron)
      .def_readonly("tube", &SimulationConfig::tube)
      .def_readonly("sampling", &SimulationConfig::sampling)
      .def_readonly("circuit", &SimulationConfig::circuit)
      .def_readonly("quadrature", &SimulationConfig::quadrature);
  m.def("load_config", &load_config, py::arg("path"));
  m.def("sample_grid", &sample_grid, py::arg("sampling"));
}
