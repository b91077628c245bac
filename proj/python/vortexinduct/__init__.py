"""Eddy currents induced by an OAM-carrying electron in a conductive tube."""

from ._core import (
    CircuitConfig,
    CircuitQuantumState,
    ConfigError,
    CurrentTrace,
    ElectronState,
    EmfProfile,
    EnergyLoss,
    FieldGrid,
    FourCurrent,
    Kinematics,
    LoopModel,
    NonConvergenceError,
    OdeSpec,
    OffsetScanResult,
    PathState,
    PhysicalConstants,
    QuadratureSpec,
    ReducedDensityMatrix,
    RlCircuit,
    SamplingConfig,
    SimulationConfig,
    TimeTrace,
    Tube,
    alpha_coefficient,
    autocorrelation,
    boost_four_current,
    coherent_circuit_state,
    current_at,
    current_trace,
    default_resistance,
    distinguishability,
    ellip_e,
    ellip_k,
    emf_profile,
    emf_waveform,
    energy_loss,
    field_energy_map,
    flux_dipole,
    integrate,
    kinematics_from_energy,
    lg_radial_density,
    load_config,
    loop_model,
    offset_scan,
    purity,
    reduced_density,
    rl_response,
    sample_grid,
    solve_ode,
    total_field_energy,
    transit_time,
    tube_radius_adequate,
    vector_potential,
    visibility,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
