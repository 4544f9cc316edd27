"""Steady-state photon statistics of the two-photon Jaynes-Cummings model."""

from ._core import (
    ConfigError,
    DriveKind,
    DriveSpec,
    Error,
    InvalidArgument,
    Label,
    ModelParams,
    Resonance,
    SingularSystem,
    StatisticsReport,
    TransitionKind,
    analytic,
    classify,
    effective_model,
    hamiltonian_lab,
    hamiltonian_rotating,
    poisson_reference,
    resonance_locations,
    solve,
    spectrum_block,
    steady_state,
    sweep,
)

__all__ = [name for name in dir() if not name.startswith("_")]
