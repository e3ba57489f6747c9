"""Collective Rabi oscillations and trap loss in cold collisions inside a cavity."""

from ._core import (
    CavityConfig,
    CollisionTimes,
    CouplingMode,
    DivergenceError,
    DomainError,
    ConfigError,
    LossPoint,
    PModel,
    PhysicalParams,
    ScanConfig,
    collective_rabi,
    collision_times,
    condon_radius,
    g0,
    integrate_master,
    landau_zener,
    loss_closed_form,
    loss_no_cavity,
    loss_series,
    max_stable_step,
    mhz_to_rad_s,
    p_omega_analytic,
    p_omega_approx,
    pair_count,
    rad_s_to_mhz,
    rb85,
    resolve_params,
    scan_detuning,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
