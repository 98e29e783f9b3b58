"""Graviton-induced decoherence of nonrelativistic particles."""

import json

from ._gravdec import (
    ConvergenceError,
    DomainError,
    GravitonState,
    InputError,
    NewtonianSource,
    Piece,
    StateKind,
    SystemParams,
    cross_section,
    cutoff_frequency,
    dec_time_long,
    dec_time_numeric,
    dec_time_short,
    f_function,
    g_function,
    gamma1,
    gamma2,
    gamma_by_quadrature,
    log_long_time_state_factor,
    mass_threshold,
    momentum_threshold,
    recoherence_log_seconds,
    saturation_value,
)
from . import _gravdec

__all__ = [
    "ConvergenceError",
    "DomainError",
    "GravitonState",
    "InputError",
    "NewtonianSource",
    "Piece",
    "StateKind",
    "SystemParams",
    "cross_section",
    "cutoff_frequency",
    "dec_time_long",
    "dec_time_numeric",
    "dec_time_short",
    "dec_times",
    "eval_csv",
    "f_function",
    "fingerprint",
    "g_function",
    "gamma1",
    "gamma2",
    "gamma_by_quadrature",
    "log_long_time_state_factor",
    "mass_threshold",
    "molecule_scenario",
    "momentum_threshold",
    "oracle_check",
    "recoherence_log_seconds",
    "saturation_value",
    "sweep_csv",
    "tables",
]


def _text(scenario):
    return scenario if isinstance(scenario, str) else json.dumps(scenario)


def molecule_scenario():
    """Default scenario as a dict, suitable for editing and passing back."""
    return json.loads(_gravdec._molecule_scenario())


def eval_csv(scenario):
    return _gravdec._eval_csv(_text(scenario))


def fingerprint(scenario):
    return _gravdec._fingerprint(_text(scenario))


def tables():
    return json.loads(_gravdec._tables())


def dec_times(scenario):
    return json.loads(_gravdec._dec_times(_text(scenario)))


def oracle_check(scenario, threshold=1e-6):
    return json.loads(_gravdec._oracle_check(_text(scenario), threshold))


def sweep_csv(scenario, path, values):
    return _gravdec._sweep_csv(_text(scenario), path, list(values))
