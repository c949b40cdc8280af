"""Exact radial observables of the d-dimensional hydrogenic atom, with a quadrature oracle."""

from .hydrogen import (
    NATURAL,
    InvalidStateError,
    PhysicalParams,
    QuantumState,
    RadialWavefunction,
    density,
    effective_potential,
    energy,
    eval_R,
    wavefunction,
)
from .observables import UNDEFINED, ObservableReport, UndefinedObservableError, full_report
from .quadrature import DivergentIntegralError, ObservableKind, build_rule, expectation_oracle, moment_integral
from .special import LaguerreIndex, laguerre_derivative, laguerre_eval, log_norm_sq
from .validate import commutator_check, sweep_validate, validate_state

__version__ = "0.1.0"
