"""Hydrogenic bound states in d >= 2 dimensions: states, units, energies, R_nl(r).

Quantum numbers use the familiar 3D labels: n >= 1, 0 <= l <= n-1.  The
effective principal number is nu = n + (d-3)/2, so states with equal nu are
degenerate across dimensions (e.g. n=1, d=5 and n=2, d=3).

In two dimensions the angular label is the magnetic number m and l = |m|.
"""

import math
from dataclasses import dataclass
from math import lgamma

import numpy as np

from .special import LaguerreIndex, laguerre_eval


class InvalidStateError(ValueError):
    """Quantum numbers or physical parameters violate their invariants."""


@dataclass(frozen=True)
class QuantumState:
    n: int
    l: int
    d: int

    def __post_init__(self):
        for name in ("n", "l", "d"):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value:
                raise InvalidStateError(f"{name} must be an integer, got {value!r}")
        if self.n < 1:
            raise InvalidStateError("n must satisfy n >= 1")
        if not 0 <= self.l <= self.n - 1:
            raise InvalidStateError("l must satisfy 0 <= l <= n-1")
        if self.d < 2:
            raise InvalidStateError("d must satisfy d >= 2")

    @property
    def two_nu(self):
        """2 nu = 2n + d - 3, always a positive integer."""
        return 2 * self.n + self.d - 3

    @property
    def nu(self):
        return self.two_nu / 2

    @property
    def laguerre_index(self):
        return LaguerreIndex(a=2 * self.l + self.d - 2, b=self.n - self.l - 1)

    @property
    def inverse_square_defined(self):
        """False only for d=2, l=0, where <1/r^2> and everything built on it diverge."""
        return 2 * self.l + self.d - 2 >= 1


@dataclass(frozen=True)
class PhysicalParams:
    """Unit system. Defaults are natural units hbar = mu = a0 = 1."""

    Z: float = 1.0
    a0: float = 1.0
    hbar: float = 1.0
    mu: float = 1.0

    def __post_init__(self):
        for name in ("Z", "a0", "hbar", "mu"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidStateError(f"{name} must be a positive finite number, got {value!r}")


NATURAL = PhysicalParams()


@dataclass(frozen=True)
class RadialWavefunction:
    state: QuantumState
    params: PhysicalParams
    beta: float
    log_norm: float

    @property
    def norm(self):
        return math.exp(self.log_norm)

    def __call__(self, r):
        return eval_R(self, r)


def energy(state, params=NATURAL):
    """E = -Z^2 hbar^2 / (2 mu nu^2 a0^2)."""
    return -2.0 * params.Z**2 * params.hbar**2 / (params.mu * params.a0**2 * state.two_nu**2)


def wavefunction(state, params=NATURAL):
    n, l, d = state.n, state.l, state.d
    beta = 4.0 * params.Z / (state.two_nu * params.a0)
    log_norm = 0.5 * (
        d * math.log(beta) + lgamma(n - l) - math.log(state.two_nu) - lgamma(n + l + d - 2)
    )
    return RadialWavefunction(state=state, params=params, beta=beta, log_norm=log_norm)


def eval_R(wf, r):
    """R_nl(r) = N e^(-rho/2) rho^l L_b^a(rho), rho = beta r."""
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr < 0):
        raise ValueError("r must be non-negative")
    rho = wf.beta * r_arr
    l = wf.state.l
    lag = laguerre_eval(wf.state.laguerre_index, rho)
    positive = rho > 0
    # 0^0 = 1 for l = 0; rho^l vanishes at the origin otherwise
    log_power = np.where(positive, l * np.log(np.where(positive, rho, 1.0)), 0.0 if l == 0 else -np.inf)
    out = np.exp(wf.log_norm - 0.5 * rho + log_power) * lag
    return float(out) if out.ndim == 0 else out


def density(wf, r):
    """Radial probability density P(r) = r^(d-1) R(r)^2."""
    r_arr = np.asarray(r, dtype=float)
    out = r_arr ** (wf.state.d - 1) * np.square(eval_R(wf, r_arr))
    return float(out) if out.ndim == 0 else out


def effective_potential(state, params, r):
    """Coulomb term plus centrifugal and dimension-induced 1/r^2 terms."""
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0):
        raise ValueError("effective potential needs r > 0")
    n, l, d = state.n, state.l, state.d
    hbar, mu = params.hbar, params.mu
    coulomb = -params.Z * hbar**2 / (mu * params.a0 * r_arr)
    barrier = hbar**2 / (2 * mu) * (l * (l + d - 2) + (d - 1) * (d - 3) / 4) / r_arr**2
    out = coulomb + barrier
    return float(out) if out.ndim == 0 else out


def radial_grid(wf, r_max=None, points=2000, include_origin=False):
    """Uniform grid ending at ``r_max`` (default 10 <r>)."""
    if r_max is None:
        from .observables import expect_r

        r_max = 10.0 * expect_r(wf.state, wf.params)
    if r_max <= 0 or points < 2:
        raise ValueError("need r_max > 0 and points >= 2")
    if include_origin:
        return np.linspace(0.0, r_max, points)
    return np.linspace(0.0, r_max, points + 1)[1:]


def count_nodes(wf, r_max=None, points=2000):
    """Number of sign changes of R on (0, r_max]; exact zeros (underflow) are ignored."""
    values = eval_R(wf, radial_grid(wf, r_max, points))
    signs = np.sign(values)
    signs = signs[signs != 0]
    return int(np.count_nonzero(signs[1:] != signs[:-1]))
