"""Gauss-Laguerre quadrature and the radial expectation-value oracle.

The oracle integrates every radial expectation value numerically, sharing
only polynomial evaluation (``special.laguerre_*``) with the closed forms.
All hydrogenic integrands reduce to rho^p e^-rho times a polynomial, so a
Gauss-Laguerre rule of sufficient order is exact up to rounding.
"""

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .special import (
    laguerre_derivative,
    laguerre_eval,
    laguerre_second_derivative,
)

MAX_ORDER = 500
MAX_NEWTON_STEPS = 100
_STALL_TOL = 1e-11
_RESCALE = 1e150
_LOG_RESCALE = math.log(_RESCALE)


class QuadratureError(RuntimeError):
    """Rule construction failed."""


class DivergentIntegralError(ValueError):
    """The requested radial integral does not converge at r = 0."""


class ObservableKind(enum.Enum):
    NORM = "norm"
    R = "r"
    R2 = "r2"
    INV_R = "inv_r"
    INV_R2 = "inv_r2"
    P_R = "p_r"
    P_R2 = "p_r2"


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights for int_0^inf f(rho) e^-rho drho.

    ``log_weights`` is kept alongside ``weights`` because the outermost
    weights of high-order rules underflow double precision.
    """

    nodes: np.ndarray
    weights: np.ndarray
    log_weights: np.ndarray
    order: int

    def integrate(self, values):
        return float(np.dot(self.weights, values))


def _scaled_laguerre0(n, x):
    """(L_n^0(x), L_{n-1}^0(x), log_scale) with the pair rescaled to stay finite."""
    prev, cur, log_scale = 0.0, 1.0, 0.0
    for k in range(n):
        prev, cur = cur, ((2 * k + 1 - x) * cur - k * prev) / (k + 1)
        if abs(cur) > _RESCALE:
            prev /= _RESCALE
            cur /= _RESCALE
            log_scale += _LOG_RESCALE
    return cur, prev, log_scale


def _christoffel_log_weight(n, x):
    """log w = -log sum_{k<n} L_k^0(x)^2.

    The sum of squares has no cancellation, so it tolerates the last-digit
    node error far better than x / ((n+1) L_{n+1}(x))^2.
    """
    prev, cur, total, log_scale = 0.0, 1.0, 1.0, 0.0
    for k in range(n - 1):
        prev, cur = cur, ((2 * k + 1 - x) * cur - k * prev) / (k + 1)
        total += cur * cur
        if abs(cur) > _RESCALE:
            prev /= _RESCALE
            cur /= _RESCALE
            total /= _RESCALE * _RESCALE
            log_scale += _LOG_RESCALE
    return -(math.log(total) + 2.0 * log_scale)


def _initial_guess(i, n, nodes):
    # asymptotic seeds for the zeros of L_n^0 (Stroud & Secrest style)
    if i == 0:
        return 3.0 / (1.0 + 2.4 * n)
    if i == 1:
        return nodes[0] + 15.0 / (1.0 + 2.5 * n)
    ai = i - 1
    return nodes[i - 1] + (1.0 + 2.55 * ai) / (1.9 * ai) * (nodes[i - 1] - nodes[i - 2])


def build_rule(order):
    """Gauss-Laguerre rule of the given order, nodes found by Newton iteration."""
    if not isinstance(order, (int, np.integer)) or not 1 <= order <= MAX_ORDER:
        raise ValueError(f"order must be an integer in [1, {MAX_ORDER}], got {order!r}")
    return _build_rule(int(order))


@lru_cache(maxsize=None)
def _build_rule(n):
    nodes = []
    log_weights = []
    for i in range(n):
        z = _initial_guess(i, n, nodes)
        last = math.inf
        for _ in range(MAX_NEWTON_STEPS):
            p, p1, _ = _scaled_laguerre0(n, z)
            # z L_n' = n (L_n - L_{n-1})
            step = z * p / (n * (p - p1))
            z -= step
            size = abs(step)
            if size <= 1e-14 * (1.0 + z):
                break
            # high orders: recurrence rounding puts a floor near n * eps under the step
            if size <= _STALL_TOL * (1.0 + z) and size >= 0.5 * last:
                break
            last = size
        else:
            raise QuadratureError(f"Newton iteration did not converge for node {i} of order {n}")
        if z <= 0 or (nodes and z <= nodes[-1]):
            raise QuadratureError(f"node {i} of order {n} converged out of order (z={z!r})")
        nodes.append(z)
        log_weights.append(_christoffel_log_weight(n, z))
    nodes = np.array(nodes)
    log_weights = np.array(log_weights)
    for arr in (nodes, log_weights):
        arr.setflags(write=False)
    weights = np.exp(log_weights)
    weights.setflags(write=False)
    return QuadratureRule(nodes=nodes, weights=weights, log_weights=log_weights, order=n)


def required_order(degree):
    """Rule order used for a polynomial integrand of the given degree (+4 margin)."""
    return min(MAX_ORDER, math.ceil((degree + 1) / 2) + 4)


def _scaled_sum(rule, power, values):
    """int rho^power e^-rho f(rho) drho as (sum, log_scale), value = sum * exp(log_scale).

    ``values`` holds f at the rule's nodes.
    """
    logs = power * np.log(rule.nodes) + rule.log_weights
    top = float(np.max(logs))
    return float(np.dot(np.exp(logs - top), values)), top


def moment_integral(idx, k, order=None):
    """int_0^inf rho^(a+k) e^-rho [L_b^a(rho)]^2 drho by Gauss-Laguerre quadrature.

    ``order`` overrides the automatic choice; it is clamped up to the exact minimum.
    """
    s, top = _moment_scaled(idx, k, order)
    return s * math.exp(top)


def _moment_scaled(idx, k, order=None):
    power = idx.a + k
    if power < 0:
        raise DivergentIntegralError(
            f"rho^{power} e^-rho [L_{idx.b}^{idx.a}]^2 is not integrable at rho = 0"
        )
    needed = required_order(power + 2 * idx.b)
    rule = build_rule(needed if order is None else max(order, needed - 4))
    lag = laguerre_eval(idx, rule.nodes)
    return _scaled_sum(rule, power, lag * lag)


def expectation_oracle(state, params, observable):
    """<A> = int r^(d-1) R (A R) dr evaluated by quadrature in rho = beta r.

    P_R returns the (purely imaginary in exact arithmetic) expectation of the
    Hermitian radial momentum as a complex number; every other kind is real.
    """
    from .hydrogen import wavefunction

    observable = ObservableKind(observable)
    wf = wavefunction(state, params)
    idx = state.laguerre_index
    a, b, l, d = idx.a, idx.b, state.l, state.d
    beta, hbar = wf.beta, params.hbar

    moments = {
        ObservableKind.NORM: 0,
        ObservableKind.R: 1,
        ObservableKind.R2: 2,
        ObservableKind.INV_R: -1,
        ObservableKind.INV_R2: -2,
    }
    if observable in moments:
        power = moments[observable]
        s, top = _moment_scaled(idx, power + 1)
        return s * math.exp(top + 2.0 * wf.log_norm - (d + power) * math.log(beta))

    # R(rho) = N e^-rho/2 rho^l L(rho)
    # dR/drho   = N e^-rho/2 rho^(l-1) A,  A = rho (L' - L/2) + l L
    # d2R/drho2 = N e^-rho/2 rho^(l-2) B,  B = rho^2 (L'' - L' + L/4) + 2 l rho (L' - L/2) + l (l-1) L
    if observable is ObservableKind.P_R:
        rule = build_rule(required_order(a + 2 * b + 1))
        rho = rule.nodes
        lag = laguerre_eval(idx, rho)
        dlag = laguerre_derivative(idx, rho)
        first = rho * (dlag - 0.5 * lag) + l * lag
        s, top = _scaled_sum(rule, a, lag * (first + 0.5 * (d - 1) * lag))
        value = s * math.exp(top + 2.0 * wf.log_norm - (d - 1) * math.log(beta))
        return complex(0.0, -hbar * value)

    # P_R2: -hbar^2 (d2/dr2 + (d-1)/r d/dr + (d-1)(d-3)/(4 r^2))
    if a < 1:
        raise DivergentIntegralError("<p_r^2> diverges for d=2, l=0")
    rule = build_rule(required_order(a + 2 * b + 1))
    rho = rule.nodes
    lag = laguerre_eval(idx, rho)
    dlag = laguerre_derivative(idx, rho)
    d2lag = laguerre_second_derivative(idx, rho)
    first = rho * (dlag - 0.5 * lag) + l * lag
    second = (
        rho * rho * (d2lag - dlag + 0.25 * lag)
        + 2 * l * rho * (dlag - 0.5 * lag)
        + l * (l - 1) * lag
    )
    bracket = second + (d - 1) * first + 0.25 * (d - 1) * (d - 3) * lag
    s, top = _scaled_sum(rule, a - 1, lag * bracket)
    return -hbar * hbar * s * math.exp(top + 2.0 * wf.log_norm - (d - 2) * math.log(beta))


def energy_route_pr2(state, params):
    """<p_r^2> = 2 mu (E - <V_eff>) with <V_eff> assembled from quadrature moments."""
    from .hydrogen import energy

    d, l = state.d, state.l
    hbar, mu = params.hbar, params.mu
    inv_r = expectation_oracle(state, params, ObservableKind.INV_R)
    inv_r2 = expectation_oracle(state, params, ObservableKind.INV_R2)
    coulomb = -params.Z * hbar * hbar / (mu * params.a0) * inv_r
    centrifugal = hbar * hbar / (2 * mu) * (l * (l + d - 2) + (d - 1) * (d - 3) / 4) * inv_r2
    return 2 * mu * (energy(state, params) - (coulomb + centrifugal))
