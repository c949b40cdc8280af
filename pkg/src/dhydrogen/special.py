"""Generalized Laguerre polynomials L_b^a and the log-gamma norms they need.

Standard normalization throughout: L_0^a = 1, L_1^a = 1 + a - rho, and

    int_0^inf rho^a e^-rho L_b^a L_c^a drho = Gamma(a+b+1)/Gamma(b+1) delta_bc.

Only integer a, b >= 0 are supported.

Note on the derivative: with this normalization dL_b^a/drho = -L_{b-1}^{a+1}.
Some texts write +L_b^{a+1}; that form is never used here.  Derivatives are
taken from rho dL_b^a/drho = b L_b^a - (a+b) L_{b-1}^a.
"""

from dataclasses import dataclass
from math import lgamma

import numpy as np


@dataclass(frozen=True)
class LaguerreIndex:
    """Superscript ``a`` and degree ``b`` of L_b^a."""

    a: int
    b: int

    def __post_init__(self):
        if int(self.a) != self.a or int(self.b) != self.b:
            raise ValueError(f"Laguerre index must be integral, got a={self.a}, b={self.b}")
        if self.a < 0 or self.b < 0:
            raise ValueError(f"Laguerre index must be non-negative, got a={self.a}, b={self.b}")


def _as_rho(rho):
    arr = np.asarray(rho, dtype=float)
    if np.any(arr < 0):
        raise ValueError("rho must be non-negative")
    return arr


def _unwrap(arr):
    return float(arr) if arr.ndim == 0 else arr


def _laguerre_pair(a, b, rho):
    """Return (L_b^a, L_{b-1}^a) at ``rho``; L_{-1}^a is taken as 0."""
    prev = np.zeros_like(rho)
    cur = np.ones_like(rho)
    for k in range(b):
        # (k+1) L_{k+1} = (2k+1+a-rho) L_k - (k+a) L_{k-1}
        prev, cur = cur, ((2 * k + 1 + a - rho) * cur - (k + a) * prev) / (k + 1)
    return cur, prev


def laguerre_eval(idx, rho):
    """Evaluate L_b^a(rho) by the degree-ascending three-term recurrence.

    ``rho`` may be a scalar or an array; a scalar in gives a float out.
    """
    rho = _as_rho(rho)
    value, _ = _laguerre_pair(idx.a, idx.b, rho)
    return _unwrap(value)


def laguerre_derivative(idx, rho):
    """First derivative dL_b^a/drho for rho > 0."""
    rho = _as_rho(rho)
    if np.any(rho == 0):
        raise ValueError("laguerre_derivative needs rho > 0")
    if idx.b == 0:
        return _unwrap(np.zeros_like(rho))
    cur, prev = _laguerre_pair(idx.a, idx.b, rho)
    return _unwrap((idx.b * cur - (idx.a + idx.b) * prev) / rho)


def laguerre_second_derivative(idx, rho):
    """Second derivative from the Laguerre ODE.

    rho y'' + (a + 1 - rho) y' + b y = 0, so y'' = ((rho - a - 1) y' - b y) / rho.
    """
    rho = _as_rho(rho)
    if np.any(rho == 0):
        raise ValueError("laguerre_second_derivative needs rho > 0")
    if idx.b <= 1:
        return _unwrap(np.zeros_like(rho))
    a, b = idx.a, idx.b
    cur, prev = _laguerre_pair(a, b, rho)
    first = (b * cur - (a + b) * prev) / rho
    return _unwrap(((rho - a - 1) * first - b * cur) / rho)


def log_norm_sq(idx):
    """ln[Gamma(a+b+1)/Gamma(b+1)], the log of the squared weighted norm."""
    return lgamma(idx.a + idx.b + 1) - lgamma(idx.b + 1)
