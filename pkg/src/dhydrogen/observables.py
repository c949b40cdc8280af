"""Closed-form radial observables of the d-dimensional hydrogenic atom.

The polynomial brackets are evaluated in exact integer (or Fraction)
arithmetic and converted to float only when combined with the unit system.
Quantities that depend on <1/r^2> diverge for d=2, l=0; they raise
``UndefinedObservableError`` from the individual functions and appear as
``UNDEFINED`` in a ``full_report``.
"""

import math
from dataclasses import asdict, dataclass
from fractions import Fraction

from .hydrogen import NATURAL, energy


class UndefinedObservableError(ValueError):
    """Observable diverges for the requested state (d=2, l=0)."""


class _Undefined:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNDEFINED"

    def __str__(self):
        return "undefined(d=2,l=0)"

    def __bool__(self):
        return False

    def __reduce__(self):
        return (_Undefined, ())


UNDEFINED = _Undefined()
UNDEFINED_REASON = "undefined: divergent for d=2, l=0"


def _require_inverse_square(state):
    if not state.inverse_square_defined:
        raise UndefinedObservableError(UNDEFINED_REASON)


# -- integer brackets --------------------------------------------------------

def r_bracket(n, l, d):
    """d^2 + d(6n-2l-7) + 2(3n^2-9n-l^2+2l+6); <r> = (a0/4Z) * this."""
    return d * d + d * (6 * n - 2 * l - 7) + 2 * (3 * n * n - 9 * n - l * l + 2 * l + 6)


def r2_bracket(n, l, d):
    """Cubic bracket of <r^2> = (a0^2/8Z^2) nu * this."""
    return (
        d**3
        + d**2 * (12 * n - 6 * l - 12)
        + d * (30 * n**2 - 6 * l**2 - 12 * n * l - 78 * n + 30 * l + 47)
        + (20 * n**3 - 12 * n * l**2 - 90 * n**2 + 18 * l**2 + 24 * n * l + 130 * n - 36 * l - 60)
    )


def delta_r_radicand(n, l, d):
    """Quartic radicand of Delta r = (a0/4Z) sqrt(this)."""
    return (
        d**3 * (2 * n - 2 * l - 1)
        + d**2 * (6 * n**2 - 6 * l**2 - 18 * n + 12 * l + 10)
        + d * (8 * n**3 - 8 * l**3 - 36 * n**2 + 24 * l**2 + 62 * n - 22 * l - 33)
        + (4 * n**4 - 4 * l**4 - 24 * n**3 + 16 * l**3 + 62 * n**2 - 22 * l**2 - 78 * n + 12 * l + 36)
    )


def momentum_factor(n, l, d):
    """1 - ((d-1)(d-3) + 4l(l+d-2)) / ((2n+d-3)(2l+d-2)), exact."""
    return 1 - Fraction((d - 1) * (d - 3) + 4 * l * (l + d - 2), (2 * n + d - 3) * (2 * l + d - 2))


# -- position moments --------------------------------------------------------

def expect_r(state, params=NATURAL):
    return params.a0 / (4 * params.Z) * r_bracket(state.n, state.l, state.d)


def expect_r2(state, params=NATURAL):
    # nu/8 = (2n+d-3)/16
    exact = Fraction(state.two_nu * r2_bracket(state.n, state.l, state.d), 16)
    return float(exact) * (params.a0 / params.Z) ** 2


def delta_r(state, params=NATURAL):
    radicand = delta_r_radicand(state.n, state.l, state.d)
    if radicand < 0:
        raise ArithmeticError(f"negative Delta r radicand {radicand} for {state}")
    return params.a0 / (4 * params.Z) * math.sqrt(radicand)


def sigma_r(state):
    """Relative dispersion Delta r / <r>; independent of units."""
    n, l, d = state.n, state.l, state.d
    return math.sqrt(delta_r_radicand(n, l, d)) / r_bracket(n, l, d)


def expect_inv_r(state, params=NATURAL):
    # Z / (nu^2 a0) = 4Z / ((2n+d-3)^2 a0)
    return 4 * params.Z / (state.two_nu**2 * params.a0)


def expect_V(state, params=NATURAL):
    """<V> for V(r) = -Z hbar^2 / (mu a0 r)."""
    return -params.Z * params.hbar**2 / (params.mu * params.a0) * expect_inv_r(state, params)


def expect_inv_r2(state, params=NATURAL):
    _require_inverse_square(state)
    # 2 Z^2 / (a0^2 (2l+d-2) nu^3) = 16 Z^2 / (a0^2 (2l+d-2) (2n+d-3)^3)
    a = 2 * state.l + state.d - 2
    return 16 * params.Z**2 / (params.a0**2 * a * state.two_nu**3)


def _denergy_dnu(state, params):
    # E(nu) = -Z^2 hbar^2 / (2 mu a0^2 nu^2)
    nu = state.nu
    return params.Z**2 * params.hbar**2 / (params.mu * params.a0**2 * nu**3)


def hellmann_feynman_inv_r2(state, params=NATURAL):
    """<1/r^2> = (2 mu / hbar^2) / (2l+d-2) * dE/dl, with dn/dl = 1."""
    _require_inverse_square(state)
    dE_dl = _denergy_dnu(state, params)
    return 2 * params.mu / params.hbar**2 / (2 * state.l + state.d - 2) * dE_dl


# -- momentum ----------------------------------------------------------------

def expect_pr(state, params=NATURAL):
    return 0.0


def expect_pr2(state, params=NATURAL):
    _require_inverse_square(state)
    scale = 4 * (params.Z * params.hbar / params.a0) ** 2 / state.two_nu**2
    return scale * float(momentum_factor(state.n, state.l, state.d))


def expect_pr2_potential_route(state, params=NATURAL):
    """-mu <V> - hbar^2 [(d-1)(d-3)/4 + l(l+d-2)] <1/r^2>."""
    _require_inverse_square(state)
    l, d = state.l, state.d
    barrier = (d - 1) * (d - 3) / 4 + l * (l + d - 2)
    return -params.mu * expect_V(state, params) - params.hbar**2 * barrier * expect_inv_r2(state, params)


def delta_pr(state, params=NATURAL):
    return math.sqrt(expect_pr2(state, params) - expect_pr(state, params) ** 2)


def product(state, params=NATURAL):
    return delta_r(state, params) * delta_pr(state, params)


def product_closed_form(state, params=NATURAL):
    """Delta r Delta p_r written out as one expression."""
    _require_inverse_square(state)
    n, l, d = state.n, state.l, state.d
    nu = n + (d - 3) / 2
    return (
        math.sqrt(delta_r_radicand(n, l, d))
        * params.hbar
        / (4 * nu)
        * math.sqrt(1 - ((d - 1) * (d - 3) + 4 * l * (l + d - 2)) / ((2 * n + d - 3) * (2 * l + d - 2)))
    )


# -- report ------------------------------------------------------------------

@dataclass(frozen=True)
class ObservableReport:
    state: object
    params: object
    expect_r: float
    expect_r2: float
    expect_inv_r: float
    expect_inv_r2: object
    expect_pr: float
    expect_pr2: object
    delta_r: float
    delta_pr: object
    sigma_r: float
    product: object
    energy: float
    expect_V: float

    def values(self):
        """Observable name -> float or UNDEFINED, in field order."""
        out = asdict(self)
        out.pop("state")
        out.pop("params")
        return out


def _or_undefined(fn, state, params):
    return fn(state, params) if state.inverse_square_defined else UNDEFINED


def full_report(state, params=NATURAL):
    return ObservableReport(
        state=state,
        params=params,
        expect_r=expect_r(state, params),
        expect_r2=expect_r2(state, params),
        expect_inv_r=expect_inv_r(state, params),
        expect_inv_r2=_or_undefined(expect_inv_r2, state, params),
        expect_pr=expect_pr(state, params),
        expect_pr2=_or_undefined(expect_pr2, state, params),
        delta_r=delta_r(state, params),
        delta_pr=_or_undefined(delta_pr, state, params),
        sigma_r=sigma_r(state),
        product=_or_undefined(product, state, params),
        energy=energy(state, params),
        expect_V=expect_V(state, params),
    )


OBSERVABLES = (
    "expect_r",
    "expect_r2",
    "expect_inv_r",
    "expect_inv_r2",
    "expect_pr",
    "expect_pr2",
    "delta_r",
    "delta_pr",
    "sigma_r",
    "product",
    "energy",
    "expect_V",
)
