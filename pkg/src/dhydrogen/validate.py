"""Closed form vs quadrature comparisons, operator identities, and sweeps."""

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from . import lowdim
from . import observables as obs
from .hydrogen import NATURAL, QuantumState, energy
from .quadrature import ObservableKind, expectation_oracle

REL_FLOOR = 1e-300
PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped: excluded domain"


class Check(enum.Enum):
    NORM = "NORM"
    R = "R"
    R2 = "R2"
    INV_R = "INV_R"
    INV_R2 = "INV_R2"
    P_R = "P_R"
    P_R2 = "P_R2"
    DELTA_R = "DELTA_R"
    SIGMA_R = "SIGMA_R"
    DELTA_PR = "DELTA_PR"
    PRODUCT = "PRODUCT"
    VIRIAL = "VIRIAL"
    HF_INV_R2 = "HF_INV_R2"


# checks that need <1/r^2>; skipped for d=2, l=0
INVERSE_SQUARE_CHECKS = frozenset(
    {Check.INV_R2, Check.P_R2, Check.DELTA_PR, Check.PRODUCT, Check.HF_INV_R2}
)


@dataclass(frozen=True)
class ValidationRecord:
    state: QuantumState
    kind: str
    closed_form: float | None
    oracle: float | None
    alt_route: float | None
    rel_error: float | None
    verdict: str
    tolerance: float

    @property
    def passed(self):
        return self.verdict == PASS

    @property
    def skipped(self):
        return self.verdict.startswith("skipped")

    def to_dict(self):
        return {
            "n": self.state.n,
            "l": self.state.l,
            "d": self.state.d,
            "kind": self.kind,
            "closed_form": self.closed_form,
            "oracle": self.oracle,
            "alt_route": self.alt_route,
            "rel_error": self.rel_error,
            "verdict": self.verdict,
            "tolerance": self.tolerance,
        }


def rel_error(value, reference):
    return abs(value - reference) / max(abs(reference), REL_FLOOR)


def _record(state, kind, closed, oracle, tolerance, alt=None, scale=None):
    if scale is None:
        err = rel_error(closed, oracle)
        alt_errs = [] if alt is None else [rel_error(alt, oracle), rel_error(alt, closed)]
    else:
        # absolute check against a natural scale, for quantities whose exact value is 0
        err = abs(closed - oracle) / scale
        alt_errs = [] if alt is None else [abs(alt - oracle) / scale]
    ok = err <= tolerance and all(e <= tolerance for e in alt_errs)
    return ValidationRecord(
        state=state,
        kind=kind.value,
        closed_form=closed,
        oracle=oracle,
        alt_route=alt,
        rel_error=err,
        verdict=PASS if ok else FAIL,
        tolerance=tolerance,
    )


def _skipped(state, kind, tolerance):
    return ValidationRecord(state, kind.value, None, None, None, None, SKIPPED, tolerance)


def validate_state(state, params=NATURAL, tolerance=1e-10):
    """One record per check in ``Check`` order; excluded checks are marked skipped."""
    if not tolerance > 0:
        raise ValueError("tolerance must be positive")

    def quad(kind):
        return expectation_oracle(state, params, kind)

    q_norm = quad(ObservableKind.NORM)
    q_r = quad(ObservableKind.R)
    q_r2 = quad(ObservableKind.R2)
    q_inv_r = quad(ObservableKind.INV_R)
    q_pr = quad(ObservableKind.P_R)
    q_delta_r = math.sqrt(q_r2 - q_r * q_r)
    momentum_scale = params.Z * params.hbar / params.a0

    records = {
        Check.NORM: _record(state, Check.NORM, 1.0, q_norm, tolerance),
        Check.R: _record(state, Check.R, obs.expect_r(state, params), q_r, tolerance),
        Check.R2: _record(state, Check.R2, obs.expect_r2(state, params), q_r2, tolerance),
        Check.INV_R: _record(state, Check.INV_R, obs.expect_inv_r(state, params), q_inv_r, tolerance),
        Check.P_R: _record(
            state, Check.P_R, obs.expect_pr(state, params), abs(q_pr), tolerance, scale=momentum_scale
        ),
        Check.DELTA_R: _record(
            state,
            Check.DELTA_R,
            obs.delta_r(state, params),
            q_delta_r,
            tolerance,
            alt=math.sqrt(obs.expect_r2(state, params) - obs.expect_r(state, params) ** 2),
        ),
        Check.SIGMA_R: _record(state, Check.SIGMA_R, obs.sigma_r(state), q_delta_r / q_r, tolerance),
        Check.VIRIAL: _record(
            state,
            Check.VIRIAL,
            2 * energy(state, params),
            -params.Z * params.hbar**2 / (params.mu * params.a0) * q_inv_r,
            tolerance,
            alt=obs.expect_V(state, params),
        ),
    }

    if state.inverse_square_defined:
        q_inv_r2 = quad(ObservableKind.INV_R2)
        q_pr2 = quad(ObservableKind.P_R2)
        q_delta_pr = math.sqrt(q_pr2 - abs(q_pr) ** 2)
        records.update(
            {
                Check.INV_R2: _record(state, Check.INV_R2, obs.expect_inv_r2(state, params), q_inv_r2, tolerance),
                Check.P_R2: _record(
                    state,
                    Check.P_R2,
                    obs.expect_pr2(state, params),
                    q_pr2,
                    tolerance,
                    alt=obs.expect_pr2_potential_route(state, params),
                ),
                Check.DELTA_PR: _record(state, Check.DELTA_PR, obs.delta_pr(state, params), q_delta_pr, tolerance),
                Check.PRODUCT: _record(
                    state,
                    Check.PRODUCT,
                    obs.product(state, params),
                    q_delta_r * q_delta_pr,
                    tolerance,
                    alt=obs.product_closed_form(state, params),
                ),
                Check.HF_INV_R2: _record(
                    state,
                    Check.HF_INV_R2,
                    obs.hellmann_feynman_inv_r2(state, params),
                    q_inv_r2,
                    tolerance,
                    alt=obs.expect_inv_r2(state, params),
                ),
            }
        )
    else:
        for kind in INVERSE_SQUARE_CHECKS:
            records[kind] = _skipped(state, kind, tolerance)

    return [records[kind] for kind in Check]


def commutator_check(state, params=NATURAL, probe_count=3, radii=None):
    """Max |([r, p_r] f) / (i hbar f) - 1| over probes f = r^j e^(-r/2).

    ``j`` runs over l, ..., l + probe_count inclusive.  Derivatives of the probes are
    exact; the operator is p_r = -i hbar (d/dr + (d-1)/(2r)).
    """
    if probe_count < 1:
        raise ValueError("probe_count must be >= 1")
    r = np.linspace(0.05, 20.0, 400) if radii is None else np.asarray(radii, dtype=float)
    hbar = params.hbar
    shift = (state.d - 1) / 2
    worst = 0.0
    for j in range(state.l, state.l + probe_count + 1):
        f = r**j * np.exp(-r / 2)
        df = (j / r - 0.5) * f
        rf = r * f
        drf = f + r * df
        # r (p_r f) and p_r (r f)
        r_pr_f = r * (-1j * hbar) * (df + shift / r * f)
        pr_rf = (-1j * hbar) * (drf + shift / r * rf)
        ratio = (r_pr_f - pr_rf) / (1j * hbar * f)
        worst = max(worst, float(np.max(np.abs(ratio - 1))))
    return worst


@dataclass
class SweepSummary:
    records: list = field(default_factory=list)
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    worst: ValidationRecord | None = None

    @property
    def ok(self):
        return self.failed == 0

    def to_dict(self):
        return {
            "summary": {
                "passed": self.passed,
                "failed": self.failed,
                "skipped": self.skipped,
                "worst_rel_error": None if self.worst is None else self.worst.rel_error,
                "worst": None if self.worst is None else self.worst.to_dict(),
            },
            "records": [rec.to_dict() for rec in self.records],
        }


def admissible_states(n_max, d_min, d_max):
    """All valid (n, l, d) in range, ordered by (n, l, d)."""
    return [
        QuantumState(n, l, d)
        for n in range(1, n_max + 1)
        for l in range(n)
        for d in range(d_min, d_max + 1)
    ]


def sweep_validate(n_max=6, d_min=2, d_max=12, params=NATURAL, tolerance=1e-10):
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if d_min < 2 or d_min > d_max:
        raise ValueError("need 2 <= d_min <= d_max")
    summary = SweepSummary()
    for state in admissible_states(n_max, d_min, d_max):
        for rec in validate_state(state, params, tolerance):
            summary.records.append(rec)
            if rec.skipped:
                summary.skipped += 1
                continue
            if rec.passed:
                summary.passed += 1
            else:
                summary.failed += 1
            if summary.worst is None or rec.rel_error > summary.worst.rel_error:
                summary.worst = rec
    return summary


def specialization_records(n_max=6, params=NATURAL, tolerance=1e-12):
    """General-d closed forms at d=2 and d=3 against the written-out 2D/3D forms."""
    general = {
        "energy": energy,
        "expect_r": obs.expect_r,
        "expect_r2": obs.expect_r2,
        "expect_inv_r": obs.expect_inv_r,
        "expect_inv_r2": obs.expect_inv_r2,
        "delta_r": obs.delta_r,
        "delta_pr": obs.delta_pr,
    }
    out = []
    for d in (2, 3):
        table = lowdim.table_for(d)
        for n in range(1, n_max + 1):
            for l in range(n):
                state = QuantumState(n, l, d)
                for name, fn in general.items():
                    if d == 2 and l == 0 and name in lowdim.TWO_D_NEEDS_L:
                        try:
                            fn(state, params)
                        except obs.UndefinedObservableError:
                            verdict = SKIPPED
                        else:
                            verdict = FAIL
                        out.append(ValidationRecord(state, name, None, None, None, None, verdict, tolerance))
                        continue
                    closed = fn(state, params)
                    ref = table[name](n, l, params)
                    err = rel_error(closed, ref)
                    out.append(
                        ValidationRecord(
                            state, name, closed, ref, None, err, PASS if err <= tolerance else FAIL, tolerance
                        )
                    )
    return out
