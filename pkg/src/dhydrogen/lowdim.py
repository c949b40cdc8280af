"""Textbook-style closed forms for the 2D and 3D hydrogenic atom.

These are written out independently of the general-d expressions and are
used as regression fixtures for them.  In 2D ``l`` stands for |m|.
Natural units hbar = mu = 1 are *not* assumed; every function takes the
same ``PhysicalParams``.
"""

import math

# each table maps an observable name to f(n, l, params)

THREE_D = {
    "energy": lambda n, l, p: -(p.Z**2) * p.hbar**2 / (2 * p.mu * n**2 * p.a0**2),
    "expect_r": lambda n, l, p: 0.5 * p.a0 / p.Z * (3 * n**2 - l * (l + 1)),
    "expect_r2": lambda n, l, p: 0.5 * n**2 * p.a0**2 / p.Z**2 * (5 * n**2 - 3 * l * (l + 1) + 1),
    "expect_inv_r": lambda n, l, p: p.Z / (n**2 * p.a0),
    "expect_inv_r2": lambda n, l, p: 2 * p.Z**2 / ((2 * l + 1) * n**3 * p.a0**2),
    "delta_r": lambda n, l, p: 0.5 * p.a0 / p.Z * math.sqrt(n**2 * (n**2 + 2) - (l * (l + 1)) ** 2),
    "delta_pr": lambda n, l, p: p.Z * p.hbar / (n * p.a0) * math.sqrt(1 - 2 * l * (l + 1) / (n * (2 * l + 1))),
}

TWO_D = {
    "energy": lambda n, l, p: -(p.Z**2) * p.hbar**2 / (2 * p.mu * (n - 0.5) ** 2 * p.a0**2),
    "expect_r": lambda n, l, p: 0.5 * p.a0 / p.Z * (3 * n**2 - 3 * n - l**2 + 1),
    "expect_r2": lambda n, l, p: p.a0**2
    / (8 * p.Z**2)
    * (2 * n - 1)
    * (n * (10 * n**2 - 15 * n + 11) - 3 * l**2 * (2 * n - 1) - 3),
    "expect_inv_r": lambda n, l, p: p.Z / ((n - 0.5) ** 2 * p.a0),
    "expect_inv_r2": lambda n, l, p: p.Z**2 / (p.a0**2 * l * (n - 0.5) ** 3),
    "delta_r": lambda n, l, p: p.a0
    / (2 * math.sqrt(2) * p.Z)
    * math.sqrt(n * (2 * n**2 * (n - 2) + 7 * n - 5) - l**2 * (2 * l**2 - 1) + 1),
    "delta_pr": lambda n, l, p: p.Z * p.hbar / ((n - 0.5) * p.a0) * math.sqrt(1 - (2 * l - 1 / (2 * l)) / (2 * n - 1)),
}

# observables that only exist for l != 0 in two dimensions
TWO_D_NEEDS_L = frozenset({"expect_inv_r2", "delta_pr"})


def table_for(d):
    if d == 3:
        return THREE_D
    if d == 2:
        return TWO_D
    raise ValueError(f"no low-dimensional table for d={d}")

