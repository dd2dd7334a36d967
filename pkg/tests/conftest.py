"""Shared construction helpers for the test suite.

Plain functions rather than fixtures: every test seeds its own RNG, so
runs are reproducible and tests stay order-independent.
"""

from __future__ import annotations

import itertools
import random
from math import gcd

from k3cover.intmat import IntMatrix, rank, solve_left, xgcd
from k3cover.lattices import Sl2Matrix


def random_sl2(rng: random.Random, bound: int = 20) -> Sl2Matrix:
    """Random determinant-one integer matrix with entries bounded by `bound`."""
    while True:
        x = rng.randint(-bound, bound)
        z = rng.randint(-bound, bound)
        if gcd(x, z) != 1:
            continue
        # complete the coprime first column, then shear the second a little
        _, s, t = xgcd(x, z)
        k = rng.randint(-3, 3)
        y, w = -t + k * x, s + k * z
        if max(abs(y), abs(w)) <= bound:
            return Sl2Matrix(x, y, z, w)


def random_full_rank(rng: random.Random, n: int, m: int, bound: int = 5) -> IntMatrix:
    """Random n x m integer matrix of full row rank; needs n <= m."""
    while True:
        a = IntMatrix.from_rows(
            [[rng.randint(-bound, bound) for _ in range(m)] for _ in range(n)])
        if rank(a) == n:
            return a


# Doubled simple roots of E8 in the even coordinate model, one per row,
# ordered to match the Gram matrix of standard_lattice("E8_2"): indices
# 0 and 2..7 form the long chain, index 1 hangs off index 3.
_DOUBLED_SIMPLE_ROOTS = (
    (1, -1, -1, -1, -1, -1, -1, 1),
    (2, 2, 0, 0, 0, 0, 0, 0),
    (-2, 2, 0, 0, 0, 0, 0, 0),
    (0, -2, 2, 0, 0, 0, 0, 0),
    (0, 0, -2, 2, 0, 0, 0, 0),
    (0, 0, 0, -2, 2, 0, 0, 0),
    (0, 0, 0, 0, -2, 2, 0, 0),
    (0, 0, 0, 0, 0, -2, 2, 0),
)


def doubled_simple_roots() -> IntMatrix:
    return IntMatrix.from_rows([list(r) for r in _DOUBLED_SIMPLE_ROOTS])


def e8_root_coefficients() -> set[tuple[int, ...]]:
    """The 240 roots of E8 as integer coefficient vectors over the simple roots.

    Built independently of the package's search code: the coordinate model
    lists the doubled roots directly (112 vectors with two entries +-2, and
    128 vectors of all +-1 with an even number of minus signs), and each is
    converted by solving one linear system against the simple root rows.
    """
    s = doubled_simple_roots()
    doubled: list[tuple[int, ...]] = []
    for i in range(8):
        for j in range(i + 1, 8):
            for si in (2, -2):
                for sj in (2, -2):
                    v = [0] * 8
                    v[i], v[j] = si, sj
                    doubled.append(tuple(v))
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            doubled.append(signs)
    assert len(doubled) == 240
    out: set[tuple[int, ...]] = set()
    for r in doubled:
        sol = solve_left(s, r)
        assert sol is not None, "coordinate root outside the simple-root span"
        assert all(f.denominator == 1 for f in sol), "non-integral root coefficients"
        out.add(tuple(int(f) for f in sol))
    assert len(out) == 240
    return out
