"""Witness vectors in the odd Lorentzian lattice <-1> + <1>^10.

A covering certificate for the interesting branch needs a vector x =
(x0, x1, .., x10) with -x0^2 + x1^2 + .. + x10^2 = -N lying in the region P:

    gcd(x0..x10) = 1,  x1 >= x2 >= ... >= x10 > 0,
    x0 >= x1 + x2 + x3,  3*x0 > x1 + ... + x10.

Closed-form families cover every N >= 3 except N = 4 (N = 16 is reached by
slice search); for N in {1, 2, 4} no vector of P has norm -N, which the
slice enumerator verifies at desk scale and the per-slice maximum formulas
certify beyond it.

Slices are indexed by x0 = m and enumerated lexicographically descending.
A slice deliberately drops the gcd condition: the maximum-norm table is
stated for the plain cone slices (its slice-8 maximizer is divisible by 2),
and searching the larger set only strengthens absence results.  Full
membership, gcd included, is what in_P checks.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

SLICE_CAP = 20          # desk-scale cap on x0 for exhaustive slice work
ABSENT = frozenset({1, 2, 4})   # norms -N with no witness in P

Vector11 = tuple[int, ...]


def norm(v) -> int:
    v = tuple(v)
    if len(v) != 11:
        raise ValueError("vectors here have 11 coordinates")
    return -v[0] * v[0] + sum(x * x for x in v[1:])


def in_P(v) -> bool:
    """Membership in the fundamental-domain slice region described above."""
    v = tuple(v)
    if len(v) != 11:
        raise ValueError("vectors here have 11 coordinates")
    g = 0
    for x in v:
        g = gcd(g, x)
    if g != 1:
        return False
    tail = v[1:]
    if any(tail[i] < tail[i + 1] for i in range(9)) or tail[9] <= 0:
        return False
    if v[0] < tail[0] + tail[1] + tail[2]:
        return False
    return 3 * v[0] > sum(tail)


def _desc(*chunks: tuple[int, int]) -> tuple[int, ...]:
    """Expand ((value, count), ...) runs and sort descending."""
    out: list[int] = []
    for value, count in chunks:
        out.extend([value] * count)
    return tuple(sorted(out, reverse=True))


def _family_x(m: int, k: int) -> Vector11:
    if m == 0:
        return (9 * k + 4,) + _desc((3 * k + 2, 1), (3 * k + 1, 7), (3 * k - 1, 1), (2, 1))
    if m == 2:
        return (9 * k + 4,) + _desc((3 * k + 2, 1), (3 * k + 1, 6), (3 * k, 2), (2, 1))
    if m == 4:
        return (12 * k + 4,) + _desc((4 * k + 2, 1), (4 * k + 1, 7), (4 * k, 1), (1, 1))
    if m == 6:
        return (9 * k + 5,) + _desc((3 * k + 2, 2), (3 * k + 1, 7), (2, 1))
    if m == 8:
        return (9 * k + 7,) + _desc((3 * k + 3, 1), (3 * k + 2, 7), (3 * k, 1), (2, 1))
    if m == 10:
        return (12 * k + 7,) + _desc((4 * k + 3, 1), (4 * k + 2, 7), (4 * k + 1, 1), (1, 1))
    if m == 12:
        return (12 * k + 9,) + _desc((4 * k + 3, 7), (4 * k + 2, 1), (4 * k + 1, 1), (1, 1))
    if m == 14:
        return (9 * k + 8,) + _desc((3 * k + 3, 2), (3 * k + 2, 7), (2, 1))
    if m == 16:
        return (9 * k + 10,) + _desc((3 * k + 4, 1), (3 * k + 3, 7), (3 * k + 1, 1), (2, 1))
    if m == 18:
        return (12 * k + 12,) + _desc((4 * k + 4, 7), (4 * k + 3, 1), (4 * k + 2, 1), (1, 1))
    if m == 20:
        return (6 * k + 12,) + _desc((2 * k + 6, 1), (2 * k + 3, 8), (4, 1))
    if m == 22:
        return (9 * k + 11,) + _desc((3 * k + 4, 2), (3 * k + 3, 7), (2, 1))
    raise ValueError(f"no X family for residue {m}")


# family name -> (builder, minimal parameter, norm as a function of the parameter)
FAMILIES: dict[str, tuple] = {
    "X0": (lambda k: _family_x(0, k), 1, lambda k: 24 * k),
    "X2": (lambda k: _family_x(2, k), 1, lambda k: 2 + 24 * k),
    "X4": (lambda k: _family_x(4, k), 1, lambda k: 4 + 24 * k),
    "X6": (lambda k: _family_x(6, k), 1, lambda k: 6 + 24 * k),
    "X8": (lambda k: _family_x(8, k), 1, lambda k: 8 + 24 * k),
    "X10": (lambda k: _family_x(10, k), 0, lambda k: 10 + 24 * k),
    "X12": (lambda k: _family_x(12, k), 0, lambda k: 12 + 24 * k),
    "X14": (lambda k: _family_x(14, k), 0, lambda k: 14 + 24 * k),
    "X16": (lambda k: _family_x(16, k), 1, lambda k: 16 + 24 * k),
    "X18": (lambda k: _family_x(18, k), 0, lambda k: 18 + 24 * k),
    "X20": (lambda k: _family_x(20, k), 1, lambda k: 20 + 24 * k),
    "X22": (lambda k: _family_x(22, k), 0, lambda k: 22 + 24 * k),
    "Y6": (lambda _: (4,) + _desc((1, 10)), 0, lambda _: 6),
    "Y8": (lambda _: (6,) + _desc((2, 6), (1, 4)), 0, lambda _: 8),
    "Y20": (lambda _: (6,) + _desc((2, 2), (1, 8)), 0, lambda _: 20),
    "Z": (lambda n: (3 * n + 1,) + _desc((n + 1, 1), (n, 8), (1, 1)), 1, lambda n: 4 * n - 1),
    "W": (lambda n: (3 * n,) + _desc((n, 7), (n - 1, 2), (1, 1)), 2, lambda n: 4 * n - 3),
}


def family_vector(name: str, param: int = 0) -> Vector11:
    """Closed-form witness; verified against the region and its stated norm."""
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}")
    build, min_param, norm_of = FAMILIES[name]
    if param < min_param:
        raise ValueError(f"family {name} needs parameter >= {min_param}")
    v = build(param)
    expected = -norm_of(param)
    if norm(v) != expected or not in_P(v):
        raise AssertionError(f"BUG: family {name}({param}) fails its own contract")
    return v


@lru_cache(maxsize=None)
def _slice_members(m: int) -> tuple[Vector11, ...]:
    """The cone slice at x0 = m, lexicographic descending on (x1..x10)."""
    out: list[Vector11] = []
    budget = 3 * m - 1      # sum of the tail must stay <= budget
    tail = [0] * 10

    def walk(i: int, prev: int, head3: int, total: int) -> None:
        if i == 10:
            out.append((m, *tail))
            return
        hi = min(prev, budget - total - (9 - i))
        if i < 3:
            hi = min(hi, m - head3 - (2 - i))
        for v in range(hi, 0, -1):
            tail[i] = v
            walk(i + 1, v, head3 + v if i < 3 else head3, total + v)

    walk(0, m, 0, 0)
    return tuple(out)


def enumerate_P_slice(m: int) -> list[Vector11]:
    """The slice x0 = m of the ordering and cone conditions (gcd not applied).

    Desk scale only: 3 <= m <= SLICE_CAP.
    """
    if not 3 <= m <= SLICE_CAP:
        raise ValueError(f"slice index must lie in [3, {SLICE_CAP}]")
    return list(_slice_members(m))


def max_norm_in_slice(m: int) -> int | None:
    """Largest norm over the slice; None when the slice is empty."""
    members = enumerate_P_slice(m)
    if not members:
        return None
    return max(norm(v) for v in members)


def predicted_max_norm(m: int) -> int | None:
    """Slice maximum by the closed formulas; None for the empty slice m = 3."""
    if not 3 <= m <= SLICE_CAP:
        raise ValueError(f"slice index must lie in [3, {SLICE_CAP}]")
    if m == 3:
        return None
    if m == 5:
        return -7
    if m == 6:
        return -5
    if m == 8:
        return -12
    q, r = divmod(m, 3)
    if r == 0:
        return 5 - 4 * q
    if r == 1:
        return 1 - 4 * q
    return 9 - 8 * q


def slice_maximizer(m: int) -> Vector11 | None:
    """A slice member achieving predicted_max_norm(m); None for m = 3."""
    if not 3 <= m <= SLICE_CAP:
        raise ValueError(f"slice index must lie in [3, {SLICE_CAP}]")
    if m == 3:
        return None
    if m == 5:
        return (5,) + _desc((3, 1), (1, 9))
    if m == 6:
        return (6,) + _desc((2, 7), (1, 3))
    if m == 8:
        return (8,) + _desc((4, 1), (2, 9))
    q, r = divmod(m, 3)
    if r == 0:
        return (m,) + _desc((q, 8), (q - 2, 1), (1, 1))
    if r == 1:
        return (m,) + _desc((q + 1, 1), (q, 8), (1, 1))
    return (m,) + _desc((q + 2, 1), (q, 8), (3, 1))


def search_norm(n: int, x0_cap: int | None = None) -> Vector11 | None:
    """A vector of P with norm -n, or None when no such vector exists.

    Closed-form families are preferred; slice search (x0 up to x0_cap,
    clamped to desk scale) covers the few values the families miss.  For
    n in {1, 2, 4} the answer None is exhaustive: slices are searched up to
    14 and the per-slice maximum formulas exclude everything beyond.
    """
    if n <= 0:
        raise ValueError("search target must be a positive integer")
    if x0_cap is None:
        x0_cap = 3 * n
    if n in (6, 8, 20):
        return family_vector(f"Y{n}")
    if n % 2 == 1:
        if n % 4 == 3:
            return family_vector("Z", (n + 1) // 4)
        if n >= 5:
            return family_vector("W", (n + 3) // 4)
    else:
        name = f"X{n % 24}"
        k, min_param = n // 24, FAMILIES[f"X{n % 24}"][1]
        if k >= min_param:
            return family_vector(name, k)
    limit = min(max(x0_cap, 14), SLICE_CAP)
    for m in range(3, limit + 1):
        for v in _slice_members(m):
            if norm(v) == -n and in_P(v):
                return v
    return None
