"""Complete short-vector enumeration in negative definite lattices.

Exact arithmetic throughout: bounds propagate through a rational Cholesky
factorization and integer square roots, never floats, so the "no vector of
norm -2 exists" answers used in certificates are genuinely exhaustive.

Vectors come in +/- pairs; one representative per pair is returned, the one
whose first nonzero coordinate is positive, in lexicographic order.

Two performance devices, neither affecting results:
  * optional LLL reduction (delta = 3/4) of the Gram matrix before search;
  * the Gram matrix is split into orthogonal connected components, each
    enumerated once and memoized per (component, bound), then recombined.
The doubled E8 block recurring in every covering-certificate complement is
therefore enumerated a single time per process.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .intmat import IntMatrix
from .lattices import IntegralLattice

NORM_CEILING = 64


@dataclass(frozen=True)
class NormQuery:
    """Search request: exact norm (floor=False) or all norms >= target."""

    lattice: IntegralLattice
    target_norm: int
    floor: bool = False


def _validate(q: NormQuery, ceiling: int) -> int:
    if q.target_norm >= 0:
        raise ValueError("target norm must be negative in a negative definite lattice")
    bound = -q.target_norm
    if bound > ceiling:
        raise ValueError(f"|target norm| {bound} exceeds the ceiling {ceiling}")
    return bound


def _cholesky(q: list[list[Fraction]]) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Q(x) = sum_i d[i] * (x_i + sum_{j>i} u[i][j] x_j)^2; requires Q > 0."""
    n = len(q)
    m = [row[:] for row in q]
    d = [Fraction(0)] * n
    u = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = m[i][i]
        if d[i] <= 0:
            raise ValueError("gram matrix is not definite")
        for j in range(i + 1, n):
            u[i][j] = m[i][j] / d[i]
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                m[r][c] -= m[i][r] * m[i][c] / d[i]
    return d, u


def _check_negative_definite(lattice: IntegralLattice) -> None:
    if lattice.rank == 0:
        return
    neg = [[Fraction(-x) for x in row] for row in lattice.gram.entries]
    try:
        _cholesky(neg)
    except ValueError:
        raise ValueError("lattice must be negative definite") from None


def lll_reduce_gram(gram: IntMatrix, delta: Fraction = Fraction(3, 4)) -> tuple[IntMatrix, IntMatrix]:
    """LLL-reduce a positive definite integer Gram matrix.

    Returns (reduced, U) with U unimodular and U @ gram @ U^T == reduced.
    Operates on the Gram matrix alone: every basis operation is mirrored as
    a congruence (row plus matching column update), and Gram-Schmidt data is
    recomputed exactly; ranks here stay <= 12 so that is cheap.
    """
    n = gram.rows
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    g = [list(row) for row in gram.entries]

    def row_op(k: int, j: int, r: int) -> None:
        # basis_k -= r * basis_j
        u[k] = [x - r * y for x, y in zip(u[k], u[j])]
        g[k] = [x - r * y for x, y in zip(g[k], g[j])]
        for row in g:
            row[k] -= r * row[j]

    def swap(k: int) -> None:
        u[k], u[k - 1] = u[k - 1], u[k]
        g[k], g[k - 1] = g[k - 1], g[k]
        for row in g:
            row[k], row[k - 1] = row[k - 1], row[k]

    def gram_schmidt():
        mu = [[Fraction(0)] * n for _ in range(n)]
        b = [Fraction(0)] * n
        for i in range(n):
            for j in range(i):
                s = Fraction(g[i][j])
                for l in range(j):
                    s -= mu[j][l] * mu[i][l] * b[l]
                mu[i][j] = s / b[j]
            s = Fraction(g[i][i])
            for l in range(i):
                s -= mu[i][l] * mu[i][l] * b[l]
            b[i] = s
        return mu, b

    mu, b = gram_schmidt()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            r = round(mu[k][j])
            if r:
                row_op(k, j, r)
                mu, b = gram_schmidt()
        if b[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * b[k - 1]:
            k += 1
        else:
            swap(k)
            mu, b = gram_schmidt()
            k = max(k - 1, 1)
    return IntMatrix.from_rows(g), IntMatrix.from_rows(u)


def _level_range(c: Fraction, budget: Fraction) -> tuple[int, int]:
    """Integers x with (x + c)^2 <= budget, via exact integer square roots."""
    if budget < 0:
        return 1, 0
    cp, cq = c.numerator, c.denominator
    rp, rq = budget.numerator, budget.denominator
    s = isqrt((rp * cq * cq) // rq)
    lo = -((s + cp) // cq)
    hi = (s - cp) // cq
    return lo, hi


def _fp_groups(q: list[list[int]], bound: int) -> dict[int, list[tuple[int, ...]]]:
    """All x != 0 with x Q x^T <= bound (Q positive definite), grouped by value.

    One representative per +/- pair: the deepest assigned coordinate that is
    nonzero is positive (callers re-normalize signs after any basis change).
    """
    n = len(q)
    d, u = _cholesky([[Fraction(x) for x in row] for row in q])
    groups: dict[int, list[tuple[int, ...]]] = {}
    x = [0] * n

    def walk(level: int, budget: Fraction, all_zero: bool) -> None:
        if level < 0:
            used = Fraction(bound) - budget
            assert used.denominator == 1, "BUG: non-integer form value"
            groups.setdefault(int(used), []).append(tuple(x))
            return
        c = Fraction(0)
        urow = u[level]
        for j in range(level + 1, n):
            if urow[j] and x[j]:
                c += urow[j] * x[j]
        lo, hi = _level_range(c, budget / d[level])
        if all_zero:
            lo = max(lo, 0)
        for v in range(lo, hi + 1):
            x[level] = v
            zero_here = all_zero and v == 0
            if level == 0 and zero_here:
                continue
            spent = d[level] * (v + c) ** 2
            walk(level - 1, budget - spent, zero_here)
        x[level] = 0

    walk(n - 1, Fraction(bound), True)
    return groups


def _canonical_sign(vec: tuple[int, ...]) -> tuple[int, ...]:
    for v in vec:
        if v > 0:
            return vec
        if v < 0:
            return tuple(-x for x in vec)
    return vec


_CACHE: dict[tuple, tuple[int, dict[int, tuple[tuple[int, ...], ...]]]] = {}


def _component_groups(gram_rows: tuple[tuple[int, ...], ...], bound: int,
                      reduce_basis: bool) -> dict[int, tuple[tuple[int, ...], ...]]:
    """Memoized enumeration of one definite block up to the given bound."""
    key = (gram_rows, reduce_basis)
    hit = _CACHE.get(key)
    if hit is not None and hit[0] >= bound:
        return {val: vecs for val, vecs in hit[1].items() if val <= bound}
    n = len(gram_rows)
    q = [[-x for x in row] for row in gram_rows]
    if reduce_basis and n >= 3:
        reduced, trans = lll_reduce_gram(IntMatrix.from_rows(q))
        raw = _fp_groups(reduced.to_lists(), bound)
        tr = trans.entries
        groups = {}
        for val, vecs in raw.items():
            back = [_canonical_sign(tuple(sum(y[i] * tr[i][j] for i in range(n))
                                          for j in range(n))) for y in vecs]
            groups[val] = tuple(sorted(back))
    else:
        raw = _fp_groups(q, bound)
        groups = {val: tuple(sorted(_canonical_sign(v) for v in vecs))
                  for val, vecs in raw.items()}
    _CACHE[key] = (bound, groups)
    return groups


def clear_cache() -> None:
    _CACHE.clear()


def _components(gram: IntMatrix) -> list[tuple[int, ...]]:
    """Connected components of the Gram matrix's nonzero pattern, by index."""
    n = gram.rows
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and gram.entries[i][j] != 0:
                    seen[j] = True
                    stack.append(j)
        comps.append(tuple(sorted(comp)))
    return comps


def _iter_vectors(lattice: IntegralLattice, bound: int, exact: int | None,
                  reduce_basis: bool):
    """Yield (vector, norm) for 0 != v with norm >= -bound (or == -exact)."""
    n = lattice.rank
    if n == 0:
        return
    comps = _components(lattice.gram)
    groups = []
    for comp in comps:
        sub = tuple(tuple(lattice.gram.entries[i][j] for j in comp) for i in comp)
        groups.append(_component_groups(sub, bound, reduce_basis))

    def rec(ci: int, used: int, parts: list, any_nonzero: bool):
        if ci == len(comps):
            if any_nonzero and (exact is None or used == exact):
                full = [0] * n
                for comp, part in zip(comps, parts):
                    if part is not None:
                        vec, sign = part
                        for pos, coord in zip(comp, vec):
                            full[pos] = sign * coord
                yield _canonical_sign(tuple(full)), -used
            return
        yield from rec(ci + 1, used, parts + [None], any_nonzero)
        for val, vecs in groups[ci].items():
            if used + val > bound:
                continue
            for v in vecs:
                yield from rec(ci + 1, used + val, parts + [(v, 1)], True)
                if any_nonzero:
                    yield from rec(ci + 1, used + val, parts + [(v, -1)], True)

    yield from rec(0, 0, [], False)


def enumerate_by_norm(lattice: IntegralLattice, floor_norm: int, *,
                      ceiling: int = NORM_CEILING,
                      reduce_basis: bool = True) -> dict[int, tuple[tuple[int, ...], ...]]:
    """All norm classes >= floor_norm: {norm: sorted vectors}, exact and complete."""
    q = NormQuery(lattice, floor_norm, floor=True)
    bound = _validate(q, ceiling)
    _check_negative_definite(lattice)
    out: dict[int, list[tuple[int, ...]]] = {}
    for vec, norm in _iter_vectors(lattice, bound, None, reduce_basis):
        out.setdefault(norm, []).append(vec)
    return {norm: tuple(sorted(vecs)) for norm, vecs in sorted(out.items())}


def enumerate_norm(q: NormQuery, *, ceiling: int = NORM_CEILING,
                   reduce_basis: bool = True) -> list[tuple[int, ...]]:
    """All vectors of the requested norm (or all norms >= it when q.floor).

    One representative per +/- pair, first nonzero coordinate positive,
    sorted lexicographically.
    """
    bound = _validate(q, ceiling)
    _check_negative_definite(q.lattice)
    exact = None if q.floor else bound
    vecs = [v for v, _ in _iter_vectors(q.lattice, bound, exact, reduce_basis)]
    return sorted(vecs)


def has_norm(q: NormQuery, *, ceiling: int = NORM_CEILING,
             reduce_basis: bool = True) -> bool:
    """Existence check; stops at the first witness."""
    bound = _validate(q, ceiling)
    _check_negative_definite(q.lattice)
    exact = None if q.floor else bound
    return next(_iter_vectors(q.lattice, bound, exact, reduce_basis), None) is not None
