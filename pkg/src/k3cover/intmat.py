"""Exact integer matrix algebra.

Everything here runs on arbitrary-precision Python ints (plus Fraction for
the one rational solve).  No floating point anywhere: determinants, Hermite
and Smith forms, kernels and adjugates are computed exactly, so the
certificate machinery built on top can be replayed bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) = a*x + b*y and g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix.

    `entries` is a tuple of row tuples; `rows`/`cols` are stored explicitly
    so zero-row matrices keep their column count.
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.entries) != self.rows:
            raise ValueError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")
            for x in row:
                if not isinstance(x, int):
                    raise ValueError("matrix entries must be integers")

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        ents = tuple(tuple(int(x) for x in row) for row in rows)
        ncols = len(ents[0]) if ents else 0
        return cls(len(ents), ncols, ents)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple(tuple(0 for _ in range(cols)) for _ in range(rows)))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(tuple(self.entries[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ot = other.transpose().entries
        ents = tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in ot)
                     for row in self.entries)
        return IntMatrix(self.rows, other.cols, ents)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols,
                         tuple(tuple(-x for x in row) for row in self.entries))

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols,
                         tuple(tuple(k * x for x in row) for row in self.entries))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        e = self.entries
        return all(e[i][j] == e[j][i] for i in range(self.rows) for j in range(i))

    def take_columns(self, cols) -> "IntMatrix":
        cols = tuple(cols)
        return IntMatrix(self.rows, len(cols),
                         tuple(tuple(row[j] for j in cols) for row in self.entries))

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def det(self) -> int:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        return _det_bareiss(self.to_lists())

    def adjugate(self) -> "IntMatrix":
        """Adj(A) with A @ Adj(A) = Adj(A) @ A = det(A) * I."""
        if not self.is_square():
            raise ValueError("adjugate of a non-square matrix")
        n = self.rows
        if n == 0:
            return IntMatrix(0, 0, ())
        if n == 1:
            return IntMatrix(1, 1, ((1,),))
        e = self.entries
        # adj[i][j] = (-1)^(i+j) * minor with row j and column i deleted
        adj = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                sub = [[e[r][c] for c in range(n) if c != i] for r in range(n) if r != j]
                adj[i][j] = (-1) ** (i + j) * _det_bareiss(sub)
        return IntMatrix.from_rows(adj)


def _det_bareiss(m: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; exact for integer matrices."""
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def hnf(a: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form with transform: returns (H, U), U @ a == H.

    U is unimodular.  H is in row echelon form with positive pivots and
    entries above each pivot reduced into [0, pivot).  Zero rows sink to
    the bottom, so the nonzero rows of H are a canonical basis of the row
    lattice of `a`.
    """
    h = a.to_lists()
    n, m = a.rows, a.cols
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    r = 0
    for c in range(m):
        # clear column c below row r, accumulating the gcd in row r
        piv = None
        for i in range(r, n):
            if h[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            h[r], h[piv] = h[piv], h[r]
            u[r], u[piv] = u[piv], u[r]
        for i in range(r + 1, n):
            if h[i][c] == 0:
                continue
            g, x, y = xgcd(h[r][c], h[i][c])
            p, q = h[r][c] // g, h[i][c] // g
            # [[x, y], [-q, p]] has determinant 1 and sends the pair to (g, 0)
            h[r], h[i] = ([x * hr + y * hi for hr, hi in zip(h[r], h[i])],
                          [-q * hr + p * hi for hr, hi in zip(h[r], h[i])])
            u[r], u[i] = ([x * ur + y * ui for ur, ui in zip(u[r], u[i])],
                          [-q * ur + p * ui for ur, ui in zip(u[r], u[i])])
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q:
                h[i] = [hi - q * hr for hi, hr in zip(h[i], h[r])]
                u[i] = [ui - q * ur for ui, ur in zip(u[i], u[r])]
        r += 1
        if r == n:
            break
    return IntMatrix.from_rows(h) if n else IntMatrix(0, m, ()), IntMatrix.from_rows(u) if n else IntMatrix(0, 0, ())


def rank(a: IntMatrix) -> int:
    h, _ = hnf(a)
    return sum(1 for row in h.entries if any(row))


def left_kernel(a: IntMatrix) -> IntMatrix:
    """Basis of {y integer row : y @ a = 0}, as rows of the result.

    The kernel of an integer matrix is saturated, and the returned basis is
    canonical (its own Hermite normal form).
    """
    h, u = hnf(a)
    ker = [u.entries[i] for i in range(a.rows) if not any(h.entries[i])]
    if not ker:
        return IntMatrix(0, a.rows, ())
    canon, _ = hnf(IntMatrix.from_rows(ker))
    return canon


def solve_left(a: IntMatrix, target) -> tuple[Fraction, ...] | None:
    """Rational solution x of x @ a = target, or None if inconsistent.

    Used for lattice membership: target lies in the row span of `a` over Q
    iff a solution exists, and in the integer row span iff that solution
    can be chosen integral (unique when `a` has full row rank).
    """
    target = tuple(target)
    if len(target) != a.cols:
        raise ValueError("target length does not match column count")
    # solve a^T x^T = target^T by exact Gaussian elimination
    n, m = a.rows, a.cols
    aug = [[Fraction(a.entries[i][j]) for i in range(n)] + [Fraction(target[j])]
           for j in range(m)]
    pivots: list[int] = []
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, m) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = aug[row][col]
        aug[row] = [x / inv for x in aug[row]]
        for i in range(m):
            if i != row and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
    for i in range(row, m):
        if aug[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        x[col] = aug[r][n]
    return tuple(x)


def maximal_minors(a: IntMatrix):
    """Yield the determinant of every rows x rows column submatrix."""
    n = a.rows
    for cols in combinations(range(a.cols), n):
        yield a.take_columns(cols).det()


def maximal_minor_gcd(a: IntMatrix) -> int:
    """gcd of all maximal minors; 0 when the matrix is not of full row rank."""
    if a.rows > a.cols:
        raise ValueError("more rows than columns")
    d = 0
    for minor in maximal_minors(a):
        d = gcd(d, minor)
        if d == 1:
            return 1
    return d


def smith_invariant_factors(a: IntMatrix) -> tuple[int, ...]:
    """Nonzero invariant factors d_1 | d_2 | ... of the matrix, all positive.

    Classic elimination: move a nonzero entry of smallest magnitude to the
    pivot, clear its row and column (swapping remainders back in), then fold
    any entry the pivot fails to divide into the pivot row and repeat.
    """
    m = a.to_lists()
    rows, cols = a.rows, a.cols
    factors: list[int] = []
    top = 0
    while top < rows and top < cols:
        pr = pc = -1
        best = None
        for i in range(top, rows):
            for j in range(top, cols):
                v = abs(m[i][j])
                if v and (best is None or v < best):
                    best, pr, pc = v, i, j
        if best is None:
            break
        m[top], m[pr] = m[pr], m[top]
        for row_ in m:
            row_[top], row_[pc] = row_[pc], row_[top]
        # clear row and column of the pivot
        dirty = True
        while dirty:
            dirty = False
            for i in range(top + 1, rows):
                if m[i][top]:
                    q = m[i][top] // m[top][top]
                    m[i] = [x - q * y for x, y in zip(m[i], m[top])]
                    if m[i][top]:
                        m[top], m[i] = m[i], m[top]
                        dirty = True
            for j in range(top + 1, cols):
                if m[top][j]:
                    q = m[top][j] // m[top][top]
                    for row_ in m:
                        row_[j] -= q * row_[top]
                    if m[top][j]:
                        for row_ in m:
                            row_[top], row_[j] = row_[j], row_[top]
                        dirty = True
            if not dirty:
                # enforce divisibility: pivot must divide everything below/right
                p = m[top][top]
                off = next(((i, j) for i in range(top + 1, rows)
                            for j in range(top + 1, cols) if m[i][j] % p), None)
                if off is not None:
                    i, _ = off
                    m[top] = [x + y for x, y in zip(m[top], m[i])]
                    dirty = True
        factors.append(abs(m[top][top]))
        top += 1
    return tuple(factors)
