"""Positive definite binary quadratic forms and Gauss reduction.

A form p x^2 + q x y + r y^2 is reduced when |q| <= p <= r, with q >= 0 on
the boundary (|q| = p or p = r).  Every positive definite form is equivalent
to exactly one reduced form, and the reduced form starts with the minimum of
the form, so "represents 1" is just "reduced leading coefficient is 1".
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattices import Sl2Matrix, TranscendentalForm


@dataclass(frozen=True)
class BinaryForm:
    """p x^2 + q x y + r y^2 with p > 0 and negative discriminant."""

    p: int
    q: int
    r: int

    def __post_init__(self) -> None:
        if self.p <= 0:
            raise ValueError("leading coefficient must be positive")
        if self.discriminant >= 0:
            raise ValueError("form must be positive definite (q^2 - 4pr < 0)")

    @property
    def discriminant(self) -> int:
        return self.q * self.q - 4 * self.p * self.r

    def triple(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)

    def is_reduced(self) -> bool:
        p, q, r = self.p, self.q, self.r
        if not (abs(q) <= p <= r):
            return False
        if (abs(q) == p or p == r) and q < 0:
            return False
        return True


def evaluate(f: BinaryForm, x: int, y: int) -> int:
    return f.p * x * x + f.q * x * y + f.r * y * y


def transform(f: BinaryForm, g: Sl2Matrix) -> BinaryForm:
    """The equivalent form f((x, y) sent through g), i.e. basis change by g."""
    p = evaluate(f, g.x, g.z)
    r = evaluate(f, g.y, g.w)
    q = 2 * f.p * g.x * g.y + f.q * (g.x * g.w + g.y * g.z) + 2 * f.r * g.z * g.w
    return BinaryForm(p, q, r)


def reduce_form(f: BinaryForm) -> tuple[BinaryForm, Sl2Matrix]:
    """Gauss reduction.  Returns (reduced, g) with transform(f, g) == reduced."""
    g = Sl2Matrix.identity()
    cur = f
    while True:
        # translate q into (-p, p]
        t = (cur.p - cur.q) // (2 * cur.p)
        if t:
            step = Sl2Matrix(1, t, 0, 1)
            cur = transform(cur, step)
            g = g.compose(step)
        if cur.p > cur.r:
            step = Sl2Matrix(0, -1, 1, 0)
            cur = transform(cur, step)
            g = g.compose(step)
            continue
        break
    if cur.p == cur.r and cur.q < 0:
        step = Sl2Matrix(0, -1, 1, 0)
        cur = transform(cur, step)
        g = g.compose(step)
    assert cur.is_reduced(), f"BUG: reduction ended on non-reduced form {cur}"
    return cur, g


def represents_one(f: BinaryForm) -> bool:
    """Whether f(x, y) = 1 has an integer solution."""
    reduced, _ = reduce_form(f)
    return reduced.p == 1


def shifted_form(t: TranscendentalForm) -> BinaryForm:
    """The form (a, c - 2a, a + b - c), equivalent to (a, c, b).

    This is the coefficient form controlling norm -2 vectors orthogonal to
    the standard rank-2 embedding used for the even-c classification branch:
    such a vector exists precisely when this form represents 1.
    """
    return BinaryForm(t.a, t.c - 2 * t.a, t.a + t.b - t.c)
