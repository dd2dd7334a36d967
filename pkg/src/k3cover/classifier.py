"""Decides which definite even binary forms admit an Enriques quotient.

The input (a, b, c) stands for the Gram matrix [[2a, c], [c, 2b]] of the
transcendental lattice of a singular K3 surface.  The surface doubly covers
an Enriques surface exactly when that lattice embeds primitively into
U + U(2) + E8(2) so that no vector of norm -2 is orthogonal to the image.
Whether this is possible depends only on the parities of a, b, c up to
SL2(Z) and, in one branch, on the discriminant:

    I      a, b, c all even    covers
    II     c odd, ab even      covers (explicit embedding written down)
    III    c even, a or b odd  covers unless 4ab - c^2 is 4, 8 or 16
    IV     a, b, c all odd     never covers

Case III splits on whether the form represents 1.  If it does not (III-1)
an explicit embedding works; if it does, a covering amounts to a vector of
norm -(4ab - c^2)/4 in the region P of <-1> + <1>^10 (III-2), which exists
for every admissible discriminant except 4, 8 and 16 (III-3).

Each outcome is packaged with a certificate that can be replayed from its
serialized form alone: an embedding matrix together with the root-freeness
of its orthogonal complement, a witness vector in P, an exhaustive search
transcript, or the parity residues that make an embedding impossible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, ClassVar

from .embeddings import Embedding, maximal_minor_gcd, orthogonal_complement, validate
from .errors import VerificationError
from .intmat import IntMatrix
from .lattices import (
    Sl2Matrix,
    TranscendentalForm,
    apply_basis_change,
    parity_class,
    standard_lattice,
    to_lattice,
)
from .quadforms import BinaryForm, represents_one
from .shortvec import NormQuery, enumerate_norm
from .vinberg import ABSENT, enumerate_P_slice, in_P
from .vinberg import norm as region_norm
from .vinberg import search_norm

CaseLabel = str

# x0-slices that certificates of absence must search; beyond the last slice
# the per-slice maximum norm stays below -14, out of reach of -1, -2, -4.
ABSENCE_SLICES: tuple[int, ...] = tuple(range(3, 15))

_COVERS: dict[CaseLabel, bool] = {
    "I": True,
    "II": True,
    "III-1": True,
    "III-2": True,
    "III-3": False,
    "IV": False,
}


def case_of(t: TranscendentalForm) -> tuple[CaseLabel, bool]:
    """Classification label for the form and whether a covering exists."""
    coarse = parity_class(t)
    if coarse != "III":
        return coarse, _COVERS[coarse]
    if not represents_one(BinaryForm(t.a, t.c, t.b)):
        return "III-1", True
    if t.delta in (4, 8, 16):
        return "III-3", False
    return "III-2", True


def _normalize_with_transform(t: TranscendentalForm) -> tuple[TranscendentalForm, Sl2Matrix]:
    if parity_class(t) != "III":
        raise ValueError("normalization applies to forms with c even, a or b odd")
    if t.a % 2 == 0:
        g = Sl2Matrix(2, 1, 1, 1)
    elif t.b % 2 == 0:
        g = Sl2Matrix(1, 1, 1, 2)
    else:
        g = Sl2Matrix.identity()
    return apply_basis_change(t, g), g


def normalize_case_III(t: TranscendentalForm) -> TranscendentalForm:
    """Equivalent form with both diagonal entries odd (c stays even)."""
    return _normalize_with_transform(t)[0]


def _embedding_rows_c_odd(t: TranscendentalForm) -> list[list[int]]:
    # u -> a*u1 + u2 + ((c - ab - 1)/2) v1,  v -> u1 + b*u2 + v2
    s = (t.c - t.a * t.b - 1) // 2
    return [
        [t.a, 1, s, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, t.b, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    ]


def _embedding_rows_c_even(t: TranscendentalForm) -> list[list[int]]:
    # u -> u1 + a*u2,  v -> u1 + (c - a)*u2 + v1 + ((a + b - c)/2) v2
    s = (t.a + t.b - t.c) // 2
    return [
        [1, t.a, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, t.c - t.a, 1, s, 0, 0, 0, 0, 0, 0, 0, 0],
    ]


def _embedding_rows_all_even(t: TranscendentalForm) -> list[list[int]]:
    # u -> v1 + (a/2) v2,  v -> u1 + b*u2 + (c/2) v2
    return [
        [0, 0, 1, t.a // 2, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, t.b, 0, t.c // 2, 0, 0, 0, 0, 0, 0, 0, 0],
    ]


def case_ii_embedding(t: TranscendentalForm) -> Embedding:
    """The written-down primitive embedding for c odd, ab even."""
    if parity_class(t) != "II":
        raise ValueError("this construction needs c odd and ab even")
    return Embedding(
        to_lattice(t),
        standard_lattice("LambdaMinus"),
        IntMatrix.from_rows(_embedding_rows_c_odd(t)),
    )


def case_iii_embedding(t: TranscendentalForm) -> Embedding:
    """The written-down embedding for a, b odd and c even (normalize first)."""
    if not (t.a % 2 == 1 and t.b % 2 == 1 and t.c % 2 == 0):
        raise ValueError("this construction needs a, b odd and c even")
    return Embedding(
        to_lattice(t),
        standard_lattice("LambdaMinus"),
        IntMatrix.from_rows(_embedding_rows_c_even(t)),
    )


def _complement_roots(e: Embedding) -> list[tuple[int, ...]]:
    _, comp = orthogonal_complement(e.target, e)
    return list(enumerate_norm(NormQuery(comp, -2)))


@dataclass(frozen=True)
class KeumCitation:
    """Covering certificate for all-even forms: the form is twice another.

    The replayed content is the halving itself; that a doubled form always
    covers is the classical theorem this certificate points to.
    """

    kind: ClassVar[str] = "keum-citation"
    halved: tuple[int, int, int]

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, "halved": list(self.halved)}

    def replay(self, t: TranscendentalForm) -> None:
        if any(x % 2 for x in t.triple()):
            raise VerificationError("halving certificate on a form that is not all even")
        if tuple(self.halved) != (t.a // 2, t.b // 2, t.c // 2):
            raise VerificationError("halved form does not match the input")


@dataclass(frozen=True)
class ExplicitEmbedding:
    """A primitive embedding into U + U(2) + E8(2) with root-free complement.

    ``normalized`` is the SL2-equivalent form the matrix actually embeds and
    ``basis_change`` the change of basis realizing the equivalence.  Replay
    re-checks the equivalence, the Gram pullback, primitivity, and that the
    orthogonal complement has no vector of norm -2.
    """

    kind: ClassVar[str] = "explicit-embedding"
    construction: str
    normalized: tuple[int, int, int]
    basis_change: tuple[int, int, int, int]
    matrix: tuple[tuple[int, ...], ...]
    minor_gcd: int
    minus_two: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "construction": self.construction,
            "normalized": list(self.normalized),
            "basis_change": list(self.basis_change),
            "matrix": [list(row) for row in self.matrix],
            "minor_gcd": self.minor_gcd,
            "minus_two": [list(v) for v in self.minus_two],
        }

    def replay(self, t: TranscendentalForm) -> None:
        normalized = TranscendentalForm(*self.normalized)
        g = Sl2Matrix(*self.basis_change)
        if apply_basis_change(t, g).triple() != normalized.triple():
            raise VerificationError("recorded basis change does not reach the recorded form")
        emb = Embedding(
            to_lattice(normalized),
            standard_lattice("LambdaMinus"),
            IntMatrix.from_rows([list(row) for row in self.matrix]),
        )
        if not validate(emb):
            raise VerificationError("matrix does not pull the target form back to the source")
        if self.minor_gcd != 1 or maximal_minor_gcd(emb) != 1:
            raise VerificationError("embedding is not primitive")
        roots = _complement_roots(emb)
        if roots or self.minus_two:
            raise VerificationError("orthogonal complement contains a norm -2 vector")


@dataclass(frozen=True)
class VinbergWitness:
    """A vector of norm -n in the region P of <-1> + <1>^10, n = delta/4."""

    kind: ClassVar[str] = "vinberg-witness"
    n: int
    vector: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, "n": self.n, "vector": list(self.vector)}

    def replay(self, t: TranscendentalForm) -> None:
        if t.delta % 4 != 0 or self.n != t.delta // 4:
            raise VerificationError("witness norm does not match the discriminant")
        if self.n in ABSENT:
            raise VerificationError("witness claimed for a discriminant with none")
        if region_norm(self.vector) != -self.n:
            raise VerificationError("witness vector has the wrong norm")
        if not in_P(self.vector):
            raise VerificationError("witness vector lies outside the region")


@dataclass(frozen=True)
class ExhaustiveAbsence:
    """No vector of norm -n in P, checked slice by slice (n in {1, 2, 4}).

    Slices past the recorded range cannot help: their maximum norm drops
    below every norm in question, so the finite transcript is conclusive.
    """

    kind: ClassVar[str] = "exhaustive-absence"
    n: int
    slices: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, "n": self.n, "slices": list(self.slices)}

    def replay(self, t: TranscendentalForm) -> None:
        if t.delta % 4 != 0 or self.n != t.delta // 4:
            raise VerificationError("absence norm does not match the discriminant")
        if self.n not in ABSENT:
            raise VerificationError("absence claimed for a discriminant that has a witness")
        if tuple(self.slices) != ABSENCE_SLICES:
            raise VerificationError("absence transcript does not cover the required slices")
        for m in self.slices:
            if any(region_norm(v) == -self.n for v in enumerate_P_slice(m)):
                raise VerificationError(f"slice {m} contains a vector of norm {-self.n}")


@dataclass(frozen=True)
class ParityObstruction:
    """All of a, b, c odd: no primitive embedding avoids the parity clash.

    Any vectors of norms 2a and 2b, both 2 mod 4, must each use both
    hyperbolic coordinates oddly, forcing an even pairing; c is odd.
    """

    kind: ClassVar[str] = "parity-obstruction"
    norms_mod_4: tuple[int, int]
    pairing_mod_2: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "norms_mod_4": list(self.norms_mod_4),
            "pairing_mod_2": self.pairing_mod_2,
        }

    def replay(self, t: TranscendentalForm) -> None:
        if tuple(self.norms_mod_4) != (2 * t.a % 4, 2 * t.b % 4):
            raise VerificationError("recorded norm residues do not match the form")
        if self.pairing_mod_2 != t.c % 2:
            raise VerificationError("recorded pairing parity does not match the form")
        if self.norms_mod_4 != (2, 2) or self.pairing_mod_2 != 1:
            raise VerificationError("residues do not constitute an obstruction")


Certificate = (
    KeumCitation | ExplicitEmbedding | VinbergWitness | ExhaustiveAbsence | ParityObstruction
)

_CERTIFICATE_TYPES: dict[str, type] = {
    cls.kind: cls  # type: ignore[attr-defined]
    for cls in (KeumCitation, ExplicitEmbedding, VinbergWitness, ExhaustiveAbsence, ParityObstruction)
}

_KINDS_FOR_CASE: dict[CaseLabel, tuple[str, ...]] = {
    "I": ("keum-citation", "explicit-embedding"),
    "II": ("explicit-embedding",),
    "III-1": ("explicit-embedding",),
    "III-2": ("vinberg-witness",),
    "III-3": ("exhaustive-absence",),
    "IV": ("parity-obstruction",),
}


def certificate_from_dict(data: dict[str, Any]) -> Certificate:
    kind = data.get("kind")
    if kind == "keum-citation":
        return KeumCitation(halved=tuple(int(x) for x in data["halved"]))
    if kind == "explicit-embedding":
        return ExplicitEmbedding(
            construction=str(data["construction"]),
            normalized=tuple(int(x) for x in data["normalized"]),
            basis_change=tuple(int(x) for x in data["basis_change"]),
            matrix=tuple(tuple(int(x) for x in row) for row in data["matrix"]),
            minor_gcd=int(data["minor_gcd"]),
            minus_two=tuple(tuple(int(x) for x in v) for v in data["minus_two"]),
        )
    if kind == "vinberg-witness":
        return VinbergWitness(n=int(data["n"]), vector=tuple(int(x) for x in data["vector"]))
    if kind == "exhaustive-absence":
        return ExhaustiveAbsence(n=int(data["n"]), slices=tuple(int(m) for m in data["slices"]))
    if kind == "parity-obstruction":
        return ParityObstruction(
            norms_mod_4=tuple(int(x) for x in data["norms_mod_4"]),
            pairing_mod_2=int(data["pairing_mod_2"]),
        )
    raise ValueError(f"unknown certificate kind {kind!r}")


@dataclass(frozen=True)
class Classification:
    case_label: CaseLabel
    covers: bool
    delta: int
    certificate: Certificate

    def to_dict(self) -> dict[str, Any]:
        return {
            "case": self.case_label,
            "covers": self.covers,
            "delta": self.delta,
            "certificate": self.certificate.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Classification":
        return cls(
            case_label=str(data["case"]),
            covers=bool(data["covers"]),
            delta=int(data["delta"]),
            certificate=certificate_from_dict(data["certificate"]),
        )


def _embedding_certificate(
    t: TranscendentalForm,
    construction: str,
    normalized: TranscendentalForm,
    g: Sl2Matrix,
    rows: list[list[int]],
    *,
    required: bool,
) -> ExplicitEmbedding | None:
    emb = Embedding(
        to_lattice(normalized),
        standard_lattice("LambdaMinus"),
        IntMatrix.from_rows(rows),
    )
    if not validate(emb):
        raise VerificationError(f"BUG: {construction} construction broke the form")
    if maximal_minor_gcd(emb) != 1:
        raise VerificationError(f"BUG: {construction} construction is not primitive")
    roots = _complement_roots(emb)
    if roots:
        if required:
            raise VerificationError(f"BUG: {construction} complement contains a root")
        return None
    return ExplicitEmbedding(
        construction=construction,
        normalized=normalized.triple(),
        basis_change=g.as_tuple(),
        matrix=tuple(tuple(row) for row in rows),
        minor_gcd=1,
        minus_two=(),
    )


def certify(t: TranscendentalForm, label: CaseLabel, *, try_embedding: bool = False) -> Certificate:
    """Build the certificate backing a classification label for this form."""
    if label == "I":
        if try_embedding:
            cert = _embedding_certificate(
                t, "all-even", t, Sl2Matrix.identity(),
                _embedding_rows_all_even(t), required=False,
            )
            if cert is not None:
                return cert
        return KeumCitation(halved=(t.a // 2, t.b // 2, t.c // 2))
    if label == "II":
        cert = _embedding_certificate(
            t, "c-odd", t, Sl2Matrix.identity(),
            _embedding_rows_c_odd(t), required=True,
        )
        assert cert is not None
        return cert
    if label == "III-1":
        normalized, g = _normalize_with_transform(t)
        cert = _embedding_certificate(
            t, "c-even", normalized, g,
            _embedding_rows_c_even(normalized), required=True,
        )
        assert cert is not None
        return cert
    if label == "III-2":
        n = t.delta // 4
        witness = search_norm(n)
        if witness is None:
            raise VerificationError(f"BUG: no witness of norm {-n} found")
        return VinbergWitness(n=n, vector=witness)
    if label == "III-3":
        return ExhaustiveAbsence(n=t.delta // 4, slices=ABSENCE_SLICES)
    if label == "IV":
        return ParityObstruction(
            norms_mod_4=(2 * t.a % 4, 2 * t.b % 4),
            pairing_mod_2=t.c % 2,
        )
    raise ValueError(f"unknown case label {label!r}")


def classify(t: TranscendentalForm, *, try_embedding: bool = False) -> Classification:
    """Full decision for one form: label, verdict, and certificate.

    ``try_embedding`` additionally attempts a concrete embedding in the
    all-even case, falling back to the citation certificate whenever the
    attempted complement is not root-free.
    """
    label, covers = case_of(t)
    certificate = certify(t, label, try_embedding=try_embedding)
    return Classification(case_label=label, covers=covers, delta=t.delta, certificate=certificate)


def verify_classification(t: TranscendentalForm, cls: Classification) -> None:
    """Replay a classification against the form it claims to describe.

    Raises VerificationError unless the label, the verdict, the discriminant
    and the certificate all check out independently.
    """
    label, covers = case_of(t)
    if cls.case_label != label:
        raise VerificationError(f"label {cls.case_label!r} disagrees with recomputed {label!r}")
    if cls.covers != covers:
        raise VerificationError("covering verdict disagrees with the recomputed case")
    if cls.delta != t.delta:
        raise VerificationError("recorded discriminant disagrees with the form")
    if cls.certificate.kind not in _KINDS_FOR_CASE[label]:
        raise VerificationError(
            f"certificate kind {cls.certificate.kind!r} cannot back case {label!r}"
        )
    cls.certificate.replay(t)
