"""The six-way classification and its replayable certificates."""

import json
import random

import pytest

from k3cover.classifier import (
    ABSENCE_SLICES,
    Classification,
    ExhaustiveAbsence,
    ExplicitEmbedding,
    KeumCitation,
    ParityObstruction,
    VinbergWitness,
    case_ii_embedding,
    case_iii_embedding,
    case_of,
    certificate_from_dict,
    certify,
    classify,
    normalize_case_III,
    verify_classification,
)
from k3cover.embeddings import is_primitive, orthogonal_complement, validate
from k3cover.errors import VerificationError
from k3cover.lattices import TranscendentalForm, apply_basis_change, standard_lattice
from k3cover.shortvec import NormQuery, has_norm

from conftest import random_sl2

LAMBDA = standard_lattice("LambdaMinus")

FROZEN_CASES = {
    (2, 2, 2): ("I", True),
    (1, 2, 1): ("II", True),
    (2, 3, 2): ("III-1", True),
    (1, 3, 0): ("III-2", True),
    (1, 1, 0): ("III-3", False),
    (1, 1, 1): ("IV", False),
}

EXPECTED_KIND = {
    "I": "keum-citation",
    "II": "explicit-embedding",
    "III-1": "explicit-embedding",
    "III-2": "vinberg-witness",
    "III-3": "exhaustive-absence",
    "IV": "parity-obstruction",
}


def _grid():
    for a in range(1, 7):
        for b in range(1, 7):
            for c in range(-7, 8):
                if 4 * a * b - c * c > 0:
                    yield TranscendentalForm(a, b, c)


def test_case_of_frozen():
    for triple, expected in FROZEN_CASES.items():
        assert case_of(TranscendentalForm(*triple)) == expected


def test_grid_case_structure():
    for t in _grid():
        label, covers = case_of(t)
        assert covers == (label in ("I", "II", "III-1", "III-2"))
        if label == "III-3":
            assert t.delta in (4, 8, 16)
        parities = (t.a % 2, t.b % 2, t.c % 2)
        if parities == (0, 0, 0):
            assert label == "I" and covers
        if parities == (1, 1, 1):
            assert label == "IV" and not covers


def test_case_invariant_under_basis_change():
    rng = random.Random(107)
    done = 0
    while done < 200:
        a, b = rng.randint(1, 6), rng.randint(1, 6)
        c = rng.randint(-7, 7)
        if 4 * a * b - c * c <= 0:
            continue
        done += 1
        t = TranscendentalForm(a, b, c)
        assert case_of(apply_basis_change(t, random_sl2(rng))) == case_of(t)


def test_normalize_case_III():
    assert normalize_case_III(TranscendentalForm(2, 1, 0)).triple() == (9, 3, 10)
    assert normalize_case_III(TranscendentalForm(1, 2, 2)).triple() == (5, 13, 16)
    assert normalize_case_III(TranscendentalForm(1, 1, 0)).triple() == (1, 1, 0)
    for t in _grid():
        if case_of(t)[0].startswith("III"):
            n = normalize_case_III(t)
            assert n.a % 2 == 1 and n.b % 2 == 1 and n.c % 2 == 0
            assert n.delta == t.delta
            assert normalize_case_III(n).triple() == n.triple()
    with pytest.raises(ValueError):
        normalize_case_III(TranscendentalForm(1, 2, 1))
    with pytest.raises(ValueError):
        normalize_case_III(TranscendentalForm(2, 2, 2))


def test_embedding_constructors_frozen():
    e = case_ii_embedding(TranscendentalForm(1, 2, 1))
    assert e.matrix.to_lists() == [
        [1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    ]
    assert validate(e) and is_primitive(e)

    n = normalize_case_III(TranscendentalForm(2, 3, 2))
    assert n.triple() == (15, 7, 20)
    e = case_iii_embedding(n)
    assert e.matrix.to_lists() == [
        [1, 15, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, 5, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    ]
    assert validate(e) and is_primitive(e)

    with pytest.raises(ValueError):
        case_ii_embedding(TranscendentalForm(1, 1, 0))
    with pytest.raises(ValueError):
        case_iii_embedding(TranscendentalForm(1, 2, 1))
    with pytest.raises(ValueError):
        case_iii_embedding(TranscendentalForm(2, 1, 0))   # a even: normalize first


def test_embedding_constructors_on_samples():
    rng = random.Random(109)
    grid = list(_grid())
    rng.shuffle(grid)
    seen = {"II": 0, "III": 0}
    for t in grid:
        label = case_of(t)[0]
        if label == "II" and seen["II"] < 12:
            seen["II"] += 1
            e = case_ii_embedding(t)
            assert validate(e) and is_primitive(e)
        elif label.startswith("III") and seen["III"] < 12:
            seen["III"] += 1
            e = case_iii_embedding(normalize_case_III(t))
            assert validate(e) and is_primitive(e)
    assert seen == {"II": 12, "III": 12}


def test_complement_root_presence_separates_the_iii_branches():
    def complement_has_root(t):
        e = case_iii_embedding(normalize_case_III(t))
        _, comp = orthogonal_complement(LAMBDA, e)
        return has_norm(NormQuery(comp, -2))

    assert not complement_has_root(TranscendentalForm(2, 3, 2))   # III-1
    assert complement_has_root(TranscendentalForm(1, 3, 0))       # III-2
    assert complement_has_root(TranscendentalForm(1, 1, 0))       # III-3


def test_classify_frozen_cases():
    for triple, (label, covers) in FROZEN_CASES.items():
        t = TranscendentalForm(*triple)
        cls = classify(t)
        assert cls.case_label == label
        assert cls.covers == covers
        assert cls.delta == t.delta
        assert cls.certificate.kind == EXPECTED_KIND[label]
        verify_classification(t, cls)


def test_witness_certificate_content():
    cls = classify(TranscendentalForm(1, 3, 0))
    cert = cls.certificate
    assert isinstance(cert, VinbergWitness)
    assert cert.n == 3
    assert cert.vector == (4, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1)


def test_absence_certificate_content():
    cls = classify(TranscendentalForm(1, 1, 0))
    cert = cls.certificate
    assert isinstance(cert, ExhaustiveAbsence)
    assert cert.n == 1
    assert cert.slices == ABSENCE_SLICES == tuple(range(3, 15))


def test_obstruction_certificate_content():
    cls = classify(TranscendentalForm(1, 1, 1))
    cert = cls.certificate
    assert isinstance(cert, ParityObstruction)
    assert cert.norms_mod_4 == (2, 2)
    assert cert.pairing_mod_2 == 1


def test_json_round_trip():
    for triple in FROZEN_CASES:
        t = TranscendentalForm(*triple)
        cls = classify(t)
        data = json.loads(json.dumps(cls.to_dict()))
        back = Classification.from_dict(data)
        assert back == cls
        verify_classification(t, back)


def test_certificate_from_dict_rejects_unknown_kind():
    with pytest.raises(ValueError):
        certificate_from_dict({"kind": "handshake"})
    with pytest.raises(ValueError):
        certify(TranscendentalForm(1, 1, 1), "V")


def test_tampered_keum_citation():
    t = TranscendentalForm(2, 2, 2)
    with pytest.raises(VerificationError):
        KeumCitation(halved=(1, 1, 0)).replay(t)
    with pytest.raises(VerificationError):
        KeumCitation(halved=(1, 1, 1)).replay(TranscendentalForm(2, 2, 1))


def test_tampered_embedding_certificate():
    t = TranscendentalForm(1, 2, 1)
    cert = classify(t).certificate
    assert isinstance(cert, ExplicitEmbedding)

    rows = [list(r) for r in cert.matrix]
    rows[0][4] = 1
    with pytest.raises(VerificationError):
        ExplicitEmbedding(cert.construction, cert.normalized, cert.basis_change,
                          tuple(tuple(r) for r in rows), cert.minor_gcd,
                          cert.minus_two).replay(t)
    with pytest.raises(VerificationError):
        ExplicitEmbedding(cert.construction, (2, 1, 1), cert.basis_change,
                          cert.matrix, cert.minor_gcd, cert.minus_two).replay(t)
    with pytest.raises(VerificationError):
        # a certificate listing roots must never verify as a covering
        ExplicitEmbedding(cert.construction, cert.normalized, cert.basis_change,
                          cert.matrix, cert.minor_gcd,
                          ((1,) * 10,)).replay(t)


def test_tampered_witness_certificate():
    t = TranscendentalForm(1, 3, 0)
    with pytest.raises(VerificationError):
        VinbergWitness(n=3, vector=(4, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1)).replay(t)
    with pytest.raises(VerificationError):
        VinbergWitness(n=5, vector=(6, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1)).replay(t)
    with pytest.raises(VerificationError):
        # right norm, but the vector leaves the region (tail unsorted)
        VinbergWitness(n=3, vector=(4, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1)).replay(t)


def test_tampered_absence_certificate():
    t = TranscendentalForm(1, 1, 0)
    with pytest.raises(VerificationError):
        ExhaustiveAbsence(n=2, slices=ABSENCE_SLICES).replay(t)
    with pytest.raises(VerificationError):
        ExhaustiveAbsence(n=1, slices=ABSENCE_SLICES[:3]).replay(t)
    with pytest.raises(VerificationError):
        # delta 12 admits a witness, so an absence claim must not verify
        ExhaustiveAbsence(n=3, slices=ABSENCE_SLICES).replay(TranscendentalForm(1, 3, 0))


def test_tampered_obstruction_certificate():
    with pytest.raises(VerificationError):
        ParityObstruction(norms_mod_4=(0, 2), pairing_mod_2=1).replay(
            TranscendentalForm(1, 1, 1))
    with pytest.raises(VerificationError):
        ParityObstruction(norms_mod_4=(2, 2), pairing_mod_2=1).replay(
            TranscendentalForm(2, 2, 2))


def test_mismatched_classification_fields():
    t = TranscendentalForm(1, 1, 1)
    good = classify(t)
    with pytest.raises(VerificationError):
        verify_classification(t, Classification("II", True, 3, good.certificate))
    with pytest.raises(VerificationError):
        verify_classification(t, Classification("IV", True, 3, good.certificate))
    with pytest.raises(VerificationError):
        verify_classification(t, Classification("IV", False, 5, good.certificate))
    with pytest.raises(VerificationError):
        verify_classification(t, Classification("IV", False, 3, KeumCitation((0, 0, 0))))


def test_try_embedding_for_all_even_forms():
    t = TranscendentalForm(2, 2, 2)
    cls = classify(t, try_embedding=True)
    assert cls.case_label == "I"
    assert cls.certificate.kind in ("keum-citation", "explicit-embedding")
    verify_classification(t, cls)
