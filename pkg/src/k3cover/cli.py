"""Command line front end.

Three subcommands:

  classify        decide one form (a, b, c), print verdict or JSON
  scan            classify a whole box of forms to JSON lines
  verify-lemmas   re-check the tabulated facts the classifier relies on

Exit codes: 0 success, 1 invalid input, 2 verification failure.
"""

from __future__ import annotations

import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from random import Random
from typing import Any

import click

from . import vinberg
from .classifier import Classification, classify, verify_classification
from .embeddings import Embedding, torsion_witness, verify_torsion_witness
from .errors import VerificationError
from .intmat import IntMatrix, maximal_minor_gcd, rank, smith_invariant_factors
from .lattices import IntegralLattice, TranscendentalForm

CASE_ORDER = ("I", "II", "III-1", "III-2", "III-3", "IV")


@dataclass(frozen=True)
class QueryRecord:
    """One classified form, flattened for line-oriented output."""

    a: int
    b: int
    c: int
    classification: Classification

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"a": self.a, "b": self.b, "c": self.c}
        out.update(self.classification.to_dict())
        return out

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "QueryRecord":
        return cls(
            a=int(data["a"]),
            b=int(data["b"]),
            c=int(data["c"]),
            classification=Classification.from_dict(data),
        )


def _json_line(data: dict[str, Any]) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


@click.group()
def main() -> None:
    """Decide which singular K3 surfaces doubly cover an Enriques surface.

    A surface is given by the coefficients (a, b, c) of its transcendental
    lattice [[2a, c], [c, 2b]]; every verdict ships with a certificate that
    can be replayed independently.
    """


@main.command("classify")
@click.option("--a", "a", type=int, default=None, help="Half the first diagonal entry.")
@click.option("--b", "b", type=int, default=None, help="Half the second diagonal entry.")
@click.option("--c", "c", type=int, default=None, help="The off-diagonal entry.")
@click.option("--gram", "gram", default=None, metavar="D1,C,D2",
              help="Raw Gram entries instead of --a/--b/--c; diagonal must be even.")
@click.option("--json", "as_json", is_flag=True, help="Emit the full record as JSON.")
@click.option("--verify", "do_verify", is_flag=True,
              help="Replay the certificate before printing (exit 2 on failure).")
def classify_cmd(a: int | None, b: int | None, c: int | None, gram: str | None,
                 as_json: bool, do_verify: bool) -> None:
    """Classify a single form and print its verdict."""
    if gram is not None:
        if a is not None or b is not None or c is not None:
            _fail("--gram cannot be combined with --a/--b/--c", 1)
        parts = gram.split(",")
        if len(parts) != 3:
            _fail("--gram wants three comma separated integers", 1)
        try:
            d1, off, d2 = (int(p.strip()) for p in parts)
        except ValueError:
            _fail("--gram wants three comma separated integers", 1)
        if d1 % 2 or d2 % 2:
            _fail("diagonal Gram entries must be even", 1)
        a, b, c = d1 // 2, d2 // 2, off
    elif a is None or b is None or c is None:
        _fail("provide --a, --b and --c (or --gram)", 1)
    try:
        form = TranscendentalForm(a, b, c)
    except ValueError as exc:
        _fail(str(exc), 1)
    result = classify(form)
    if do_verify:
        try:
            verify_classification(form, result)
        except VerificationError as exc:
            _fail(f"verification failed: {exc}", 2)
    if as_json:
        payload: dict[str, Any] = {"input": {"a": form.a, "b": form.b, "c": form.c}}
        payload.update(result.to_dict())
        click.echo(_json_line(payload))
    else:
        verdict = "covers" if result.covers else "does not cover"
        click.echo(f"case {result.case_label}: {verdict}")


def _scan_worker(triple: tuple[int, int, int]) -> tuple[str, str]:
    form = TranscendentalForm(*triple)
    record = QueryRecord(form.a, form.b, form.c, classify(form))
    return record.classification.case_label, _json_line(record.to_dict())


def _worker_count(n_tasks: int) -> int:
    limit = os.cpu_count() or 1
    env = os.environ.get("K3COVER_THREADS")
    if env is not None:
        try:
            cap = int(env)
        except ValueError:
            _fail(f"K3COVER_THREADS must be an integer, got {env!r}", 1)
        if cap < 1:
            _fail("K3COVER_THREADS must be at least 1", 1)
        limit = min(limit, cap)
    # parallelism only pays off once the box is reasonably large
    return max(1, min(limit, n_tasks // 16))


@main.command("scan")
@click.option("--a-max", type=int, required=True, help="Scan a = 1 .. a-max.")
@click.option("--b-max", type=int, required=True, help="Scan b = 1 .. b-max.")
@click.option("--c-min", type=int, required=True, help="Lower end of the c range.")
@click.option("--c-max", type=int, required=True, help="Upper end of the c range.")
@click.option("--out", default="-", metavar="PATH",
              help="Output file for the JSON lines ('-' for stdout).")
def scan_cmd(a_max: int, b_max: int, c_min: int, c_max: int, out: str) -> None:
    """Classify every positive definite form in a coefficient box.

    Emits one JSON line per form, ordered by (a, b, c) ascending, and a
    per-case tally on stderr.  Output is byte-identical for a given box no
    matter how many worker processes run (K3COVER_THREADS caps them).
    """
    triples = [
        (a, b, c)
        for a in range(1, a_max + 1)
        for b in range(1, b_max + 1)
        for c in range(c_min, c_max + 1)
        if 4 * a * b - c * c > 0
    ]
    if not triples:
        _fail("no positive definite forms in the requested ranges", 1)
    workers = _worker_count(len(triples))
    try:
        handle = sys.stdout if out == "-" else open(out, "w", encoding="utf-8")
    except OSError as exc:
        _fail(f"cannot open {out!r} for writing: {exc}", 1)
    counts = dict.fromkeys(CASE_ORDER, 0)
    try:
        if workers == 1:
            results = map(_scan_worker, triples)
            for label, line in results:
                counts[label] += 1
                handle.write(line + "\n")
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for label, line in pool.map(_scan_worker, triples, chunksize=64):
                    counts[label] += 1
                    handle.write(line + "\n")
    finally:
        if handle is not sys.stdout:
            handle.close()
    tally = " ".join(f"{label}={counts[label]}" for label in CASE_ORDER)
    click.echo(f"scanned {len(triples)} forms: {tally}", err=True)


def _check_family_coverage(n_max: int) -> str:
    for name in sorted(vinberg.FAMILIES):
        min_param = vinberg.FAMILIES[name][1]
        for param in range(min_param, min_param + 25):
            vinberg.family_vector(name, param)
    witnessed = 0
    for n in range(3, n_max + 1):
        v = vinberg.search_norm(n)
        if n in vinberg.ABSENT:
            if v is not None:
                raise VerificationError(f"unexpected witness for norm -{n}")
            continue
        if v is None:
            raise VerificationError(f"no witness of norm -{n}")
        if vinberg.norm(v) != -n or not vinberg.in_P(v):
            raise VerificationError(f"witness for norm -{n} fails membership")
        witnessed += 1
    return f"{witnessed} norms witnessed up to {n_max}"


def _check_absence(slice_max: int) -> str:
    targets = sorted(vinberg.ABSENT)
    for n in targets:
        for m in range(3, slice_max + 1):
            if any(vinberg.norm(v) == -n for v in vinberg.enumerate_P_slice(m)):
                raise VerificationError(f"norm -{n} appears in slice {m}")
        if vinberg.search_norm(n) is not None:
            raise VerificationError(f"search found a phantom witness for norm -{n}")
    return f"norms {targets} absent through slice {slice_max}"


def _check_max_table(slice_max: int) -> str:
    if vinberg.enumerate_P_slice(3):
        raise VerificationError("slice 3 should be empty")
    for m in range(4, slice_max + 1):
        want = vinberg.predicted_max_norm(m)
        got = vinberg.max_norm_in_slice(m)
        if got != want:
            raise VerificationError(f"slice {m}: maximum {got}, formula says {want}")
        top = vinberg.slice_maximizer(m)
        if top is None or vinberg.norm(top) != want or top not in vinberg.enumerate_P_slice(m):
            raise VerificationError(f"slice {m}: stated maximizer is invalid")
    return f"slices 4..{slice_max} match the formulas"


def _check_primitivity_snf(samples: int = 200) -> str:
    rng = Random(1105)
    replayed = 0
    done = 0
    while done < samples:
        n = rng.randint(1, 4)
        m = rng.randint(n, 8)
        mat = IntMatrix.from_rows(
            [[rng.randint(-5, 5) for _ in range(m)] for _ in range(n)])
        if rank(mat) < n:
            continue
        done += 1
        d = maximal_minor_gcd(mat)
        product = 1
        for factor in smith_invariant_factors(mat):
            product *= factor
        if d != product:
            raise VerificationError("minor gcd disagrees with the invariant factors")
        if d > 1:
            target = IntegralLattice.from_gram_rows(
                [[1 if i == j else 0 for j in range(m)] for i in range(m)])
            source = IntegralLattice.from_gram_rows((mat @ mat.transpose()).to_lists())
            emb = Embedding(source, target, mat)
            verify_torsion_witness(emb, torsion_witness(emb))
            replayed += 1
    return f"{samples} matrices checked, {replayed} torsion witnesses replayed"


@main.command("verify-lemmas")
@click.option("--n-max", type=int, default=200, show_default=True,
              help="Witness every admissible norm -n for n up to this bound.")
@click.option("--slice-max", type=int, default=14, show_default=True,
              help="Enumerate region slices with x0 up to this bound.")
def verify_lemmas_cmd(n_max: int, slice_max: int) -> None:
    """Re-derive the tabulated facts behind the classifier; exit 2 on any failure."""
    if n_max < 3:
        _fail("--n-max must be at least 3", 1)
    if not 3 <= slice_max <= vinberg.SLICE_CAP:
        _fail(f"--slice-max must lie in [3, {vinberg.SLICE_CAP}]", 1)
    checks = (
        ("family-coverage", lambda: _check_family_coverage(n_max)),
        ("small-norm-absence", lambda: _check_absence(slice_max)),
        ("max-table", lambda: _check_max_table(slice_max)),
        ("primitivity-snf", _check_primitivity_snf),
    )
    failed = False
    for name, check in checks:
        try:
            detail = check()
        except Exception as exc:  # noqa: BLE001 - any breakage must turn the row red
            failed = True
            click.echo(f"{name:<20} FAIL  {exc}")
        else:
            click.echo(f"{name:<20} pass  {detail}")
    if failed:
        sys.exit(2)


if __name__ == "__main__":
    main()
