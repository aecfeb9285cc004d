"""Command-line front end.

Input files are either JSON ``{"format": "voigt" | "kelvin" | "components21",
"matrix": ...}`` or a plain-text 6x6 matrix (whitespace separated, read with
``--format``, default voigt).  Voigt order is 11, 22, 33, 23, 13, 12 with no
scale factors; Kelvin multiplies the shear rows and columns by sqrt(2);
components21 lists the upper triangle of the Voigt matrix row by row.

Exit codes: 0 success, 1 failed verification or unwritable output, 2 parse
error, 3 validation error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .classes import ELASTICITY_CLASSES, SymmetryClass
from .covariants import boehler, boehler_relation, cubic_relations, eval_basis
from .elasticity import (
    ElasticityTensor,
    decompose,
    explain_elasticity,
    generate_elasticity,
)
from .h4classify import classify_h4
from .invariants import integrity_basis
from .notation import kelvin_to_voigt, voigt_from_components21
from .sym2 import DEFAULT_TOL
from .verify import run as run_suite

SCHEMA = 1
FORMATS = ("voigt", "kelvin", "components21")
SYMMETRY_RTOL = 1e-10


class ParseError(Exception):
    pass


class ValidationError(Exception):
    pass


def default_tol() -> float:
    raw = os.environ.get("ELASYM_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        value = float(raw)
    except ValueError:
        raise ParseError(f"ELASYM_TOL is not a number: {raw!r}") from None
    if not value > 0:
        raise ValidationError("ELASYM_TOL must be positive")
    return value


# --------------------------------------------------------------------------
# input
# --------------------------------------------------------------------------

def _read_text(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from None


def parse_document(text: str, fmt: str | None = None) -> tuple[str, np.ndarray]:
    """Return (format, raw array) from JSON or plain text."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        if "matrix" not in doc and "components" not in doc:
            raise ParseError('JSON input needs a "matrix" field')
        fmt = fmt or doc.get("format", "voigt")
        raw = doc.get("matrix", doc.get("components"))
    else:
        fmt = fmt or "voigt"
        try:
            raw = [[float(x) for x in line.split()] for line in stripped.splitlines() if line.strip()]
        except ValueError as exc:
            raise ParseError(f"invalid number in plain-text matrix: {exc}") from None
        if fmt == "components21":
            raw = [x for row in raw for x in row]
    if fmt not in FORMATS:
        raise ParseError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    try:
        arr = np.array(raw, dtype=float)
    except (TypeError, ValueError):
        raise ParseError("matrix entries must be numbers in a rectangular layout") from None
    return fmt, arr


def to_elasticity(fmt: str, arr: np.ndarray) -> ElasticityTensor:
    if fmt == "components21":
        if arr.size != 21:
            raise ParseError(f"components21 needs 21 values, got {arr.size}")
        voigt = voigt_from_components21(arr)
    else:
        if arr.shape != (6, 6):
            raise ParseError(f"expected a 6x6 matrix, got shape {arr.shape}")
        voigt = kelvin_to_voigt(arr) if fmt == "kelvin" else arr
    if not np.all(np.isfinite(voigt)):
        raise ValidationError("matrix has non-finite entries")
    scale = float(np.abs(voigt).max())
    asym = float(np.abs(voigt - voigt.T).max())
    if asym > SYMMETRY_RTOL * scale:
        raise ValidationError(f"matrix is not symmetric (max |M - M^T| = {asym:.3g})")
    return ElasticityTensor(0.5 * (voigt + voigt.T))


def load(path: str, fmt: str | None) -> ElasticityTensor:
    return to_elasticity(*parse_document(_read_text(path), fmt))


# --------------------------------------------------------------------------
# reports
# --------------------------------------------------------------------------

def _matrix(m) -> list[list[float]]:
    return [[float(x) for x in row] for row in np.asarray(m)]


def classify_report(E: ElasticityTensor, tol: float) -> dict:
    report = explain_elasticity(E, tol)
    n = E.norm()
    dec = decompose(E / n if n > 0 else E)
    checks = []
    for c in report.checks:
        if c.outcome is not None:
            checks.append({"name": c.name, "outcome": c.outcome})
        else:
            checks.append({"name": c.name, "residual": c.residual, "threshold": c.threshold, "vanishes": c.vanishes})
    H = dec.H
    h_cls = classify_h4(H, tol) if H.norm() > tol else SymmetryClass.ISOTROPIC
    return {
        "schema": SCHEMA,
        "command": "classify",
        "class": report.cls.label,
        "group": report.cls.group,
        "tol": tol,
        "scale": n,
        "checks": checks,
        "decomposition": {
            "lambda": dec.lam * n,
            "mu": dec.mu * n,
            "norm_a": float(np.linalg.norm(dec.a)) * n,
            "norm_b": float(np.linalg.norm(dec.b)) * n,
            "norm_H": H.norm() * n,
            "class_H": h_cls.label,
        },
    }


def decompose_report(E: ElasticityTensor, tol: float) -> dict:
    dec = decompose(E)
    H = dec.H
    return {
        "schema": SCHEMA,
        "command": "decompose",
        "lambda": dec.lam,
        "mu": dec.mu,
        "a": _matrix(dec.a),
        "b": _matrix(dec.b),
        "H_kelvin": _matrix(ElasticityTensor.from_full(H.full()).to_kelvin()),
        "zero": {
            "a": bool(np.linalg.norm(dec.a) <= tol * max(E.norm(), 1e-300)),
            "b": bool(np.linalg.norm(dec.b) <= tol * max(E.norm(), 1e-300)),
            "H": bool(H.norm() <= tol * max(E.norm(), 1e-300)),
        },
    }


def invariants_report(E: ElasticityTensor, basis: str) -> dict:
    if basis == "full297":
        ib = integrity_basis(E)
        return {
            "schema": SCHEMA,
            "command": "invariants",
            "basis": basis,
            "count": len(ib),
            "values": [{"label": k, "value": float(v)} for k, v in zip(ib.labels, ib.values)],
        }
    dec = decompose(E)
    b = boehler(dec.H)
    return {
        "schema": SCHEMA,
        "command": "invariants",
        "basis": basis,
        "lambda": dec.lam,
        "mu": dec.mu,
        "J": {f"J{k}": v for k, v in sorted(b.J.items())},
        "relations": {
            "240J6 + 39J2^3 + 190J3^2 - 198J2J4 - 540tr(d3^2)": boehler_relation(dec.H),
            **cubic_relations(dec.H),
        },
    }


def covariants_report(E: ElasticityTensor) -> dict:
    H = decompose(E).H
    return {
        "schema": SCHEMA,
        "command": "covariants",
        "norm_H": H.norm(),
        "entries": [
            {"index": e.index, "id": e.id, "degree": e.degree, "order": e.order, "norm": e.value.norm()}
            for e in eval_basis(H)
        ],
    }


def _fmt(x) -> str:
    return f"{x:.6g}" if isinstance(x, float) else str(x)


def render_text(report: dict) -> str:
    cmd = report["command"]
    lines = []
    if cmd == "classify":
        lines.append(f"class: {report['class']} ({report['group']})")
        d = report["decomposition"]
        lines.append("decomposition: " + ", ".join(f"{k}={_fmt(v)}" for k, v in d.items()))
        lines.append(f"tests (on E / {_fmt(report['scale'])}, tol {report['tol']:g}):")
        for c in report["checks"]:
            if "outcome" in c:
                lines.append(f"  {c['name']}: {c['outcome']}")
            else:
                mark = "zero" if c["vanishes"] else "nonzero"
                lines.append(f"  {c['name']}: {mark} (residual {c['residual']:.3e})")
    elif cmd == "decompose":
        lines.append(f"lambda = {_fmt(report['lambda'])}")
        lines.append(f"mu = {_fmt(report['mu'])}")
        for key in ("a", "b"):
            lines.append(f"{key}:" + (" zero" if report["zero"][key] else ""))
            lines += ["  " + " ".join(f"{x: .6g}" for x in row) for row in report[key]]
        lines.append("H (Kelvin):" + (" zero" if report["zero"]["H"] else ""))
        lines += ["  " + " ".join(f"{x: .6g}" for x in row) for row in report["H_kelvin"]]
    elif cmd == "invariants" and report["basis"] == "full297":
        lines += [f"{v['label']:>12} {v['value']: .10g}" for v in report["values"]]
    elif cmd == "invariants":
        lines.append(f"lambda = {_fmt(report['lambda'])}, mu = {_fmt(report['mu'])}")
        lines += [f"{k:>4} = {v: .10g}" for k, v in report["J"].items()]
        lines.append("relations (all vanish for cubic H):")
        lines += [f"  {k} = {v: .3e}" for k, v in report["relations"].items()]
    elif cmd == "covariants":
        lines.append(f"{'#':>3} {'id':<20} {'deg':>3} {'ord':>3} norm")
        lines += [f"{e['index']:>3} {e['id']:<20} {e['degree']:>3} {e['order']:>3} {e['norm']:.6g}" for e in report["entries"]]
    elif cmd == "verify":
        for r in report["rows"]:
            lines.append(f"{'PASS' if r['passed'] else 'FAIL'} [{r['suite']}] {r['name']}: {r['residual']:.3e} <= {r['threshold']:.1e}")
        lines.append("all passed" if report["passed"] else "FAILURES")
    return "\n".join(lines)


def emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        print(render_text(report))


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def _tol(args) -> float:
    tol = args.tol if args.tol is not None else default_tol()
    if not tol > 0:
        raise ValidationError("--tol must be positive")
    return tol


def cmd_classify(args) -> int:
    emit(classify_report(load(args.input, args.format), _tol(args)), args.json)
    return 0


def cmd_decompose(args) -> int:
    emit(decompose_report(load(args.input, args.format), _tol(args)), args.json)
    return 0


def cmd_invariants(args) -> int:
    emit(invariants_report(load(args.input, args.format), args.basis), args.json)
    return 0


def cmd_covariants(args) -> int:
    emit(covariants_report(load(args.input, args.format)), args.json)
    return 0


def cmd_gen(args) -> int:
    try:
        cls = SymmetryClass.parse(args.cls)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None
    if cls not in ELASTICITY_CLASSES:
        raise ValidationError(f"{cls.label} is not one of the eight elasticity classes")
    E = generate_elasticity(cls, seed=args.seed, rotate=args.rotate)
    matrix = E.to_kelvin() if args.out_format == "kelvin" else E.to_voigt()
    doc = {"schema": SCHEMA, "format": args.out_format, "class": cls.label, "seed": args.seed,
           "rotated": args.rotate, "matrix": _matrix(matrix)}
    text = json.dumps(doc, indent=2) + "\n"
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc.strerror or exc}", file=sys.stderr)
            return 1
    return 0


def cmd_verify(args) -> int:
    rows = run_suite(args.suite, seed=args.seed)
    report = {
        "schema": SCHEMA,
        "command": "verify",
        "suite": args.suite,
        "passed": all(r.passed for r in rows),
        "rows": [{"suite": r.suite, "name": r.name, "residual": float(r.residual),
                  "threshold": r.threshold, "passed": r.passed} for r in rows],
    }
    emit(report, args.json)
    return 0 if report["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="elasym",
        description="Symmetry classes, harmonic decomposition and invariants of elasticity tensors.",
        epilog="Voigt order: 11 22 33 23 13 12 (no factors). Kelvin: shear rows/columns scaled by sqrt(2). "
        "Tolerance default: $ELASYM_TOL or 1e-8.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--input", "-i", required=True, help="JSON or plain-text 6x6 file ('-' for stdin)")
        p.add_argument("--format", choices=FORMATS, default=None,
                       help="input layout; overrides the JSON 'format' field (default voigt)")
        p.add_argument("--json", action="store_true", help="emit the versioned JSON report")

    p = sub.add_parser("classify", help="symmetry class of a stiffness matrix")
    add_input(p)
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", help="harmonic decomposition (lambda, mu, a, b, H)")
    add_input(p)
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("invariants", help="Boehler invariants of H or the 297-generator integrity basis")
    add_input(p)
    p.add_argument("--basis", choices=("boehler", "full297"), default="boehler")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("covariants", help="the 70 covariant generators of the harmonic part")
    add_input(p)
    p.set_defaults(func=cmd_covariants)

    p = sub.add_parser("gen", help="write a fixture of a given symmetry class")
    p.add_argument("--class", dest="cls", required=True, help="class label, e.g. trigonal or D3")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rotate", action=argparse.BooleanOptionalAction, default=False)
    p.add_argument("--out", "-o", default=None, help="output path (default stdout)")
    p.add_argument("--out-format", choices=("voigt", "kelvin"), default="voigt")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="run the self-check suites")
    p.add_argument("--suite", choices=("core", "covariants", "bridge", "all"), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
