"""Command-line interface: certify points, sweep grids, evaluate conjugates.

The function under study is described by a JSON spec document, e.g.

    {"kind": "power", "exponent": 2, "domain": [0, 2]}
    {"kind": "affine", "slope": 1.5, "intercept": -1, "domain": [-1, 1]}
    {"kind": "exp", "shift": 1, "domain": [0, 2]}
    {"kind": "table", "points": [[0, 0], [1, 1], [2, 4]]}

passed inline (--spec), as a file (--spec-file), or on stdin.  Exit status
0 means every requested verdict was certified; 2 flags invalid input; 3
flags inconclusive verdicts.  Machine output and sweep files are
byte-identical across identical invocations.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from .errors import (
    BudgetExceeded,
    DomainError,
    ParseError,
    UnsupportedOrigin,
    ValidationError,
)
from .gap import Certificate, GapReport, certify, sweep
from .legendre import LegendrePair, conjugate_value, legendre_gap_report
from .monotone import ConjugatePair, MonotoneFn, affine_fn, exp_fn, power_fn, table_fn
from .quadrature import QuadratureConfig

__all__ = ["FunctionSpec", "parse_spec", "main"]

_SWEEP_HEADER = "a,b,F_lo,F_hi,ub_lo,ub_hi,merkle,equality"


@dataclass(frozen=True)
class FunctionSpec:
    """Validated description of a monotone function, round-trippable to JSON."""

    kind: str
    parameters: tuple
    domain: tuple | None
    codomain: tuple | None = None

    def build(self) -> MonotoneFn:
        if self.kind == "power":
            exponent, coefficient = self.parameters
            fn = power_fn(exponent, self.domain, coefficient=coefficient)
        elif self.kind == "affine":
            slope, intercept = self.parameters
            fn = affine_fn(slope, self.domain, intercept=intercept)
        elif self.kind == "exp":
            (shift,) = self.parameters
            fn = exp_fn(shift, self.domain)
        else:
            fn = table_fn(self.parameters)
        if self.codomain is not None:
            lo, hi = self.codomain
            if abs(fn.codomain.lo - lo) > 1e-9 or abs(fn.codomain.hi - hi) > 1e-9:
                raise ValidationError(
                    f"declared codomain [{lo}, {hi}] does not match computed "
                    f"[{fn.codomain.lo}, {fn.codomain.hi}]"
                )
        return fn

    def to_dict(self) -> dict:
        doc: dict = {"kind": self.kind}
        if self.kind == "power":
            doc["exponent"], doc["coefficient"] = self.parameters
        elif self.kind == "affine":
            doc["slope"], doc["intercept"] = self.parameters
        elif self.kind == "exp":
            (doc["shift"],) = self.parameters
        else:
            doc["points"] = [list(p) for p in self.parameters]
        if self.domain is not None:
            doc["domain"] = list(self.domain)
        if self.codomain is not None:
            doc["codomain"] = list(self.codomain)
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _number(doc, key, default=None):
    if key not in doc:
        if default is None:
            raise ParseError(f"missing required field {key!r}")
        return float(default)
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"field {key!r} must be a number, got {value!r}")
    return float(value)


def _pair_of_numbers(doc, key):
    value = doc.get(key)
    if value is None:
        return None
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ParseError(f"field {key!r} must be a two-element array")
    if any(isinstance(v, bool) or not isinstance(v, (int, float)) for v in value):
        raise ParseError(f"field {key!r} must contain numbers")
    return (float(value[0]), float(value[1]))


_ALLOWED_FIELDS = {
    "power": {"kind", "exponent", "coefficient", "domain", "codomain"},
    "affine": {"kind", "slope", "intercept", "domain", "codomain"},
    "exp": {"kind", "shift", "domain", "codomain"},
    "table": {"kind", "points", "codomain"},
}


def parse_spec(text: str) -> FunctionSpec:
    """Parse and validate a JSON spec document.

    Raises ParseError for malformed documents and ValidationError when the
    described function violates the strict-increase constraints (the
    function is built once here so bad specs fail before any command runs).
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"spec document is not valid JSON: {err}") from None
    if not isinstance(doc, dict):
        raise ParseError("spec document must be a JSON object")
    kind = doc.get("kind")
    if kind not in _ALLOWED_FIELDS:
        raise ParseError(f"unknown kind {kind!r}; expected power, affine, exp or table")
    unknown = set(doc) - _ALLOWED_FIELDS[kind]
    if unknown:
        raise ParseError(f"unknown fields for kind {kind!r}: {sorted(unknown)}")

    if kind == "table":
        points = doc.get("points")
        if not isinstance(points, list) or not points:
            raise ParseError("field 'points' must be a non-empty array of [x, y] pairs")
        rows = []
        for i, row in enumerate(points):
            if not isinstance(row, (list, tuple)) or len(row) != 2:
                raise ParseError(f"points[{i}] must be an [x, y] pair")
            if any(isinstance(v, bool) or not isinstance(v, (int, float)) for v in row):
                raise ParseError(f"points[{i}] must contain numbers")
            rows.append((float(row[0]), float(row[1])))
        spec = FunctionSpec("table", tuple(rows), None, _pair_of_numbers(doc, "codomain"))
    else:
        domain = _pair_of_numbers(doc, "domain")
        if domain is None:
            raise ParseError("missing required field 'domain'")
        if kind == "power":
            params = (_number(doc, "exponent"), _number(doc, "coefficient", 1.0))
        elif kind == "affine":
            params = (_number(doc, "slope"), _number(doc, "intercept", 0.0))
        else:
            params = (_number(doc, "shift", 0.0),)
        spec = FunctionSpec(kind, params, domain, _pair_of_numbers(doc, "codomain"))
    spec.build()  # validate now so diagnostics name the offending field early
    return spec


def _fmt(x: float) -> str:
    return "%.17g" % x


def _load_spec(args) -> FunctionSpec:
    if args.spec is not None:
        return parse_spec(args.spec)
    if args.spec_file is not None:
        with open(args.spec_file, "r", encoding="utf-8") as fh:
            return parse_spec(fh.read())
    return parse_spec(sys.stdin.read())


def _quad_config(args) -> QuadratureConfig:
    return QuadratureConfig(
        initial_panels=args.initial_panels,
        max_panels=args.max_panels,
        target_width=args.target_width,
    )


def _verdict_doc(cert: Certificate) -> dict:
    return {
        "lower": cert.lower_holds.value,
        "upper": cert.upper_holds.value,
        "equality": cert.equality_case.value,
    }


def _machine_doc(cert: Certificate, report: GapReport) -> dict:
    return {
        "a": report.a,
        "b": report.b,
        "F_lo": report.remainder.lo,
        "F_hi": report.remainder.hi,
        "ub_lo": report.upper_bound.lo,
        "ub_hi": report.upper_bound.hi,
        "merkle": report.merkle_bound,
        "verdicts": _verdict_doc(cert),
        "effort": cert.effort.to_dict(),
    }


def run_certify(args) -> int:
    spec = _load_spec(args)
    pair = ConjugatePair(spec.build())
    cert, report = certify(pair, args.a, args.b, cert_tol=args.tol, cfg=_quad_config(args))
    if args.machine:
        print(json.dumps(_machine_doc(cert, report), sort_keys=True))
    else:
        print(f"F({_fmt(report.a)}, {_fmt(report.b)}) in "
              f"[{_fmt(report.remainder.lo)}, {_fmt(report.remainder.hi)}]")
        print(f"upper bound in [{_fmt(report.upper_bound.lo)}, {_fmt(report.upper_bound.hi)}]")
        if report.merkle_bound is not None:
            print(f"merkle bound: {_fmt(report.merkle_bound)}")
        print(f"verdicts: lower={cert.lower_holds.value} upper={cert.upper_holds.value} "
              f"equality={cert.equality_case.value}")
    return 0 if cert.conclusive else 3


def _grid(lo: float, hi: float, steps: int, name: str):
    if steps < 1:
        raise ValidationError(f"--{name}-steps must be >= 1, got {steps}")
    if steps == 1:
        if lo != hi:
            raise ValidationError(f"--{name}-steps 1 requires {name}-min == {name}-max")
        return [lo]
    return [float(v) for v in np.linspace(lo, hi, steps)]


def run_sweep(args) -> int:
    spec = _load_spec(args)
    pair = ConjugatePair(spec.build())
    grid_a = _grid(args.a_min, args.a_max, args.a_steps, "a")
    grid_b = _grid(args.b_min, args.b_max, args.b_steps, "b")
    reports = sweep(pair, grid_a, grid_b, cert_tol=args.tol, cfg=_quad_config(args))
    lines = [_SWEEP_HEADER]
    for r in reports:
        merkle = "" if r.merkle_bound is None else _fmt(r.merkle_bound)
        lines.append(
            f"{_fmt(r.a)},{_fmt(r.b)},{_fmt(r.remainder.lo)},{_fmt(r.remainder.hi)},"
            f"{_fmt(r.upper_bound.lo)},{_fmt(r.upper_bound.hi)},{merkle},"
            f"{'true' if r.equality_detected else 'false'}"
        )
    text = "\n".join(lines) + "\n"
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def run_conjugate(args) -> int:
    spec = _load_spec(args)
    pair = LegendrePair(spec.build(), phi_anchor=args.anchor)
    cfg = _quad_config(args)
    values = [(b, conjugate_value(pair, b, cfg)) for b in args.b]
    report = None
    if args.check_bound is not None:
        ra, rb = args.check_bound
        report = legendre_gap_report(pair, ra, rb, cfg, cert_tol=args.tol)
    if args.machine:
        doc = {
            "conjugate": [{"b": b, "lo": enc.lo, "hi": enc.hi} for b, enc in values],
            "report": None
            if report is None
            else {
                "a": report.a,
                "b": report.b,
                "F_lo": report.remainder.lo,
                "F_hi": report.remainder.hi,
                "ub_lo": report.upper_bound.lo,
                "ub_hi": report.upper_bound.hi,
                "merkle": report.merkle_bound,
                "equality": report.equality_detected,
            },
        }
        print(json.dumps(doc, sort_keys=True))
    else:
        for b, enc in values:
            print(f"Psi({_fmt(b)}) in [{_fmt(enc.lo)}, {_fmt(enc.hi)}]")
        if report is not None:
            print(f"gap F({_fmt(report.a)}, {_fmt(report.b)}) in "
                  f"[{_fmt(report.remainder.lo)}, {_fmt(report.remainder.hi)}]")
            print(f"upper bound in [{_fmt(report.upper_bound.lo)}, {_fmt(report.upper_bound.hi)}]")
            print(f"equality: {'true' if report.equality_detected else 'false'}")
    return 0


def _add_common(sub) -> None:
    sub.add_argument("--spec", help="inline JSON spec document")
    sub.add_argument("--spec-file", help="path to a JSON spec document")
    sub.add_argument("--tol", type=float, default=1e-8,
                     help="certification tolerance (default 1e-8)")
    sub.add_argument("--target-width", type=float, default=1e-9,
                     help="quadrature width target (default 1e-9)")
    sub.add_argument("--initial-panels", type=int, default=16,
                     help="starting panel count (default 16)")
    sub.add_argument("--max-panels", type=int, default=2**20,
                     help="panel budget (default 2**20)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="younggap",
        description="Certified enclosures for the Young remainder and its product upper bound.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("certify", help="certify the two-sided bound at one point")
    _add_common(p)
    p.add_argument("-a", type=float, required=True)
    p.add_argument("-b", type=float, required=True)
    p.add_argument("--machine", action="store_true", help="emit a JSON report document")
    p.set_defaults(func=run_certify)

    p = subs.add_parser("sweep", help="write a CSV of reports over an (a, b) grid")
    _add_common(p)
    p.add_argument("--a-min", type=float, required=True)
    p.add_argument("--a-max", type=float, required=True)
    p.add_argument("--a-steps", type=int, required=True)
    p.add_argument("--b-min", type=float, required=True)
    p.add_argument("--b-max", type=float, required=True)
    p.add_argument("--b-steps", type=int, required=True)
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=run_sweep)

    p = subs.add_parser("conjugate", help="evaluate the conjugate potential")
    _add_common(p)
    p.add_argument("-b", type=float, action="append", required=True,
                   help="evaluation point (repeatable)")
    p.add_argument("--anchor", type=float, default=0.0,
                   help="potential value at the left domain endpoint (default 0)")
    p.add_argument("--check-bound", nargs=2, type=float, metavar=("A", "B"),
                   help="also report the two-sided bound at the point (A, B)")
    p.add_argument("--machine", action="store_true", help="emit a JSON report document")
    p.set_defaults(func=run_conjugate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValidationError, DomainError, UnsupportedOrigin, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except BudgetExceeded as err:
        print(f"error: {err}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
