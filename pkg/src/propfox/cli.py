"""Command-line front end.

Subcommands mirror the library layers: validate, matrix, delta,
iwasawa-delta, zeros, extend, cohomology, corpus. Every subcommand takes
--json for a machine-readable report with a stable field order; the text
form prints the same data as key: value lines.

Exit codes: 0 success, 1 usage, 2 unreadable or unparsable input, 3 failed
presentation hypotheses, 4 domain errors in the requested computation
(division by zero, non-unit, missing inverse, identically zero divisor),
5 corpus mismatch. Internal consistency failures are deliberately not
caught: they are bugs and should produce a traceback.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import corpus
from .cohomology import h1_report, theorem_audit
from .errors import (
    DivisionByZero,
    GoldenMismatch,
    HypothesisViolated,
    IdenticallyZero,
    NotACocycle,
    NotAUnit,
    NotInvertible,
    ParseError,
    UsageError,
)
from .extensions import build_extension, cocycle_space, verify_factors
from .fitting import fitting_delta, iwasawa_delta
from .fox import Representation, alexander_matrix, parse_representation
from .laurent import LaurentPoly, format_laurent
from .presentation import parse_presentation, validate_presentation
from .scalars import format_rational, parse_rational
from .zeros import filter_unit_ball, zero_report

SCHEMA_VERSION = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _read(path: str) -> str:
    return Path(path).read_text()


def _load_pres(args):
    return parse_presentation(_read(args.file))


def _load_rep(args, pres) -> Representation:
    if getattr(args, "rep", None):
        return parse_representation(_read(args.rep), pres)
    return Representation.trivial(pres.n_generators)


def _poly_json(f: LaurentPoly) -> dict:
    return {
        "text": format_laurent(f),
        "coefficients": {str(e): format_rational(f.coeff(e)) for e in sorted(f.terms)},
    }


def _frac_matrix_json(M) -> list:
    return [[format_rational(x) for x in row] for row in M]


def _laurent_matrix_json(M) -> list:
    return [[format_laurent(x) for x in row] for row in M]


def _inputs(args) -> dict:
    inputs = {"presentation": args.file}
    if getattr(args, "rep", None):
        inputs["representation"] = args.rep
    return inputs


def _emit(args, command: str, results: dict, text_lines: list[str]) -> None:
    if args.json:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "inputs": _inputs(args) if hasattr(args, "file") else {},
            "results": results,
        }
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _cmd_validate(args) -> int:
    pres = _load_pres(args)
    report = validate_presentation(pres)
    results = {
        "ok": report.ok,
        "alpha_all_one": report.alpha_all_one,
        "relator_degrees": list(report.relator_degrees),
        "failures": list(report.failures),
    }
    lines = [f"prime: {pres.prime}", f"generators: {' '.join(pres.generators)}"]
    lines.append(f"relator degrees: {' '.join(str(d) for d in report.relator_degrees)}")
    if report.ok:
        lines.append("ok")
    else:
        lines.extend(report.failures)
    _emit(args, "validate", results, lines)
    return 0 if report.ok else 3


def _cmd_matrix(args) -> int:
    pres = _load_pres(args)
    rep = _load_rep(args, pres)
    Q = alexander_matrix(pres, rep)
    results = {
        "rows": Q.n_rows,
        "cols": Q.n_cols,
        "block_dim": Q.block_dim,
        "entries": _laurent_matrix_json(Q.entries),
    }
    lines = [f"shape: {Q.n_rows} x {Q.n_cols} (blocks of {Q.block_dim})"]
    for row in Q.entries:
        lines.append("[" + ", ".join(format_laurent(f) for f in row) + "]")
    _emit(args, "matrix", results, lines)
    return 0


def _cmd_delta(args) -> int:
    pres = _load_pres(args)
    rep = _load_rep(args, pres)
    Q = alexander_matrix(pres, rep)
    fit = fitting_delta(Q, args.d)
    results = {
        "d": args.d,
        "delta": _poly_json(fit.delta),
        "mu_content": fit.mu_content,
        "minor_count": fit.minor_count,
    }
    lines = [
        f"d: {args.d}",
        f"delta: {format_laurent(fit.delta)}",
        f"mu_content: {fit.mu_content}",
        f"minor_count: {fit.minor_count}",
    ]
    _emit(args, "delta", results, lines)
    return 0


def _cmd_iwasawa_delta(args) -> int:
    pres = _load_pres(args)
    delta = iwasawa_delta(pres, args.d)
    results = {"d": args.d, "delta": _poly_json(delta)}
    lines = [f"d: {args.d}", f"delta: {format_laurent(delta)}"]
    _emit(args, "iwasawa-delta", results, lines)
    return 0


def _cmd_zeros(args) -> int:
    pres = _load_pres(args)
    rep = _load_rep(args, pres)
    Q = alexander_matrix(pres, rep)
    fit = fitting_delta(Q, args.d)
    report = zero_report(fit.delta, pres.prime, args.prec)
    kept = filter_unit_ball(report)

    def _report_json(r) -> dict:
        return {
            "identically_zero": r.identically_zero,
            "rational": [
                {"value": format_rational(a), "multiplicity": m} for a, m in r.rational
            ],
            "padic": [
                {"residue": res, "modulus_exponent": n} for res, n in r.padic
            ],
            "obstructions": list(r.obstructions),
        }

    results = {
        "d": args.d,
        "delta": _poly_json(fit.delta),
        "prime": pres.prime,
        "precision": args.prec,
        "all": _report_json(report),
        "unit_ball": _report_json(kept),
    }
    lines = [f"d: {args.d}", f"delta: {format_laurent(fit.delta)}"]
    if report.identically_zero:
        lines.append("identically zero: every point is a zero")
    else:
        lines.append(
            "rational zeros: "
            + (
                ", ".join(f"{format_rational(a)} (x{m})" for a, m in report.rational)
                or "none"
            )
        )
        lines.append(
            f"p-adic zeros mod {pres.prime}^{args.prec}: "
            + (", ".join(str(r) for r, _ in report.padic) or "none")
        )
        lines.append(
            "obstructed residues: "
            + (", ".join(str(r) for r in report.obstructions) or "none")
        )
        lines.append(
            "unit ball rational zeros: "
            + (
                ", ".join(f"{format_rational(a)} (x{m})" for a, m in kept.rational)
                or "none"
            )
        )
        lines.append(
            "unit ball p-adic zeros: "
            + (", ".join(str(r) for r, _ in kept.padic) or "none")
        )
    _emit(args, "zeros", results, lines)
    return 0


def _cmd_extend(args) -> int:
    pres = _load_pres(args)
    rep = _load_rep(args, pres)
    space = cocycle_space(pres, rep, args.at)
    results: dict = {
        "at": format_rational(space.a),
        "dim": space.dim,
        "basis": [[format_rational(x) for x in h.stacked()] for h in space.basis],
    }
    lines = [
        f"at: {format_rational(space.a)}",
        f"dim: {space.dim}",
    ]
    for i, h in enumerate(space.basis):
        lines.append(
            f"basis[{i}]: (" + ", ".join(format_rational(x) for x in h.stacked()) + ")"
        )
    if space.dim > 0:
        sample = space.basis[0]
        candidate = build_extension(pres, rep, args.at, sample)
        verification = verify_factors(candidate, pres)
        results["sample"] = {
            "beta": [format_rational(x) for x in sample.stacked()],
            "images": [_frac_matrix_json(M) for M in candidate.mats],
            "relators": [
                {"ok": c.ok, "image": _frac_matrix_json(c.image)}
                for c in verification.relators
            ],
            "verified": verification.ok,
        }
        lines.append("sample extension from basis[0]:")
        for name, M in zip(pres.generators, candidate.mats):
            lines.append(
                f"  {name} -> "
                + "[" + "; ".join(", ".join(format_rational(x) for x in row) for row in M) + "]"
            )
        for j, c in enumerate(verification.relators, start=1):
            lines.append(f"  relator {j}: {'ok' if c.ok else 'FAIL'}")
        lines.append(f"verified: {'true' if verification.ok else 'false'}")
    _emit(args, "extend", results, lines)
    return 0


def _cmd_cohomology(args) -> int:
    pres = _load_pres(args)
    rep = _load_rep(args, pres)
    coh = h1_report(pres, rep, args.at)
    audit = theorem_audit(pres, rep, args.at)
    results = {
        "at": format_rational(coh.a),
        "z1_dim": coh.z1_dim,
        "b1_dim": coh.b1_dim,
        "h1_dim": coh.h1_dim,
        "fixed_dim": coh.fixed_dim,
        "delta_value_at_a": format_rational(coh.delta_value_at_a),
        "cocycle_basis": [
            [format_rational(x) for x in h.stacked()] for h in coh.cocycle_basis
        ],
        "fixed_basis": [
            [format_rational(x) for x in v] for v in coh.fixed_basis
        ],
        "audit": {
            "forward_applicable": audit.forward_applicable,
            "forward_verdict": audit.forward_verdict,
            "converse_applicable": audit.converse_applicable,
            "converse_verdict": audit.converse_verdict,
            "hypothesis_failures": list(audit.hypothesis_failures),
        },
    }
    lines = [
        f"at: {format_rational(coh.a)}",
        f"cocycles: {coh.z1_dim}",
        f"coboundaries: {coh.b1_dim}",
        f"quotient: {coh.h1_dim}",
        f"fixed space: {coh.fixed_dim}",
        f"divisor value: {format_rational(coh.delta_value_at_a)}",
        f"audit forward: {audit.forward_verdict}",
        f"audit converse: {audit.converse_verdict}",
    ]
    _emit(args, "cohomology", results, lines)
    return 0


def _cmd_corpus(args) -> int:
    try:
        results = corpus.run(args.id)
    except KeyError:
        raise UsageError(f"unknown corpus entry: {args.id}")
    check_dicts = [
        {
            "entry": r.entry,
            "name": r.name,
            "source": r.source,
            "ok": r.ok,
            "expected": r.expected,
            "actual": r.actual,
        }
        for r in results
    ]
    ok_count = sum(1 for r in results if r.ok)
    lines = []
    for r in results:
        mark = "ok" if r.ok else "FAIL"
        lines.append(f"{r.entry}: {r.name} [{r.source}]: {mark}")
    lines.append(f"{ok_count}/{len(results)} checks passed")
    if args.json:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": "corpus",
            "inputs": {"id": args.id},
            "results": {"checks": check_dicts, "passed": ok_count, "total": len(results)},
        }
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)
    corpus.ensure(results)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(
        prog="propfox",
        description=(
            "Exact relation-matrix calculus for weighted group presentations: "
            "determinant divisors, their rational and p-adic zeros, crossed "
            "homomorphisms, representation extensions, and quotient cohomology."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str, needs_file=True):
        p = sub.add_parser(name, help=help_text)
        if needs_file:
            p.add_argument("file", help="presentation file")
        p.add_argument("--json", action="store_true", help="JSON output")
        p.set_defaults(func=func)
        return p

    add("validate", _cmd_validate, "check the presentation hypotheses")

    p = add("matrix", _cmd_matrix, "print the relation matrix")
    p.add_argument("--rep", help="representation file (default: trivial)")

    p = add("delta", _cmd_delta, "d-th determinant divisor")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--rep", help="representation file (default: trivial)")

    p = add("iwasawa-delta", _cmd_iwasawa_delta, "divisor in the classical indexing")
    p.add_argument("--d", type=int, required=True)

    p = add("zeros", _cmd_zeros, "rational and p-adic zeros of a divisor")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--rep", help="representation file (default: trivial)")
    p.add_argument("--prec", type=int, default=8, help="p-adic precision exponent")

    p = add("extend", _cmd_extend, "crossed homomorphisms and a sample extension")
    p.add_argument("--at", type=_rational_arg, required=True, help="evaluation point")
    p.add_argument("--rep", help="representation file (default: trivial)")

    p = add("cohomology", _cmd_cohomology, "quotient cohomology and the audit")
    p.add_argument("--at", type=_rational_arg, required=True, help="evaluation point")
    p.add_argument("--rep", help="representation file (default: trivial)")

    p = sub.add_parser("corpus", help="recompute the bundled examples")
    p.add_argument("action", choices=["run"])
    p.add_argument("--id", help="run a single corpus entry")
    p.add_argument("--json", action="store_true", help="JSON output")
    p.set_defaults(func=_cmd_corpus)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except HypothesisViolated as exc:
        print(f"hypothesis violated: {exc}", file=sys.stderr)
        return 3
    except (DivisionByZero, NotAUnit, NotInvertible, IdenticallyZero, NotACocycle) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 4
    except GoldenMismatch as exc:
        print(f"corpus mismatch: {exc}", file=sys.stderr)
        return 5


if __name__ == "__main__":
    sys.exit(main())
