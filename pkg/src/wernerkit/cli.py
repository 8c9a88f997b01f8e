"""Command-line front end.

Subcommands expose the constructions and checks with deterministic,
machine-readable output.  Exit codes: 0 success / invariant, 1 a check
failed, 2 usage error, 3 unreadable or unparseable input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import serialize
from .chord_diagrams import (
    enumerate_noncrossing,
    format_diagram,
    parse_diagram,
    representative_set,
)
from .exactmat import ScaledGaussianOperator
from .separability import table2
from .states import ScaledIntState, check_pure_werner, diagram_state, pizza_state, polygon_density
from .werner_ops import (
    IN_SPAN_TOL,
    check_mixed_werner,
    decompose,
    hermitian_basis,
    twirl_check,
)

DEFAULT_CHECK_TOL = 1e-10


class UsageError(Exception):
    pass


def entrypoint() -> None:
    sys.exit(main())


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (serialize.ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wernerkit",
        description="Chord-diagram bases and polygon states for collective-unitary-invariant qubit operators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diagrams", help="list noncrossing diagrams with symmetry tags")
    p.add_argument("--n", type=int, required=True, help="number of chords (1..6)")
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    p.add_argument("--out", type=Path)
    p.set_defaults(handler=_cmd_diagrams)

    p = sub.add_parser("basis", help="emit the Hermitian operator basis")
    p.add_argument("--n", type=int, required=True, help="number of qubits (1..5)")
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    p.add_argument("--out", type=Path)
    p.set_defaults(handler=_cmd_basis)

    p = sub.add_parser("state", help="emit an exact diagram or pizza state")
    p.add_argument("--n", type=int, help="chords for --pizza")
    p.add_argument("--pizza", action="store_true", help="the pizza state on 2n qubits")
    p.add_argument("--diagram", help="diagram literal 'n; a1-b1, a2-b2, ...'")
    p.add_argument("--out", type=Path)
    p.set_defaults(handler=_cmd_state)

    p = sub.add_parser("polygon", help="emit the polygon density matrix as floats")
    p.add_argument("--m", type=int, required=True, help="number of qubits (2..10)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", type=Path)
    p.set_defaults(handler=_cmd_polygon)

    p = sub.add_parser("check", help="invariance report for a state or operator file")
    p.add_argument("--in", dest="input", type=Path, required=True)
    p.add_argument("--tol", type=float, default=DEFAULT_CHECK_TOL)
    p.add_argument("--samples", type=int, help="also twirl-test with this many Haar samples")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=Path)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("decompose", help="coefficients of an operator over the basis")
    p.add_argument("--in", dest="input", type=Path, required=True)
    p.add_argument("--n", type=int, required=True, help="number of qubits (1..5)")
    p.add_argument("--out", type=Path)
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("table2", help="exact reduced-entry table")
    p.add_argument("--m-max", type=int, required=True, help="largest m (3..12)")
    p.add_argument("--distance", type=int, help="only rows at this distance")
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", type=Path)
    p.set_defaults(handler=_cmd_table2)

    return parser


def _check_range(value: int, lo: int, hi: int, what: str) -> None:
    if not lo <= value <= hi:
        raise UsageError(f"{what} must be in {lo}..{hi}, got {value}")


def _emit(args, text: str) -> None:
    if args.out is not None:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_diagrams(args) -> int:
    _check_range(args.n, 1, 6, "--n")
    reps = {d.chords for d in representative_set(args.n)}
    rows = [
        {
            "diagram": format_diagram(d),
            "half_turn_symmetric": d.has_half_turn_symmetry(),
            "in_representative_set": d.chords in reps,
        }
        for d in enumerate_noncrossing(args.n)
    ]
    if args.format == "json":
        _emit(args, serialize.dumps(rows))
    elif args.format == "csv":
        lines = ["diagram,half_turn_symmetric,in_representative_set"]
        for row in rows:
            lines.append(
                f"\"{row['diagram']}\",{int(row['half_turn_symmetric'])},{int(row['in_representative_set'])}"
            )
        _emit(args, "\n".join(lines) + "\n")
    else:
        lines = []
        for row in rows:
            tag = "symm" if row["half_turn_symmetric"] else "nonrot"
            marker = " R" if row["in_representative_set"] else ""
            lines.append(f"{row['diagram']}  [{tag}]{marker}")
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_basis(args) -> int:
    _check_range(args.n, 1, 5, "--n")
    basis = hermitian_basis(args.n)
    if args.format == "json":
        payload = {
            "n": basis.n,
            "elements": [
                {
                    "provenance": tag,
                    "diagram": format_diagram(diagram),
                    "operator": serialize.operator_to_dict(element),
                }
                for element, (tag, diagram) in zip(basis.elements, basis.provenance)
            ],
        }
        _emit(args, serialize.dumps(payload))
    elif args.format == "csv":
        blocks = []
        for idx, element in enumerate(basis.elements):
            tag, diagram = basis.provenance[idx]
            blocks.append(
                serialize.operator_float_csv(
                    element, label=f"element {idx}: {tag} {format_diagram(diagram)}"
                )
            )
        _emit(args, "".join(blocks))
    else:
        lines = [f"basis for n={basis.n}: {len(basis)} elements"]
        for idx, (tag, diagram) in enumerate(basis.provenance):
            lines.append(f"  [{idx}] {tag:<18} {format_diagram(diagram)}")
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_state(args) -> int:
    if args.pizza == (args.diagram is not None):
        raise UsageError("choose exactly one of --pizza or --diagram")
    if args.pizza:
        if args.n is None:
            raise UsageError("--pizza requires --n")
        _check_range(args.n, 1, 6, "--n")
        state = pizza_state(args.n)
    else:
        try:
            diagram = parse_diagram(args.diagram)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        state = diagram_state(diagram)
    _emit(args, serialize.dumps(serialize.state_to_dict(state)))
    return 0


def _cmd_polygon(args) -> int:
    _check_range(args.m, 2, 10, "--m")
    rho = polygon_density(args.m)
    if args.format == "json":
        _emit(args, serialize.dumps(serialize.float_matrix_to_dict(rho)))
    else:
        _emit(args, serialize.operator_float_csv(rho))
    return 0


def _cmd_check(args) -> int:
    loaded = serialize.load_document(args.input.read_text())
    if isinstance(loaded, ScaledIntState):
        report = check_pure_werner(loaded)
        kind = "pure-state"
        complex_form = None
    elif isinstance(loaded, ScaledGaussianOperator):
        report = check_mixed_werner(loaded)
        kind = "operator-exact"
        complex_form = loaded.to_complex()
    else:
        report = check_mixed_werner(loaded)
        kind = "operator-float"
        complex_form = loaded
    invariant = report.is_invariant(args.tol)
    payload = {
        "kind": kind,
        "tolerance": args.tol,
        "z_residual": float(report.z_residual),
        "x_residual": float(report.x_residual),
        "invariant": invariant,
    }
    if args.samples is not None:
        if complex_form is None:
            raise UsageError("twirl sampling applies to operators, not state vectors")
        payload["twirl_samples"] = args.samples
        payload["twirl_seed"] = args.seed
        payload["twirl_deviation"] = twirl_check(complex_form, args.samples, args.seed)
    _emit(args, serialize.dumps(payload))
    return 0 if invariant else 1


def _cmd_decompose(args) -> int:
    _check_range(args.n, 1, 5, "--n")
    loaded = serialize.load_document(args.input.read_text())
    if isinstance(loaded, ScaledIntState):
        raise UsageError("decompose expects an operator document, not a state")
    basis = hermitian_basis(args.n)
    try:
        result = decompose(loaded, basis)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = {
        "n": args.n,
        "coefficients": result.coefficient_floats(),
        "residual": float(result.residual),
        "in_span": result.in_span(),
        "tolerance": IN_SPAN_TOL,
    }
    if isinstance(loaded, ScaledGaussianOperator):
        payload["coefficients_exact"] = [
            [c.numerator, c.denominator] for c in result.coefficients
        ]
        payload["scale_sqrt2_exponent"] = result.scale_sqrt2_exponent
    _emit(args, serialize.dumps(payload))
    return 0 if result.in_span() else 1


def _cmd_table2(args) -> int:
    _check_range(args.m_max, 3, 12, "--m-max")
    if args.threads < 1:
        raise UsageError(f"--threads must be positive, got {args.threads}")
    rows = table2(args.m_max, threads=args.threads)
    if args.distance is not None:
        if args.distance < 1:
            raise UsageError(f"--distance must be positive, got {args.distance}")
        rows = [row for row in rows if row.distance == args.distance]
    if args.format == "json":
        _emit(args, serialize.table_to_json(rows))
    elif args.format == "csv":
        _emit(args, serialize.table_to_csv(rows))
    else:
        lines = ["  m  |a-b|  value"]
        for row in rows:
            frac = f"{row.numerator}/{row.denominator}"
            lines.append(f"{row.m:3d}  {row.distance:4d}  {frac:>8s}  = {row.decimal:.4f}")
        _emit(args, "\n".join(lines) + "\n")
    return 0
