"""Command-line front end.

Exit codes: 0 success (or "commute"), 1 semantic failure, 2 input error,
3 unsupported case.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from tropcommute.bary import (
    UnsupportedCaseError,
    build_plot,
    concurrency_check,
    emit_plot,
    plot_to_tsv,
)
from tropcommute.commute import (
    CaseTag,
    NonFiniteMatrixError,
    basis_commuting_cone,
    commutes,
    default_grid,
    verify_basis,
)
from tropcommute.matrix import (
    DimensionError,
    TropMatrix,
    format_matrix,
    mat_otimes,
    matrix_to_json,
    parse_matrix,
)
from tropcommute.semiring import DEFAULT_TOL
from tropcommute.sweep import run_sweep

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_UNSUPPORTED = 3


class InputError(Exception):
    pass


def read_source(source: str) -> str:
    """Matrix text from ``-`` (stdin), an existing file path, or the argument itself."""
    if source == "-":
        return sys.stdin.read()
    if os.path.isfile(source):
        return Path(source).read_text()
    return source


def load_matrix(source: str, name: str, finite: bool = False) -> TropMatrix:
    try:
        M = parse_matrix(read_source(source))
    except (ValueError, OSError) as exc:
        raise InputError(f"{name}: {exc}") from None
    if M.shape != (2, 2):
        raise InputError(f"{name}: expected a 2x2 matrix, got {M.rows}x{M.cols}")
    if finite and not M.is_finite():
        raise InputError(f"{name}: entries must be finite")
    return M


def _emit(args, text: str, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_check(args) -> int:
    A = load_matrix(args.A, "A", finite=True)
    B = load_matrix(args.B, "B")
    AB, BA = mat_otimes(A, B), mat_otimes(B, A)
    ok = commutes(A, B, args.tol)
    verdict = "COMMUTE" if ok else "DO NOT COMMUTE"
    text = f"A (x) B = {format_matrix(AB)}\nB (x) A = {format_matrix(BA)}\n{verdict}"
    _emit(args, text, {
        "A": matrix_to_json(A), "B": matrix_to_json(B),
        "AB": matrix_to_json(AB), "BA": matrix_to_json(BA), "commute": ok,
    })
    return EXIT_OK if ok else EXIT_FAIL


def cmd_basis(args) -> int:
    A = load_matrix(args.A, "A", finite=True)
    report = verify_basis(A, default_grid(args.grid_radius), tol=args.tol, seed=args.seed)
    _emit(args, report.to_text(), report.to_json())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_bary(args) -> int:
    A = load_matrix(args.A, "A", finite=True)
    cone = basis_commuting_cone(A, args.tol)
    if cone.case is CaseTag.EQUAL:
        print("projection undefined for equal diagonal", file=sys.stderr)
        return EXIT_UNSUPPORTED
    plot = build_plot(cone, args.tol)
    conc = concurrency_check(cone, args.tol)
    fmt = args.format if args.format in ("svg", "tsv") else "svg"
    data = emit_plot(plot, fmt)

    lines = [
        f"case: {cone.case.value}",
        "omega: phi=(" + ", ".join(f"{p:.9g}" for p in conc.omega.phi) + ")"
        + " xy=(" + ", ".join(f"{c:.9g}" for c in conc.omega_xy) + ")",
        f"concurrency residual: {conc.residual:.3g}",
        f"apex-ray foot to beta4: {conc.foot_residual:.3g}",
        "concurrency: " + ("PASS" if conc.passed else "FAIL"),
    ]
    if args.out:
        out = Path(args.out)
        out.write_bytes(data)
        lines.append(f"wrote {out}")
        if fmt == "svg":
            table = out.with_suffix(".tsv")
            table.write_text(plot_to_tsv(plot))
            lines.append(f"wrote {table}")
        print("\n".join(lines))
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        print("\n".join(lines), file=sys.stderr)
    return EXIT_OK if conc.passed else EXIT_FAIL


def cmd_verify(args) -> int:
    report = run_sweep(
        seed=args.seed,
        matrices=args.matrices,
        grid_radius=args.grid_radius,
        tol=args.tol,
        mutate_basis=args.mutate_basis,
    )
    _emit(args, report.to_text(), report.to_json())
    return EXIT_OK if report.passed else EXIT_FAIL


def _nonneg_float(text: str) -> float:
    x = float(text)
    if not x >= 0:
        raise argparse.ArgumentTypeError("tolerance must be >= 0")
    return x


def _radius(text: str) -> int:
    r = int(text)
    if r < 1:
        raise argparse.ArgumentTypeError("grid radius must be >= 1")
    return r


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_nonneg_float, default=DEFAULT_TOL,
                        help="comparison tolerance (default %(default)g)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--grid-radius", type=_radius, default=5,
                        help="enumerate entries in -R..R plus -inf (default %(default)s)")
    common.add_argument("--format", choices=("text", "json", "svg", "tsv"), default="text")

    parser = argparse.ArgumentParser(
        prog="tropcommute",
        description="Max-plus 2x2 commuting matrices: checks, bases and projections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="test whether A and B commute")
    p.add_argument("A", help="matrix text, file path, or - for stdin")
    p.add_argument("B", help="matrix text, file path, or - for stdin")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("basis", parents=[common], help="basis of the commuting cone of A")
    p.add_argument("A")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("bary", parents=[common], help="barycentric projection of the cone")
    p.add_argument("A")
    p.add_argument("--out", help="write the figure/table here (svg also writes a .tsv beside it)")
    p.set_defaults(func=cmd_bary)

    p = sub.add_parser("verify", parents=[common], help="seeded oracle sweep over all cases")
    p.add_argument("--matrices", type=int, default=10, help="random matrices per case")
    p.add_argument("--mutate-basis", action="store_true",
                   help="drop a basis vector to check that verification catches it")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (NonFiniteMatrixError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except UnsupportedCaseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
