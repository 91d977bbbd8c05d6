"""Command-line interface: spectra, wavefunction tables, verification, limits.

Subcommands:
    spectrum      energy levels of either model
    wavefunction  tabulated eigenfunction values on a grid
    verify        full check suite; exit code 0 iff all hard checks pass
    limit         non-relativistic limit table

Formats: text (aligned columns), csv (RFC-4180), json (canonical key
order, no whitespace).  All output goes to stdout.
"""

from __future__ import annotations

import argparse
import sys

from . import harness, rel
from .errors import CouplingError
from .opcore import SampleGrid, default_grid


def _add_format(parser):
    parser.add_argument("--format", choices=("text", "csv", "json"),
                        default="text")


def _add_model(parser):
    parser.add_argument("--model", choices=("nonrel", "rel"), required=True)
    parser.add_argument("--omega0", type=float, default=0.5)
    parser.add_argument("--g0", type=float, default=0.1)


def _model_params(args) -> dict:
    if args.model == "nonrel":
        return {"g0": args.g0}
    return {"omega0": args.omega0, "g0": args.g0}


def _emit_rows(rows, fmt: str):
    if fmt == "csv":
        sys.stdout.write(harness.rows_to_csv(rows))
    elif fmt == "json":
        sys.stdout.write(harness.rows_to_json(rows) + "\n")
    else:
        sys.stdout.write(harness.rows_to_text(rows))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fdosc",
        description="Finite-difference relativistic linear singular "
                    "oscillator toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="tabulate energy levels")
    _add_model(p)
    p.add_argument("--nmax", type=int, default=8)
    _add_format(p)

    p = sub.add_parser("wavefunction", help="tabulate an eigenfunction")
    _add_model(p)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--grid-min", type=float, default=0.25)
    p.add_argument("--grid-max", type=float, default=8.0)
    p.add_argument("--grid-points", type=int, default=32)
    _add_format(p)

    p = sub.add_parser("verify", help="run the full verification suite")
    p.add_argument("--omega0", type=float, default=0.5)
    p.add_argument("--g0", type=float, default=0.1)
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--tol", type=float, default=None,
                   help="override every hard tolerance with one value")
    _add_format(p)

    p = sub.add_parser("limit", help="non-relativistic limit table")
    p.add_argument("--g0", type=float, default=0.1)
    p.add_argument("--omega0-list", type=str, default="1e-2,5e-3",
                   help="comma-separated omega0 sequence")
    _add_format(p)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except CouplingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    if args.command == "spectrum":
        rows = harness.spectrum_table(args.model, _model_params(args), args.nmax)
        _emit_rows(rows, args.format)
        return 0

    if args.command == "wavefunction":
        if args.grid_points < 2 or args.grid_min <= 0 or args.grid_max <= args.grid_min:
            print("error: grid must satisfy 0 < min < max, points >= 2",
                  file=sys.stderr)
            return 2
        grid = default_grid(args.grid_points, args.grid_min, args.grid_max)
        rows = harness.wavefunction_table(args.model, _model_params(args),
                                          args.n, grid)
        _emit_rows(rows, args.format)
        return 0

    if args.command == "verify":
        report = harness.run_suite(args.omega0, args.g0, n_max=args.nmax,
                                   tol_overrides=args.tol)
        if args.format == "json":
            sys.stdout.write(report.to_json() + "\n")
        elif args.format == "csv":
            sys.stdout.write(report.to_csv())
        else:
            sys.stdout.write(report.to_text())
        return 0 if report.all_hard_passed else 1

    if args.command == "limit":
        try:
            seq = [float(s) for s in args.omega0_list.split(",") if s.strip()]
        except ValueError:
            print("error: --omega0-list must be comma-separated numbers",
                  file=sys.stderr)
            return 2
        if not seq:
            print("error: --omega0-list is empty", file=sys.stderr)
            return 2
        devs = rel.nonrel_limit(args.g0, seq)
        rows = [{"omega0": w0, "deviation": dev, "deviation_over_omega0": dev / w0}
                for w0, dev in zip(seq, devs)]
        _emit_rows(rows, args.format)
        return 0

    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    raise SystemExit(main())
