"""Command-line front end.

Verbs:
    analyze   magnitude/phase tables and torus loci for a chord list
    distance  pairwise torus distance matrix
    path      continuous-transposition trajectory of one chord
    unit      spectral unit connecting two homometric chords
    orbit     iterated unit action with genuine/generalized classification

Exit codes: 0 success, 1 usage or parse error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import cmath
import sys
from pathlib import Path
from typing import Optional, Sequence

from .analysis import (
    ChordEntry,
    ParseError,
    parse_sequence,
    report_csv_tables,
    report_json,
    run_analysis,
)
from .catalog import BUILTIN_SETS
from .core import indicator
from .gestures import GesturePath, path_polyline
from .torus import TorusSelection
from .units import NotHomometricError, orbit, unit_between, unit_order

USAGE_ERROR, IO_ERROR = 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        raise SystemExit(self.exit_code_on_error)

    exit_code_on_error = USAGE_ERROR


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--modulus", type=int, default=12)
    p.add_argument("--select", metavar="J,K", help="torus coefficients, e.g. 3,5")
    p.add_argument("--weights", metavar="WJ,WK", help="metric weights, e.g. 1,0.7365")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", metavar="PATH", help="output file (prefix for analyze)")


def _add_chord_sources(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="chord-sequence file")
    for name in BUILTIN_SETS:
        p.add_argument(
            f"--{name}", action="store_true", help=f"include the builtin {name} set"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pctorus")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="tables, loci and optional distance matrix")
    _add_chord_sources(p)
    _add_common(p)
    p.add_argument("--distance-matrix", action="store_true")
    p.add_argument("--degrees", action="store_true", help="angles in degrees (display only)")

    p = sub.add_parser("distance", help="pairwise torus distance matrix")
    _add_chord_sources(p)
    _add_common(p)

    p = sub.add_parser("path", help="continuous transposition trajectory")
    p.add_argument("--pcs", required=True, metavar="P,P,...", help="base chord, e.g. 0,4,7")
    p.add_argument("--label", default="path")
    p.add_argument("--resolution", type=int, default=256)
    _add_common(p)

    p = sub.add_parser("unit", help="spectral unit between two chords")
    p.add_argument("--from-pcs", required=True, dest="from_pcs", metavar="P,P,...")
    p.add_argument("--to-pcs", required=True, dest="to_pcs", metavar="P,P,...")
    p.add_argument("--zero-policy", type=float, default=0.0)
    p.add_argument("--max-order", type=int, default=10000)
    _add_common(p)

    p = sub.add_parser("orbit", help="iterate the unit between two chords")
    p.add_argument("--from-pcs", required=True, dest="from_pcs", metavar="P,P,...")
    p.add_argument("--to-pcs", required=True, dest="to_pcs", metavar="P,P,...")
    p.add_argument("--start-pcs", dest="start_pcs", metavar="P,P,...")
    p.add_argument("--steps", type=int, default=12)
    p.add_argument("--zero-policy", type=float, default=0.0)
    p.add_argument("--tolerance", type=float, default=1e-6)
    _add_common(p)

    return parser


def _parse_pcs(text: str, modulus: int) -> frozenset[int]:
    try:
        return frozenset(int(p) % modulus for p in text.split(","))
    except ValueError:
        raise ParseError(f"bad pitch-class list: {text!r}") from None


def _parse_selection(args) -> Optional[TorusSelection]:
    if args.select is None and args.weights is None:
        return None
    j, k = 3, 5
    if args.select is not None:
        try:
            j, k = (int(x) for x in args.select.split(","))
        except ValueError:
            raise ParseError(f"bad --select value: {args.select!r}") from None
    wj = wk = 1.0
    if args.weights is not None:
        try:
            wj, wk = (float(x) for x in args.weights.split(","))
        except ValueError:
            raise ParseError(f"bad --weights value: {args.weights!r}") from None
    return TorusSelection(j, k, wj, wk)


def _collect_entries(args) -> list[ChordEntry]:
    entries: list[ChordEntry] = []
    for name, factory in BUILTIN_SETS.items():
        if getattr(args, name, False):
            if args.modulus != 12:
                raise ParseError(f"builtin --{name} requires modulus 12")
            for label, dist in factory():
                weights = {
                    k: v.real for k, v in enumerate(dist.values) if abs(v) > 0
                }
                entries.append(ChordEntry(label, weights))
    if args.input:
        text = Path(args.input).read_text()
        entries.extend(parse_sequence(text, args.modulus))
    if not entries:
        raise ParseError("no chords given (supply a file or a builtin set)")
    return entries


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_analyze(args) -> None:
    entries = _collect_entries(args)
    report = run_analysis(
        entries,
        modulus=args.modulus,
        selection=_parse_selection(args),
        include_distances=args.distance_matrix,
    )
    if args.format == "json":
        _emit(report_json(report), args.out)
        return
    tables = report_csv_tables(report, degrees=args.degrees)
    if args.out:
        for name, text in tables.items():
            Path(f"{args.out}_{name}.csv").write_text(text)
    else:
        sys.stdout.write(tables["phases"])
        if "distances" in tables:
            sys.stdout.write("\n" + tables["distances"])


def _cmd_distance(args) -> None:
    entries = _collect_entries(args)
    report = run_analysis(
        entries,
        modulus=args.modulus,
        selection=_parse_selection(args),
        include_distances=True,
    )
    if args.format == "json":
        _emit(report_json(report), args.out)
    else:
        _emit(report_csv_tables(report)["distances"], args.out)


def _cmd_path(args) -> None:
    pcs = _parse_pcs(args.pcs, args.modulus)
    entry = ChordEntry(args.label, {p: 1.0 for p in pcs})
    sel = _parse_selection(args) or TorusSelection(3, 5)
    report = run_analysis(
        [entry],
        modulus=args.modulus,
        selection=sel,
        path_bases=[entry],
        path_resolution=args.resolution,
    )
    if args.format == "json":
        _emit(report_json(report), args.out)
    else:
        _emit(report_csv_tables(report)[f"path_{args.label}"], args.out)


def _unit_for(args):
    a = indicator(_parse_pcs(args.from_pcs, args.modulus), args.modulus)
    b = indicator(_parse_pcs(args.to_pcs, args.modulus), args.modulus)
    return a, b, unit_between(a, b, zero_policy=args.zero_policy)


def _cmd_unit(args) -> None:
    _, _, u = _unit_for(args)
    order = unit_order(u, args.max_order)
    if args.format == "json":
        import json

        doc = {
            "modulus": u.modulus,
            "coefficients": [{"re": z.real, "im": z.imag} for z in u.coeffs],
            "order": order,
            "max_order": args.max_order,
        }
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
        return
    lines = ["t,re,im,phase"]
    for t, z in enumerate(u.coeffs):
        lines.append(f"{t},{z.real:.6f},{z.imag:.6f},{cmath.phase(z):.6f}")
    lines.append(f"# order: {order if order is not None else f'>{args.max_order}'}")
    _emit("\n".join(lines) + "\n", args.out)


def _cmd_orbit(args) -> None:
    a, _, u = _unit_for(args)
    start = a
    if args.start_pcs:
        start = indicator(_parse_pcs(args.start_pcs, args.modulus), args.modulus)
    elements = orbit(u, start, args.steps, tol=args.tolerance)
    if args.format == "json":
        import json

        doc = [
            {
                "step": k,
                "pcs": sorted(ps) if ps is not None else None,
                "values": [v.real for v in d.values],
            }
            for k, (d, ps) in enumerate(elements, start=1)
        ]
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
        return
    c = args.modulus
    lines = ["step,classification," + ",".join(f"v{k}" for k in range(c))]
    for k, (d, ps) in enumerate(elements, start=1):
        kind = "generalized" if ps is None else " ".join(str(p) for p in sorted(ps))
        lines.append(
            f"{k},{kind}," + ",".join(f"{v.real:.6f}" for v in d.values)
        )
    _emit("\n".join(lines) + "\n", args.out)


_COMMANDS = {
    "analyze": _cmd_analyze,
    "distance": _cmd_distance,
    "path": _cmd_path,
    "unit": _cmd_unit,
    "orbit": _cmd_orbit,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _COMMANDS[args.command](args)
    except (ParseError, NotHomometricError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return IO_ERROR
    return 0


if __name__ == "__main__":
    sys.exit(main())
