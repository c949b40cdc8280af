"""Command-line front end.

    dhydrogen report -n 1 -l 0 -d 3
    dhydrogen sweep --vary d --range 2..20 -n 1 -l 0 --observables expect_r,product
    dhydrogen wavefunction -n 2 -l 0 -d 4 --rmax 30 --points 500
    dhydrogen validate --nmax 6 --range 2..12 --tolerance 1e-10

Exit codes: 0 success, 1 validation failure, 2 invalid arguments, 3 empty result.
All output is in natural units hbar = mu = a0 = 1; only Z is adjustable.
"""

import argparse
import csv
import json
import sys
from contextlib import contextmanager
from dataclasses import dataclass

from . import observables as obs
from .hydrogen import InvalidStateError, PhysicalParams, QuantumState, density, eval_R, radial_grid, wavefunction
from .validate import sweep_validate

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2
EXIT_EMPTY = 3

DEFAULT_PAIRS = ((1, 0), (2, 0), (2, 1), (3, 0))
DEFAULT_RANGES = {"d": (2, 20), "n": (1, 5)}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class OutputSpec:
    format: str = "table"
    destination: str | None = None
    precision: int = 12

    def __post_init__(self):
        if self.format not in ("csv", "json", "table"):
            raise UsageError(f"unknown format {self.format!r}")
        if not 4 <= self.precision <= 17:
            raise UsageError("precision must be in [4, 17]")


# -- formatting helpers ------------------------------------------------------

def format_value(value, precision):
    if value is obs.UNDEFINED:
        return str(obs.UNDEFINED)
    if isinstance(value, bool) or value is None:
        return "" if value is None else str(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.{precision}g}"
    return str(value)


def _round(value, precision):
    if isinstance(value, float):
        return float(f"{value:.{precision}g}")
    if value is obs.UNDEFINED:
        return str(obs.UNDEFINED)
    return value


def units_line(Z):
    return f"# units: hbar=1 mu=1 a0=1 Z={Z:g}"


def write_csv(stream, Z, header, rows, precision):
    stream.write(units_line(Z) + "\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(v, precision) for v in row])


def _parse_cell(text):
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            pass
    return text


def read_csv(stream):
    """Inverse of ``write_csv``: returns (Z, header, rows) with numbers parsed."""
    first = stream.readline().strip()
    if not first.startswith("# units:"):
        raise ValueError("missing units line")
    Z = float(first.rsplit("Z=", 1)[1])
    reader = csv.reader(stream)
    header = next(reader)
    rows = [[_parse_cell(cell) for cell in row] for row in reader]
    return Z, header, rows


def write_table(stream, header, rows, precision):
    cells = [header] + [[format_value(v, precision) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    for r in cells:
        stream.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")


@contextmanager
def _destination(spec):
    if spec.destination in (None, "-"):
        yield sys.stdout
        return
    try:
        handle = open(spec.destination, "w", newline="")
    except OSError as exc:
        raise UsageError(f"cannot open {spec.destination}: {exc.strerror}") from exc
    with handle:
        yield handle


def _emit_rows(spec, Z, header, rows, extra=None):
    with _destination(spec) as out:
        if spec.format == "csv":
            write_csv(out, Z, header, rows, spec.precision)
        elif spec.format == "table":
            out.write(units_line(Z) + "\n")
            write_table(out, header, rows, spec.precision)
        else:
            payload = {
                "units": {"hbar": 1, "mu": 1, "a0": 1, "Z": Z},
                "columns": header,
                "rows": [[_round(v, spec.precision) for v in row] for row in rows],
            }
            if extra:
                payload.update(extra)
            json.dump(payload, out, indent=2)
            out.write("\n")


def parse_range(text):
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"range must look like MIN..MAX, got {text!r}") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def _params(args):
    return PhysicalParams(Z=args.Z)


# -- commands ----------------------------------------------------------------

def cmd_report(args, spec):
    state = QuantumState(args.n, args.l, args.d)
    report = obs.full_report(state, _params(args))
    values = report.values()
    if spec.format == "json":
        with _destination(spec) as out:
            json.dump(
                {
                    "units": {"hbar": 1, "mu": 1, "a0": 1, "Z": args.Z},
                    "state": {"n": state.n, "l": state.l, "d": state.d},
                    "observables": {k: _round(v, spec.precision) for k, v in values.items()},
                },
                out,
                indent=2,
            )
            out.write("\n")
    else:
        _emit_rows(spec, args.Z, ["observable", "value"], list(values.items()))
    return EXIT_OK


def _sweep_states(args):
    """Yield (n, l, d) triples for the sweep, possibly invalid."""
    lo, hi = parse_range(args.range) if args.range else DEFAULT_RANGES.get(args.vary, (None, None))
    if args.vary == "d":
        if args.n is None and args.l is None:
            pairs = DEFAULT_PAIRS
        else:
            pairs = ((1 if args.n is None else args.n, 0 if args.l is None else args.l),)
        for n, l in pairs:
            for d in range(lo, hi + 1):
                yield n, l, d
    elif args.vary == "n":
        for n in range(lo, hi + 1):
            yield n, 0 if args.l is None else args.l, 3 if args.d is None else args.d
    else:
        n = 1 if args.n is None else args.n
        if lo is None:
            lo, hi = 0, n - 1
        for l in range(lo, hi + 1):
            yield n, l, 3 if args.d is None else args.d


def cmd_sweep(args, spec):
    names = [s.strip() for s in args.observables.split(",") if s.strip()]
    unknown = [s for s in names if s not in obs.OBSERVABLES]
    if unknown or not names:
        raise UsageError(f"unknown observable(s) {unknown}; choose from {', '.join(obs.OBSERVABLES)}")
    params = _params(args)
    rows = []
    valid = 0
    for n, l, d in _sweep_states(args):
        try:
            state = QuantumState(n, l, d)
        except InvalidStateError as exc:
            rows.extend([n, l, d, name, None, f"skipped: {exc}"] for name in names)
            continue
        valid += 1
        values = obs.full_report(state, params).values()
        rows.extend([n, l, d, name, values[name], ""] for name in names)
    if valid == 0:
        print("error: no valid state in sweep range", file=sys.stderr)
        return EXIT_EMPTY
    _emit_rows(spec, args.Z, ["n", "l", "d", "observable", "value", "note"], rows)
    return EXIT_OK


def cmd_wavefunction(args, spec):
    state = QuantumState(args.n, args.l, args.d)
    if args.rmax is not None and not args.rmax > 0:
        raise UsageError("--rmax must be positive")
    if args.points < 2:
        raise UsageError("--points must be >= 2")
    wf = wavefunction(state, _params(args))
    r = radial_grid(wf, args.rmax, args.points, include_origin=True)
    R = eval_R(wf, r)
    P = density(wf, r)
    rows = [[float(a), float(b), float(c)] for a, b, c in zip(r, R, P)]
    _emit_rows(spec, args.Z, ["r", "R", "P"], rows)
    return EXIT_OK


def cmd_validate(args, spec):
    d_min, d_max = parse_range(args.range) if args.range else (2, 12)
    if args.nmax < 1 or d_min < 2:
        raise UsageError("need --nmax >= 1 and d >= 2")
    if not args.tolerance > 0:
        raise UsageError("--tolerance must be positive")
    summary = sweep_validate(args.nmax, d_min, d_max, _params(args), args.tolerance)
    if spec.format == "json":
        with _destination(spec) as out:
            json.dump(summary.to_dict(), out, indent=2)
            out.write("\n")
    else:
        header = ["n", "l", "d", "kind", "closed_form", "oracle", "alt_route", "rel_error", "verdict"]
        rows = [[r.state.n, r.state.l, r.state.d, r.kind, r.closed_form, r.oracle, r.alt_route, r.rel_error, r.verdict]
                for r in summary.records]
        _emit_rows(spec, args.Z, header, rows)
    worst = summary.worst.rel_error if summary.worst else 0.0
    print(
        f"validate: {summary.passed} passed, {summary.failed} failed, {summary.skipped} skipped; "
        f"worst rel_error {worst:.3g}",
        file=sys.stderr,
    )
    return EXIT_OK if summary.ok else EXIT_VALIDATION


# -- argument parsing ---------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-Z", type=float, default=1.0, help="nuclear charge (default 1)")
    common.add_argument("--format", choices=("csv", "json", "table"), default=None)
    common.add_argument("--out", default=None, metavar="PATH", help="output file (default stdout)")
    common.add_argument("--precision", type=int, default=12, help="significant digits, 4..17")

    parser = argparse.ArgumentParser(prog="dhydrogen", description="Radial observables of the d-dimensional hydrogen atom.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", parents=[common], help="closed-form observables for one state")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-l", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.set_defaults(func=cmd_report, default_format="table")

    p = sub.add_parser("sweep", parents=[common], help="observables over a range of d, n or l")
    p.add_argument("--vary", choices=("d", "n", "l"), default="d")
    p.add_argument("--range", default=None, metavar="MIN..MAX")
    p.add_argument("-n", type=int, default=None)
    p.add_argument("-l", type=int, default=None)
    p.add_argument("-d", type=int, default=None)
    p.add_argument("--observables", default="expect_r", help="comma-separated observable names")
    p.set_defaults(func=cmd_sweep, default_format="csv")

    p = sub.add_parser("wavefunction", parents=[common], help="tabulate r, R(r), P(r)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-l", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--rmax", type=float, default=None, help="grid end (default 10 <r>)")
    p.add_argument("--points", type=int, default=2000)
    p.set_defaults(func=cmd_wavefunction, default_format="csv")

    p = sub.add_parser("validate", parents=[common], help="closed forms vs quadrature over a state grid")
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--range", default=None, metavar="MIN..MAX", help="dimension range (default 2..12)")
    p.add_argument("--tolerance", type=float, default=1e-10)
    p.set_defaults(func=cmd_validate, default_format="table")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if not args.Z > 0:
            raise UsageError("Z must be positive")
        spec = OutputSpec(args.format or args.default_format, args.out, args.precision)
        return args.func(args, spec)
    except (UsageError, InvalidStateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
