"""Command line front end: ``sinc-expdecay <run|domain|verify|plotscript>``.

Exit codes: 0 success, 1 runtime or check failure, 2 usage error.
"""

import argparse
import os
import sys
from pathlib import Path

from . import _io, lemmas
from .errors import AdmissibilityError, BuildError
from .maps import MapKind, domain_boundary
from .testbed import EXAMPLE_IDS, convergence_sweep, example, write_reports

MAP_CHOICES = ("psi", "phi")


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text!r} must be >= 1")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sinc-expdecay",
        description="Sinc approximation on (0, inf) with the arcsinh (psi) "
                    "and logistic-log (phi) maps.")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="convergence sweep written as CSV")
    run.add_argument("--example", required=True, choices=EXAMPLE_IDS)
    run.add_argument("--map", default="both", choices=MAP_CHOICES + ("both",))
    run.add_argument("--n-min", type=_positive_int, default=2)
    run.add_argument("--n-max", type=_positive_int, default=100)
    run.add_argument("--n-step", type=_positive_int, default=2)
    run.add_argument("--out", required=True,
                     help="output prefix; writes PREFIX_psi.csv / PREFIX_phi.csv, '-' for stdout")

    dom = sub.add_parser("domain", help="trace the image of the strip boundary")
    dom.add_argument("--map", required=True, choices=MAP_CHOICES)
    dom.add_argument("--d", type=float, default=1.0)
    dom.add_argument("--samples", type=_positive_int, default=400)
    dom.add_argument("--x-min", type=float, default=-10.0)
    dom.add_argument("--x-max", type=float, default=10.0)
    dom.add_argument("--out", default="-")

    ver = sub.add_parser("verify", help="sample the inequality lemmas and decay conditions")
    ver.add_argument("--samples", type=_positive_int, default=100_000)
    ver.add_argument("--seed", type=int, default=42)
    ver.add_argument("--out", default="-")

    plot = sub.add_parser("plotscript", help="emit a gnuplot script for a finished sweep")
    plot.add_argument("--example", required=True, choices=EXAMPLE_IDS)
    plot.add_argument("--prefix", required=True, help="prefix given to 'run --out'")
    plot.add_argument("--out", default=None, help="script path (default PREFIX.gp, '-' for stdout)")
    return parser


def _maps(selector):
    return list(MAP_CHOICES) if selector == "both" else [selector]


def cmd_run(args, parser):
    if args.n_min > args.n_max:
        parser.error("--n-min must not exceed --n-max")
    ex = example(args.example)
    n_list = list(range(args.n_min, args.n_max + 1, args.n_step))
    to_stdout = args.out == "-"
    summary = sys.stderr if to_stdout else sys.stdout
    for name in _maps(args.map):
        try:
            reports = convergence_sweep(ex, name, n_list)
        except BuildError as exc:
            print(f"error: {args.example}/{name} failed at n={exc.n}: {exc}", file=sys.stderr)
            return 1
        target = "-" if to_stdout else f"{args.out}_{name}.csv"
        write_reports(target, reports)
        last = reports[-1]
        print(f"{args.example} {name}: n={last.n} observed={_io.fmt(last.observed_error)} "
              f"bound={_io.fmt(last.bound)}", file=summary)
    return 0


def cmd_domain(args, parser):
    try:
        curve = domain_boundary(MapKind.from_name(args.map), args.d,
                                args.x_min, args.x_max, max(args.samples, 2))
    except AdmissibilityError as exc:
        parser.error(str(exc))
    curve.to_csv(args.out)
    return 0


def cmd_verify(args, parser):
    reports = lemmas.run_all(args.samples, args.seed)
    _io.write_rows(args.out, lemmas.REPORT_HEADER, (r.csv_row() for r in reports))
    return 0 if all(r.passed for r in reports) else 1


_STYLE = {"psi": "lc rgb '#1f77b4'", "phi": "lc rgb '#d62728'"}


def plot_script(example_id, csv_paths):
    """Gnuplot source plotting observed errors (solid) and bounds (dotted)."""
    lines = [
        f"# convergence of example {example_id}: observed error and bound vs n",
        'set datafile separator ","',
        "set logscale y",
        'set format y "10^{%L}"',
        'set xlabel "n"',
        'set ylabel "maximum absolute error"',
        "set key top right",
    ]
    series = []
    for name, path in csv_paths.items():
        series.append(f'"{path}" skip 1 using 1:5 with lines dt 1 {_STYLE[name]} '
                      f'title "observed ({name})"')
        series.append(f'"{path}" skip 1 using 1:6 with lines dt 3 {_STYLE[name]} '
                      f'title "bound ({name})"')
    lines.append("plot " + ", \\\n     ".join(series))
    return "\n".join(lines) + "\n"


def cmd_plotscript(args, parser):
    csvs = {name: Path(f"{args.prefix}_{name}.csv") for name in MAP_CHOICES}
    for path in csvs.values():
        if not path.is_file():
            print(f"error: missing sweep file {path}", file=sys.stderr)
            return 1
    out = args.out if args.out is not None else f"{args.prefix}.gp"
    base = Path.cwd() if out == "-" else Path(out).resolve().parent
    rel = {name: Path(os.path.relpath(p.resolve(), base)).as_posix() for name, p in csvs.items()}
    with _io.open_output(out) as fh:
        fh.write(plot_script(args.example, rel))
    return 0


COMMANDS = {"run": cmd_run, "domain": cmd_domain, "verify": cmd_verify,
            "plotscript": cmd_plotscript}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    return COMMANDS[args.command](args, parser)


if __name__ == "__main__":
    sys.exit(main())
