"""Command-line front end: ``cauchy-gabor {dual,bounds,zak,hhat,verify}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import numpy as np

from .closed_form import build_multiplier, corollary_bounds, dual_window, h_hat, zak_cauchy
from .closed_form.bounds import toeplitz_symbol_extrema
from .lattice import DiscretizationError, GaborLattice, ParameterError
from .verify import DEFAULT_TOLERANCES, run_verification

EXIT_OK, EXIT_FAILED, EXIT_PARAM, EXIT_IO = 0, 1, 2, 3
DEFAULT_SEED = 42
SUBCOMMANDS = ("dual", "bounds", "zak", "hhat", "verify")


def _fmt(x: float) -> str:
    return "%.17g" % x


def seed_from_env(environ=None) -> int:
    raw = (environ if environ is not None else os.environ).get("GABOR_SEED")
    if raw is None or raw == "":
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise ParameterError(f"GABOR_SEED must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cauchy-gabor", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--alpha", type=float, required=True)
        p.add_argument("--beta", type=float, required=True)
        p.add_argument("--w", type=float, required=True)
        p.add_argument("--out", default="-", help="output path, '-' for stdout")
        tabular = name in ("dual", "zak", "hhat")
        p.add_argument("--format", choices=("csv", "json"), default="csv" if tabular else "json")
        if tabular:
            p.add_argument("--tmin", type=float, default=-10.0)
            p.add_argument("--tmax", type=float, default=10.0)
            p.add_argument("--samples", type=int, default=1024)
        if name == "zak":
            p.add_argument("--omega", type=float, default=0.25)
        if name == "verify":
            p.add_argument("--M", type=int, default=50)
            p.add_argument("--N", type=int, default=50)
            for check, tol in DEFAULT_TOLERANCES.items():
                p.add_argument(f"--tol-{check.replace('_', '-')}", dest=f"tol_{check}", type=float, default=tol)
    return parser


def _validate(args) -> GaborLattice:
    lat = GaborLattice(args.alpha, args.beta, args.w)
    if hasattr(args, "samples"):
        if args.samples < 2:
            raise ParameterError("--samples must be >= 2")
        if not args.tmin < args.tmax:
            raise ParameterError("--tmin must be smaller than --tmax")
    if getattr(args, "M", 1) < 1 or getattr(args, "N", 1) < 1:
        raise ParameterError("--M and --N must be positive")
    return lat


def _table(header, columns, fmt: str, params: dict) -> str:
    if fmt == "json":
        data = {name: [float(v) for v in col] for name, col in zip(header, columns)}
        return json.dumps({"params": params, "checks": [], "results": data}, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in zip(*columns):
        writer.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def _grid(args) -> np.ndarray:
    return np.linspace(args.tmin, args.tmax, args.samples)


def run_dual(args, lat, params):
    t = _grid(args)
    g = dual_window(t, lat)
    params.update(tmin=args.tmin, tmax=args.tmax, samples=args.samples)
    return _table(("t", "gamma_re", "gamma_im"), (t, g.real, g.imag), args.format, params), EXIT_OK


def run_zak(args, lat, params):
    t = _grid(args)
    z = zak_cauchy(t, args.omega, lat)
    params.update(tmin=args.tmin, tmax=args.tmax, samples=args.samples, omega=args.omega)
    return _table(("t", "zak_re", "zak_im"), (t, z.real, z.imag), args.format, params), EXIT_OK


def run_hhat(args, lat, params):
    # --tmin/--tmax are read as the frequency range here
    xi = _grid(args)
    h = h_hat(xi, lat)
    params.update(ximin=args.tmin, ximax=args.tmax, samples=args.samples)
    return _table(("xi", "h_hat"), (xi, h), args.format, params), EXIT_OK


def run_bounds(args, lat, params):
    report = corollary_bounds(lat)
    results = report.as_dict()
    profile = build_multiplier(lat)
    results["multiplier"] = {
        "breakpoints": [float(x) for x in profile.breakpoints],
        "coefficients": [float(c) for c in profile.coefficients],
    }
    lo, hi = toeplitz_symbol_extrema(lat.beta * lat.w)
    results["toeplitz_symbol_extrema"] = {"min": lo, "max": hi}
    if args.format == "csv":
        rows = [("A_lower", report.a_lower), ("B_upper", report.b_upper)]
        rows += [("A_bracket_lower", report.a_bracket[0]), ("A_bracket_upper", report.a_bracket[1])]
        rows += [("B_bracket_lower", report.b_bracket[0]), ("B_bracket_upper", report.b_bracket[1])]
        if report.critical is not None:
            rows += [("A_critical", report.critical[0]), ("B_critical", report.critical[1])]
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("quantity", "value"))
        writer.writerows((k, _fmt(v)) for k, v in rows)
        return buf.getvalue(), EXIT_OK
    return json.dumps({"params": params, "checks": [], "results": results}, indent=2) + "\n", EXIT_OK


def run_verify(args, lat, params):
    tols = {name: getattr(args, f"tol_{name}") for name in DEFAULT_TOLERANCES}
    report = run_verification(lat, M=args.M, N=args.N, seed=params["seed"], tolerances=tols)
    for check in report.checks:
        print(check.line(), file=sys.stderr)
    doc = report.as_dict()
    doc["params"] = {**params, **doc["params"]}
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("check", "error", "tolerance", "passed"))
        for c in report.checks:
            writer.writerow((c.name, _fmt(c.error), _fmt(c.tolerance), str(c.passed).lower()))
        text = buf.getvalue()
    else:
        text = json.dumps(doc, indent=2) + "\n"
    return text, EXIT_OK if report.passed else EXIT_FAILED


RUNNERS = {"dual": run_dual, "bounds": run_bounds, "zak": run_zak, "hhat": run_hhat, "verify": run_verify}


def _write(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        lat = _validate(args)
        params = {"subcommand": args.subcommand, **lat.as_dict(), "seed": seed_from_env()}
        text, status = RUNNERS[args.subcommand](args, lat, params)
    except (ParameterError, DiscretizationError) as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    try:
        _write(text, args.out)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return status


if __name__ == "__main__":
    sys.exit(main())
