"""Command-line interface.

Exit codes: 0 success, 1 I/O failure, 2 invalid input or arguments.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import json
import logging
import os
import sys

import numpy as np

from . import __version__
from .cutoff import DEFAULT_MIN_TAIL, scan_cutoff
from .distributions import DomainError, LomaxParams, PiecewiseParams, PowerLawTail, sample
from .empirical import order_sample
from .estimators import DEFAULT_GAMMA, ESTIMATORS, estimate, min_sample_size
from .montecarlo import ExperimentGrid, fit_gamma, run_grid
from .renyi import draws_to_csv, renyi_factors, renyi_vs_direct

DEFAULT_SEED = 12345

log = logging.getLogger("paretofit")


class UsageError(Exception):
    """Invalid user input; maps to exit code 2."""


def parse_dist(spec: str):
    """Parse ``pareto:xm,beta``, ``piecewise:xm,beta`` or ``lomax:lambda,beta``."""
    try:
        kind, _, params = spec.partition(":")
        a, b = (float(v) for v in params.split(","))
    except ValueError:
        raise UsageError(f"bad distribution spec {spec!r}") from None
    kind = kind.strip().lower()
    try:
        if kind == "pareto":
            return PowerLawTail.pareto(a, b)
        if kind == "piecewise":
            return PiecewiseParams(xm=a, beta=b)
        if kind == "lomax":
            return LomaxParams(lam=a, beta=b)
    except DomainError as exc:
        raise UsageError(f"bad distribution spec {spec!r}: {exc}") from None
    raise UsageError(f"unknown distribution {kind!r}; use pareto, piecewise or lomax")


def read_values(path: str) -> np.ndarray:
    """Newline-delimited decimal values; blank lines and ``#`` comments skipped."""
    with contextlib.ExitStack() as stack:
        fh = sys.stdin if path == "-" else stack.enter_context(open(path))
        values = []
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                values.append(float(line))
            except ValueError:
                raise UsageError(f"{path}:{lineno}: not a number: {line!r}") from None
    return np.asarray(values, dtype=np.float64)


@contextlib.contextmanager
def open_out(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _info_stream(out):
    # keep stdout clean when it carries the data
    return sys.stderr if out in (None, "-") else sys.stdout


def cmd_sample(args):
    dist = parse_dist(args.dist)
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    x = sample(dist, args.n, args.seed)
    with open_out(args.out) as fh:
        if args.format == "json":
            json.dump(x.tolist(), fh)
            fh.write("\n")
        else:
            fh.writelines(f"{v!r}\n" for v in x.tolist())
    print(f"n={x.size} min={float(x.min())!r} max={float(x.max())!r}", file=_info_stream(args.out))


def cmd_fit(args):
    raw = read_values(args.data)
    keep = raw[raw > args.xm]
    dropped = raw.size - keep.size
    if dropped:
        log.info("dropped %d value(s) <= xm=%g", dropped, args.xm)
    need = min_sample_size(args.estimator)
    if keep.size < need:
        raise UsageError(f"{args.estimator} needs at least {need} values above xm, got {keep.size}")
    report = estimate(order_sample(keep, args.xm), args.estimator, args.gamma)
    with open_out(args.out) as fh:
        if args.format == "csv":
            w = csv.writer(fh, lineterminator="\n")
            d = report.to_dict()
            w.writerow(list(d))
            w.writerow(["" if v is None else v for v in d.values()])
        else:
            fh.write(report.to_json() + "\n")


def cmd_cutoff(args):
    raw = read_values(args.data)
    if raw.size < args.min_tail:
        raise UsageError(f"--min-tail {args.min_tail} exceeds the {raw.size} data points")
    res = scan_cutoff(raw, args.min_tail)
    with open_out(args.out) as fh:
        if args.format == "json":
            d = res.summary()
            d["scan"] = [dict(candidate_xm=c, ks=k, beta_hat=b) for c, k, b in res.scan]
            json.dump(d, fh)
            fh.write("\n")
        else:
            res.to_csv(fh)
    if args.format != "json":
        if args.summary:
            with open_out(args.summary) as fh:
                fh.write(res.summary_json() + "\n")
        else:
            print(res.summary_json(), file=_info_stream(args.out))


def cmd_renyi(args):
    if args.n < 2:
        raise UsageError("--n must be >= 2")
    if args.draws < 1:
        raise UsageError("--draws must be >= 1")
    if not args.beta > 0:
        raise UsageError("--beta must be positive")
    factors = renyi_factors(args.n, args.draws, args.seed)
    with open_out(args.out) as fh:
        if args.format == "json":
            json.dump(
                [dict(draw_index=i, factor=f, beta_hat=f * args.beta) for i, f in enumerate(factors.tolist())],
                fh,
            )
            fh.write("\n")
        else:
            draws_to_csv(factors, args.beta, fh)
    if args.check:
        if args.draws < 100:
            log.warning("equivalence check skipped: needs --draws >= 100")
            return
        report = renyi_vs_direct(args.n, args.beta, args.draws, args.seed)
        print(json.dumps(report.to_dict()), file=_info_stream(args.out))


def _load_config(path):
    with contextlib.ExitStack() as stack:
        fh = sys.stdin if path == "-" else stack.enter_context(open(path))
        text = fh.read()
    try:
        return ExperimentGrid.from_json(text)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed grid config: {exc}") from None


def cmd_grid(args):
    grid = _load_config(args.config)
    stats = run_grid(grid, workers=args.workers)
    closer = None
    if grid.closer_probability:
        closer = stats.closer_probability()
        if closer is None:
            log.warning("closer_probability requested but needs both OLS2 and MLE2; omitted")
    os.makedirs(args.out, exist_ok=True)
    if args.format == "json":
        doc = {
            "config": grid.to_dict(),
            "stats": [dict(zip(("n", "estimator", "mean", "variance", "se_mean"), r)) for r in stats.stats_rows()],
        }
        if closer is not None:
            doc["closer_probability"] = [dict(n=n, closer_probability=float(p)) for n, p in zip(grid.n_grid, closer)]
        with open(os.path.join(args.out, "grid.json"), "w") as fh:
            json.dump(doc, fh)
        written = ["grid.json"]
    else:
        with open(os.path.join(args.out, "grid_stats.csv"), "w", newline="") as fh:
            stats.stats_csv(fh)
        written = ["grid_stats.csv"]
        if closer is not None:
            with open(os.path.join(args.out, "closer_probability.csv"), "w", newline="") as fh:
                stats.closer_csv(fh)
            written.append("closer_probability.csv")
    print(json.dumps({"out": args.out, "files": written}))


def _read_mean_curve(path):
    with contextlib.ExitStack() as stack:
        fh = sys.stdin if path == "-" else stack.enter_context(open(path, newline=""))
        reader = csv.DictReader(fh)
        fields = reader.fieldnames or []
        if "n" not in fields or "mean" not in fields:
            raise UsageError(f"{path}: expected columns 'n' and 'mean'")
        rows = [r for r in reader if "estimator" not in fields or r["estimator"] == "OLS1"]
    try:
        return [(float(r["n"]), float(r["mean"])) for r in rows]
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None


def cmd_fit_gamma(args):
    curve = _read_mean_curve(args.data)
    g = fit_gamma(curve, args.beta, (args.lo, args.hi))
    out = {"gamma": g, "beta_true": args.beta, "points": len(curve)}
    with open_out(args.out) as fh:
        if args.format == "csv":
            fh.write("gamma,beta_true,points\n")
            fh.write(f"{g!r},{args.beta!r},{len(curve)}\n")
        else:
            fh.write(json.dumps(out) + "\n")


def build_parser():
    p = argparse.ArgumentParser(prog="paretofit", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-q", "--quiet", action="store_true", help="only log warnings")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt="csv"):
        sp.add_argument("--out", default=None, help="output path (default: stdout)")
        sp.add_argument("--format", choices=("csv", "json"), default=fmt)

    sp = sub.add_parser("sample", help="draw a sample by inverse transform")
    sp.add_argument("dist", help="pareto:xm,beta | piecewise:xm,beta | lomax:lambda,beta")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common(sp)
    sp.set_defaults(func=cmd_sample)

    sp = sub.add_parser("fit", help="estimate the exponent above a known cutoff")
    sp.add_argument("data", help="newline-delimited values, or - for stdin")
    sp.add_argument("--xm", type=float, required=True)
    sp.add_argument("--estimator", type=str.upper, choices=ESTIMATORS, default="MLE2")
    sp.add_argument("--gamma", type=float, default=DEFAULT_GAMMA)
    common(sp, "json")
    sp.set_defaults(func=cmd_fit)

    sp = sub.add_parser("cutoff", help="choose xm by minimum KS distance")
    sp.add_argument("data")
    sp.add_argument("--min-tail", type=int, default=DEFAULT_MIN_TAIL)
    sp.add_argument("--summary", default=None, help="path for the JSON summary (csv format only)")
    common(sp)
    sp.set_defaults(func=cmd_cutoff)

    sp = sub.add_parser("renyi", help="sample the OLS1 law via exponential order statistics")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--draws", type=int, default=5000)
    sp.add_argument("--beta", type=float, default=1.5)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--no-check", dest="check", action="store_false",
                    help="skip the direct-sampling equivalence test")
    common(sp)
    sp.set_defaults(func=cmd_renyi)

    sp = sub.add_parser("grid", help="run a Monte-Carlo experiment grid from a JSON config")
    sp.add_argument("config")
    sp.add_argument("--out", default=".", help="output directory")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_grid)

    sp = sub.add_parser("fit-gamma", help="fit the r_n exponent to an OLS1 mean curve")
    sp.add_argument("data", help="CSV with n,mean columns (grid_stats.csv accepted)")
    sp.add_argument("--beta", type=float, required=True)
    sp.add_argument("--lo", type=float, default=0.5)
    sp.add_argument("--hi", type=float, default=3.0)
    common(sp, "json")
    sp.set_defaults(func=cmd_fit_gamma)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("paretofit: %(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.WARNING if args.quiet else logging.INFO)
    log.propagate = False
    try:
        args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"paretofit: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"paretofit: I/O error: {exc}", file=sys.stderr)
        return 1
    finally:
        log.removeHandler(handler)
    return 0


if __name__ == "__main__":
    sys.exit(main())
