"""Time the compiled kernels against the numpy fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

import numpy as np

from paretofit import _pure

try:
    from paretofit import _kernels
except ImportError:
    _kernels = None


def cases():
    rng = np.random.default_rng(0)
    lomax = np.sort(20.0 * np.expm1(rng.standard_exponential(10_000) / 1.5))
    lomax = lomax[lomax > 0]
    rows = np.sort(rng.standard_exponential((1000, 500)), axis=1)
    z = rng.standard_exponential((2048, 1000))
    lr = np.sort(rng.standard_exponential(10_000))
    return {
        "cutoff_scan n=1e4": lambda k: k.cutoff_scan(lomax, 10),
        "ks_pareto n=1e4": lambda k: k.ks_pareto(lr, 1.5),
        "ols_slope_rows 1000x500": lambda k: k.ols_slope_rows(rows),
        "renyi_factor_rows 2048x1000": lambda k: k.renyi_factor_rows(z),
    }


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args()
    impls = [("python", _pure)] + ([("cython", _kernels)] if _kernels else [])
    print(f"{'kernel':30s}" + "".join(f"{name:>12s}" for name, _ in impls) + ("     speedup" if _kernels else ""))
    for label, fn in cases().items():
        best = [min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat)) for _, k in impls]
        line = f"{label:30s}" + "".join(f"{t * 1e3:10.2f}ms" for t in best)
        if _kernels:
            line += f"{best[0] / best[1]:11.1f}x"
        print(line)
    if _kernels is None:
        print("compiled extension not built; only the fallback was timed")


if __name__ == "__main__":
    main()
