"""Replicated estimator experiments on Pareto data with ``xm = 1``.

Each ``(n, replication)`` cell draws its sample from a generator seeded by
``(seed, n, replication)``. Any single cell can be reproduced in isolation
and results do not depend on how cells are scheduled. All requested
estimators are evaluated on the same sample within a cell.
"""
from __future__ import annotations

import csv
import io
import json
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy import optimize

from .distributions import DomainError, PowerLawTail, pareto_inverse_tail, uniforms
from .estimators import DEFAULT_GAMMA, ESTIMATORS, batch_estimates, mle_sd_interval

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExperimentGrid:
    beta_true: float
    n_grid: tuple
    replications: int
    seed: int = 0
    estimators: tuple = ESTIMATORS
    gamma: float = DEFAULT_GAMMA
    closer_probability: bool = True

    def __post_init__(self):
        object.__setattr__(self, "n_grid", tuple(int(n) for n in self.n_grid))
        object.__setattr__(self, "estimators", tuple(e.upper() for e in self.estimators))
        if not (self.beta_true > 0):
            raise DomainError("beta_true must be positive")
        if not self.n_grid:
            raise DomainError("n_grid is empty")
        if any(b <= a for a, b in zip(self.n_grid, self.n_grid[1:])):
            raise DomainError("n_grid must be strictly ascending")
        if self.n_grid[0] < 2:
            raise DomainError("n_grid values must be >= 2")
        if int(self.replications) != self.replications or self.replications < 2:
            raise DomainError("replications must be an integer >= 2")
        if int(self.seed) != self.seed or not 0 <= self.seed < 2**64:
            raise DomainError("seed must be an unsigned 64-bit integer")
        if not self.estimators:
            raise DomainError("no estimators requested")
        unknown = set(self.estimators) - set(ESTIMATORS)
        if unknown:
            raise DomainError(f"unknown estimators {sorted(unknown)}")
        if not (self.gamma > 0):
            raise DomainError("gamma must be positive")

    @classmethod
    def from_dict(cls, d):
        """Build from a config mapping.

        ``n_grid`` may be a list or ``{"start": a, "stop": b, "step": c}``
        (``stop`` inclusive).
        """
        d = dict(d)
        known = {f for f in cls.__dataclass_fields__}
        extra = set(d) - known
        if extra:
            raise DomainError(f"unknown config fields {sorted(extra)}")
        grid = d.get("n_grid")
        if isinstance(grid, dict):
            d["n_grid"] = range(int(grid["start"]), int(grid["stop"]) + 1, int(grid.get("step", 1)))
        try:
            return cls(**d)
        except TypeError as exc:
            raise DomainError(str(exc)) from exc

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def to_dict(self):
        return {
            "beta_true": self.beta_true,
            "n_grid": list(self.n_grid),
            "replications": self.replications,
            "seed": self.seed,
            "estimators": list(self.estimators),
            "gamma": self.gamma,
            "closer_probability": self.closer_probability,
        }


@dataclass(eq=False)
class GridStats:
    """Per-cell estimates and their summaries.

    ``estimates[e]`` has shape ``(len(n_grid), replications)``.
    """

    grid: ExperimentGrid
    estimates: dict = field(default_factory=dict)

    @property
    def n_grid(self):
        return np.asarray(self.grid.n_grid)

    def mean(self, estimator):
        return self.estimates[estimator].mean(axis=1)

    def variance(self, estimator):
        return self.estimates[estimator].var(axis=1, ddof=1)

    def se_mean(self, estimator):
        return np.sqrt(self.variance(estimator) / self.grid.replications)

    def closer_probability(self):
        """Fraction of replications where OLS2 is strictly closer to the true
        exponent than MLE2, per n. ``None`` when either is missing."""
        if "OLS2" not in self.estimates or "MLE2" not in self.estimates:
            return None
        b = self.grid.beta_true
        ols = np.abs(self.estimates["OLS2"] - b)
        mle = np.abs(self.estimates["MLE2"] - b)
        return (ols < mle).mean(axis=1)

    def interval_coverage(self, estimator="MLE2"):
        """Fraction of estimates inside ``beta -/+ beta/sqrt(n)`` per n."""
        est = self.estimates[estimator]
        out = np.empty(len(self.grid.n_grid))
        for i, n in enumerate(self.grid.n_grid):
            lo, hi = mle_sd_interval(self.grid.beta_true, n)
            out[i] = np.mean((est[i] > lo) & (est[i] < hi))
        return out

    def stats_rows(self):
        rows = []
        for e in self.estimates:
            mean, var, se = self.mean(e), self.variance(e), self.se_mean(e)
            for i, n in enumerate(self.grid.n_grid):
                rows.append((n, e, float(mean[i]), float(var[i]), float(se[i])))
        rows.sort(key=lambda r: (r[0], ESTIMATORS.index(r[1])))
        return rows

    def stats_csv(self, fh=None):
        buf = io.StringIO() if fh is None else fh
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "estimator", "mean", "variance", "se_mean"])
        for n, e, m, v, s in self.stats_rows():
            w.writerow([n, e, repr(m), repr(v), repr(s)])
        if fh is None:
            return buf.getvalue()

    def closer_csv(self, fh=None):
        p = self.closer_probability()
        if p is None:
            raise DomainError("closer probability needs both OLS2 and MLE2")
        buf = io.StringIO() if fh is None else fh
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "closer_probability"])
        for n, v in zip(self.grid.n_grid, p):
            w.writerow([n, repr(float(v))])
        if fh is None:
            return buf.getvalue()


def cell_rng(seed, n, replication):
    """Generator for one ``(n, replication)`` cell."""
    return np.random.default_rng([int(seed), int(n), int(replication)])


def cell_sample(grid: ExperimentGrid, n, replication):
    """The sorted Pareto(xm=1, beta_true) sample used in one cell."""
    dist = PowerLawTail.pareto(1.0, grid.beta_true)
    u = uniforms(cell_rng(grid.seed, n, replication), n)
    return np.sort(pareto_inverse_tail(dist, u))


def _run_n(grid: ExperimentGrid, n):
    x = np.empty((grid.replications, n))
    for r in range(grid.replications):
        x[r] = cell_sample(grid, n, r)
    return batch_estimates(np.log(x), grid.estimators, grid.gamma)


def run_grid(grid: ExperimentGrid, workers: int = 1) -> GridStats:
    """Run every cell of ``grid``; ``workers > 1`` uses a thread pool."""
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_n = list(pool.map(lambda n: _run_n(grid, n), grid.n_grid))
    else:
        per_n = [_run_n(grid, n) for n in grid.n_grid]
    estimates = {e: np.vstack([row[e] for row in per_n]) for e in per_n[0]}
    return GridStats(grid=grid, estimates=estimates)


def _rn(n, gamma):
    return np.log(math.e - np.log(n) ** gamma / n)


def _gamma_feasible(n, gamma):
    return bool(np.all(np.log(n) ** gamma / n < math.e - 1.0))


def fit_gamma(mean_curve, beta_true, gamma_bounds=(0.5, 3.0), xtol=1e-6):
    """Least-squares fit of the exponent in ``r_n = log(e - (log n)**g / n)``.

    Parameters
    ----------
    mean_curve : sequence of (n, mean OLS1 estimate)
    beta_true : float
    gamma_bounds : (lo, hi)
        Search bracket. ``r_n`` must be defined at both ends for every n.

    Returns
    -------
    float
        The minimiser of ``sum_n (mean(n)/beta_true - r_n(g))**2``.
    """
    curve = np.asarray(mean_curve, dtype=np.float64)
    if curve.ndim != 2 or curve.shape[1] != 2 or curve.shape[0] < 3:
        raise DomainError("mean_curve needs at least 3 (n, mean) pairs")
    lo, hi = gamma_bounds
    if not 0 < lo < hi:
        raise DomainError("gamma bounds must satisfy 0 < lo < hi")
    n, ratio = curve[:, 0], curve[:, 1] / beta_true
    if np.any(n < 2):
        raise DomainError("r_n is defined for n >= 2")
    # (log n)**g is monotone in g, so the bracket ends bound it
    if not (_gamma_feasible(n, lo) and _gamma_feasible(n, hi)):
        raise DomainError("r_n is undefined somewhere on the gamma bracket")
    res = optimize.minimize_scalar(
        lambda g: float(np.sum((ratio - _rn(n, g)) ** 2)),
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": xtol},
    )
    return float(res.x)


def variance_slope(var_curve):
    """Slope of ``log(variance)`` against ``log(n)``."""
    curve = np.asarray(var_curve, dtype=np.float64)
    if curve.ndim != 2 or curve.shape[1] != 2 or curve.shape[0] < 3:
        raise DomainError("var_curve needs at least 3 (n, variance) pairs")
    if np.any(~(curve[:, 1] > 0)):
        raise DomainError("variances must be positive")
    slope, _ = np.polyfit(np.log(curve[:, 0]), np.log(curve[:, 1]), 1)
    return float(slope)
