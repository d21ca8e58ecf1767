"""The OLS1 estimator's sampling law through exponential order statistics.

For Pareto data the log-ratios ``log(x_(i)/xm)`` are ordered exponentials,
``k_(i) = (1/beta) * sum_{j<=i} Z_j / (n - j + 1)`` with ``Z_j ~ Exp(1)``.
Substituting into the OLS slope gives ``beta`` times a random factor that
does not involve ``beta``. Everything here works at ``beta = 1`` and scales
afterwards.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np
from scipy import stats

from . import _core
from .distributions import DomainError, PowerLawTail, sample
from .empirical import order_sample
from .estimators import ols_raw


@dataclass(frozen=True)
class RenyiDraw:
    factor: float
    beta_hat: float
    n: int


@dataclass(frozen=True)
class EquivalenceReport:
    """Two-sample KS comparison of direct and Rényi OLS1 draws."""

    n: int
    beta: float
    draws: int
    ks: float
    pvalue: float
    alpha: float
    accept: bool

    def to_dict(self):
        return dict(self.__dict__)


def _rng(seed):
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def _seq(seed):
    return seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)


def _check_n(n, least):
    if int(n) != n or n < least:
        raise DomainError(f"n must be an integer >= {least}, got {n!r}")
    return int(n)


def order_logs_from_exponentials(z) -> np.ndarray:
    """Partial sums ``sum_{j<=i} z_j / (n - j + 1)`` along the last axis."""
    z = np.asarray(z, dtype=np.float64)
    n = z.shape[-1]
    return np.cumsum(z / np.arange(n, 0, -1, dtype=np.float64), axis=-1)


def renyi_order_logs(n: int, seed) -> np.ndarray:
    """Ordered unit-rate exponential sample of size ``n`` (the ``beta = 1``
    log-ratios of an ordered Pareto sample)."""
    n = _check_n(n, 1)
    return order_logs_from_exponentials(_rng(seed).standard_exponential(n))


def factor_from_exponentials(z) -> np.ndarray | float:
    """OLS factor for one vector (or each row) of unit exponentials."""
    z = np.asarray(z, dtype=np.float64)
    if z.shape[-1] < 2:
        raise DomainError("the OLS factor requires n >= 2")
    out = _core.renyi_factor_rows(np.atleast_2d(z))
    return float(out[0]) if z.ndim == 1 else out


def renyi_ols_factor(n: int, seed, beta: float = 1.0) -> RenyiDraw:
    n = _check_n(n, 2)
    f = float(factor_from_exponentials(_rng(seed).standard_exponential(n)))
    return RenyiDraw(factor=f, beta_hat=f * beta, n=n)


def renyi_factors(n: int, draws: int, seed, batch: int = 2048) -> np.ndarray:
    """``draws`` independent OLS factors.

    Each batch of rows has its own child seed, so the result does not
    depend on how batches are scheduled.
    """
    n = _check_n(n, 2)
    out = np.empty(draws)
    nb = -(-draws // batch) if draws else 0
    children = _seq(seed).spawn(nb)
    for b, child in enumerate(children):
        lo = b * batch
        hi = min(draws, lo + batch)
        z = np.random.default_rng(child).standard_exponential((hi - lo, n))
        out[lo:hi] = _core.renyi_factor_rows(z)
    return out


def direct_ols_draws(n: int, beta: float, draws: int, seed) -> np.ndarray:
    """OLS1 estimates from freshly simulated Pareto samples (xm = 1)."""
    n = _check_n(n, 2)
    dist = PowerLawTail.pareto(1.0, beta)
    out = np.empty(draws)
    for i, child in enumerate(_seq(seed).spawn(draws)):
        out[i] = ols_raw(order_sample(sample(dist, n, child), 1.0)).beta_hat
    return out


def renyi_vs_direct(n: int, beta: float, draws: int, seed, alpha: float = 0.01) -> EquivalenceReport:
    if draws < 100:
        raise DomainError("need at least 100 draws per pipeline")
    s_direct, s_renyi = _seq(seed).spawn(2)
    direct = direct_ols_draws(n, beta, draws, s_direct)
    renyi = renyi_factors(n, draws, s_renyi) * beta
    res = stats.ks_2samp(direct, renyi)
    return EquivalenceReport(
        n=int(n),
        beta=float(beta),
        draws=int(draws),
        ks=float(res.statistic),
        pvalue=float(res.pvalue),
        alpha=alpha,
        accept=bool(res.pvalue >= alpha),
    )


def draws_to_csv(factors, beta: float, fh=None):
    buf = io.StringIO() if fh is None else fh
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["draw_index", "factor", "beta_hat"])
    for i, f in enumerate(factors):
        w.writerow([i, repr(float(f)), repr(float(f) * beta)])
    if fh is None:
        return buf.getvalue()
