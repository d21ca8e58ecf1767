"""Estimators of the Pareto exponent for a known cutoff.

``MLE1``
    Hill / maximum-likelihood estimator, ``n / sum log(x_i/xm)``.
``MLE2``
    Its unbiased rescaling by ``(n-1)/n``.
``OLS1``
    No-intercept least-squares slope of ``-log`` empirical tail against
    ``log(x_i/xm)``. Biased low by roughly the factor ``r_n``.
``OLS2``
    ``OLS1 / r_n`` with ``r_n = log(e - (log n)**gamma / n)``.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from . import _core
from .distributions import DomainError
from .empirical import Sample

ESTIMATORS = ("MLE1", "MLE2", "OLS1", "OLS2")
DEFAULT_GAMMA = 1.6


@dataclass(frozen=True)
class CorrectionParams:
    gamma: float = DEFAULT_GAMMA

    def __post_init__(self):
        if not (self.gamma > 0 and math.isfinite(self.gamma)):
            raise DomainError(f"gamma must be positive, got {self.gamma!r}")


@dataclass(frozen=True)
class EstimateReport:
    estimator: str
    beta_hat: float
    n: int
    correction: float = 1.0
    gamma: float | None = None

    def to_dict(self):
        return asdict(self)

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)


def _log_sum(s: Sample) -> float:
    total = float(np.sum(s.log_ratios))
    if not total > 0:
        raise DomainError("sum of log(x_i/xm) is zero; exponent undefined")
    return total


def mle_raw(s: Sample) -> EstimateReport:
    return EstimateReport("MLE1", s.n / _log_sum(s), s.n)


def mle_unbiased(s: Sample) -> EstimateReport:
    if s.n < 2:
        raise DomainError("MLE2 requires n >= 2")
    return EstimateReport("MLE2", (s.n - 1) / _log_sum(s), s.n, correction=(s.n - 1) / s.n)


def _ols_slope(s: Sample) -> float:
    if s.n < 2:
        raise DomainError("OLS requires n >= 2")
    lr = s.log_ratios
    if not np.dot(lr, lr) > 0:
        raise DomainError("degenerate design: all log-ratios are zero")
    return float(_core.ols_slope(lr))


def ols_raw(s: Sample) -> EstimateReport:
    return EstimateReport("OLS1", _ols_slope(s), s.n)


def sigmoid_factor(n, params: CorrectionParams = CorrectionParams()):
    """Mean-bias factor ``r_n = log(e - (log n)**gamma / n)`` of OLS1.

    Accepts an integer or an integer array. Raises `DomainError` when
    ``r_n`` would be nonpositive.
    """
    n_arr = np.asarray(n, dtype=np.float64)
    if np.any(n_arr < 2):
        raise DomainError("r_n is defined for n >= 2")
    shift = np.log(n_arr) ** params.gamma / n_arr
    if np.any(shift >= math.e - 1.0):
        raise DomainError(f"r_n is nonpositive for gamma={params.gamma}")
    r = np.log(math.e - shift)
    return r.item() if r.ndim == 0 else r


def ols_corrected(s: Sample, params: CorrectionParams = CorrectionParams()) -> EstimateReport:
    slope = _ols_slope(s)
    r = sigmoid_factor(s.n, params)
    return EstimateReport("OLS2", slope / r, s.n, correction=1.0 / r, gamma=params.gamma)


def estimate(s: Sample, estimator: str, gamma: float = DEFAULT_GAMMA) -> EstimateReport:
    """Dispatch on an estimator id (``MLE1``, ``MLE2``, ``OLS1``, ``OLS2``)."""
    key = estimator.upper()
    if key == "MLE1":
        return mle_raw(s)
    if key == "MLE2":
        return mle_unbiased(s)
    if key == "OLS1":
        return ols_raw(s)
    if key == "OLS2":
        return ols_corrected(s, CorrectionParams(gamma))
    raise ValueError(f"unknown estimator {estimator!r}; expected one of {ESTIMATORS}")


def min_sample_size(estimator: str) -> int:
    return 1 if estimator.upper() == "MLE1" else 2


def mle_sd_interval(beta: float, n: int) -> tuple[float, float]:
    """One-standard-deviation band ``beta -/+ beta/sqrt(n)`` of the MLE."""
    if n < 1:
        raise DomainError("n must be >= 1")
    half = beta / math.sqrt(n)
    return beta - half, beta + half


def batch_estimates(logratio, estimators=ESTIMATORS, gamma=DEFAULT_GAMMA):
    """All requested estimators for each row of ascending log-ratios.

    ``logratio`` is an ``(R, n)`` array of ``log(x_(i)/xm)`` with every row
    sorted ascending. Returns ``{estimator: ndarray of length R}``.
    """
    logratio = np.ascontiguousarray(logratio, dtype=np.float64)
    n = logratio.shape[1]
    wanted = {e.upper() for e in estimators}
    out = {}
    if wanted & {"MLE1", "MLE2"}:
        sums = logratio.sum(axis=1)
        if "MLE1" in wanted:
            out["MLE1"] = n / sums
        if "MLE2" in wanted:
            if n < 2:
                raise DomainError("MLE2 requires n >= 2")
            out["MLE2"] = (n - 1) / sums
    if wanted & {"OLS1", "OLS2"}:
        if n < 2:
            raise DomainError("OLS requires n >= 2")
        slope = _core.ols_slope_rows(logratio)
        if "OLS1" in wanted:
            out["OLS1"] = slope
        if "OLS2" in wanted:
            out["OLS2"] = slope / sigmoid_factor(n, CorrectionParams(gamma))
    return {e: out[e] for e in ESTIMATORS if e in out}
