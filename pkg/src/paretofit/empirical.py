"""Ordered samples, the empirical tail and its binomial error model.

The empirical tail uses the ``>=`` convention, ``P_n(X >= x)``, so at the
i-th smallest sample point it equals ``(n - i + 1) / n``. Its minimum over
the sample is therefore ``1/n`` and its logarithm is always finite.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .distributions import DomainError, PowerLawTail


@dataclass(frozen=True, eq=False)
class Sample:
    """Ascending tail data together with the cutoff it was drawn above."""

    values: np.ndarray
    xm: float

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def log_ratios(self) -> np.ndarray:
        """``log(x_(i) / xm)``, ascending and strictly positive."""
        return np.log(self.values / self.xm)


@dataclass(frozen=True, eq=False)
class TailCurve:
    x: np.ndarray
    tail: np.ndarray

    @property
    def n(self) -> int:
        return self.x.shape[0]

    def to_csv(self, fh=None):
        """Write ``x,tail`` rows to ``fh``; return the text when ``fh`` is None."""
        buf = io.StringIO() if fh is None else fh
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["x", "tail"])
        for x, t in zip(self.x, self.tail):
            w.writerow([repr(float(x)), repr(float(t))])
        if fh is None:
            return buf.getvalue()


@dataclass(frozen=True, eq=False)
class TailErrorDiagnostics:
    """Per-point residuals of the empirical tail against a model tail.

    Attributes
    ----------
    residual : ndarray
        Empirical tail minus model tail.
    log_residual : ndarray
        ``log(1 + residual / model_tail)``, i.e. the error term of the
        log-log regression.
    model_variance : ndarray
        Binomial variance ``p (1 - p) / n`` of the empirical tail.
    """

    residual: np.ndarray
    log_residual: np.ndarray
    model_variance: np.ndarray


def order_sample(raw, xm: float) -> Sample:
    raw = np.asarray(raw, dtype=np.float64).reshape(-1)
    if raw.size == 0:
        raise DomainError("sample is empty")
    if not (xm > 0):
        raise DomainError(f"xm must be positive, got {xm!r}")
    if np.any(~(raw > xm)):
        bad = int(np.count_nonzero(~(raw > xm)))
        raise DomainError(f"{bad} value(s) not strictly above the cutoff xm={xm}")
    values = np.sort(raw, kind="stable")
    values.setflags(write=False)
    return Sample(values=values, xm=float(xm))


def tail_values(n: int) -> np.ndarray:
    """``(n - i + 1) / n`` for ``i = 1..n``."""
    return np.arange(n, 0, -1, dtype=np.float64) / n


def empirical_tail(s: Sample) -> TailCurve:
    return TailCurve(x=s.values, tail=tail_values(s.n))


def log_residuals(s: Sample, model: PowerLawTail) -> TailErrorDiagnostics:
    if model.xm != s.xm:
        raise DomainError("model cutoff differs from the sample cutoff")
    p = model.alpha / s.values**model.beta
    eps = tail_values(s.n) - p
    return TailErrorDiagnostics(
        residual=eps,
        log_residual=np.log1p(eps / p),
        model_variance=p * (1.0 - p) / s.n,
    )
