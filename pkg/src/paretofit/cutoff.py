"""Cutoff selection by minimum Kolmogorov-Smirnov distance.

Every unique data value ``v`` with at least ``min_tail`` points strictly
above it is a candidate cutoff. The points above ``v`` are fitted with the
Hill estimator (MLE1) and compared with the fitted Pareto CDF; the
candidate with the smallest KS distance wins, ties going to the smallest
candidate. No goodness-of-fit p-value is computed.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

import numpy as np

from . import _core
from .distributions import DomainError, PowerLawTail
from .empirical import Sample

DEFAULT_MIN_TAIL = 10


@dataclass(frozen=True, eq=False)
class CutoffScanResult:
    xm_hat: float
    ks_at_min: float
    tail_count: int
    beta_hat: float
    candidates: np.ndarray
    ks: np.ndarray
    betas: np.ndarray
    counts: np.ndarray
    min_tail: int = DEFAULT_MIN_TAIL

    @property
    def scan(self):
        """``(candidate_xm, ks, beta_hat)`` triples in candidate order."""
        return list(zip(self.candidates.tolist(), self.ks.tolist(), self.betas.tolist()))

    def summary(self):
        return {
            "xm_hat": self.xm_hat,
            "ks_at_min": self.ks_at_min,
            "tail_count": self.tail_count,
            "beta_hat": self.beta_hat,
            "fit_estimator": "MLE1",
            "ks_convention": "two-sided gaps at each jump",
            "min_tail": self.min_tail,
        }

    def summary_json(self, **kwargs):
        return json.dumps(self.summary(), **kwargs)

    def to_csv(self, fh=None):
        buf = io.StringIO() if fh is None else fh
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["candidate_xm", "ks", "beta_hat"])
        for c, k, b in zip(self.candidates, self.ks, self.betas):
            w.writerow([repr(float(c)), repr(float(k)), repr(float(b))])
        if fh is None:
            return buf.getvalue()


def ks_distance(s: Sample, model: PowerLawTail) -> float:
    """Sup-distance between the empirical CDF of ``s`` and the Pareto CDF
    ``1 - (xm/x)**beta``, taking both one-sided gaps at every jump."""
    if model.xm != s.xm:
        raise DomainError("model cutoff differs from the sample cutoff")
    return float(_core.ks_pareto(s.log_ratios, model.beta))


def scan_cutoff(raw, min_tail: int = DEFAULT_MIN_TAIL) -> CutoffScanResult:
    raw = np.asarray(raw, dtype=np.float64).reshape(-1)
    if int(min_tail) != min_tail or min_tail < 1:
        raise DomainError(f"min_tail must be a positive integer, got {min_tail!r}")
    min_tail = int(min_tail)
    if raw.size < min_tail:
        raise DomainError(f"need at least min_tail={min_tail} points, got {raw.size}")
    if np.any(~(raw > 0)) or not np.all(np.isfinite(raw)):
        raise DomainError("cutoff scan requires positive finite data")
    x = np.sort(raw)
    cand, ks, betas, counts = _core.cutoff_scan(x, min_tail)
    if cand.size == 0:
        raise DomainError(f"no candidate has {min_tail} points strictly above it")
    best = int(np.argmin(ks))
    return CutoffScanResult(
        xm_hat=float(cand[best]),
        ks_at_min=float(ks[best]),
        tail_count=int(counts[best]),
        beta_hat=float(betas[best]),
        candidates=cand,
        ks=ks,
        betas=betas,
        counts=counts,
        min_tail=min_tail,
    )
