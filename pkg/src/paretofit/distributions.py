"""Tail functions and inverse-transform samplers.

Three families are supported:

* Pareto / power-law tail ``P(X > x) = alpha / x**beta`` for ``x >= xm``.
* A piecewise law, exponential up to ``xm`` and power law beyond it.
* Lomax (Pareto type II), ``P(X > x) = (1 + x/lam)**(-beta)``.

Every tail function accepts scalars or arrays. Samplers draw uniforms on
``(0, 1]`` so the inverse tails never diverge.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class DomainError(ValueError):
    """Argument outside the domain of a tail function or estimator."""


def _positive(name, value):
    if not (value > 0 and math.isfinite(value)):
        raise DomainError(f"{name} must be positive and finite, got {value!r}")


def _check_unit(u):
    u = np.asarray(u, dtype=np.float64)
    if np.any(~(u > 0)) or np.any(u > 1):
        raise DomainError("u must lie in (0, 1]")
    return u


def _out(a):
    return a.item() if a.ndim == 0 else a


@dataclass(frozen=True)
class PowerLawTail:
    """Power-law tail ``alpha / x**beta`` valid beyond the cutoff ``xm``."""

    alpha: float
    beta: float
    xm: float

    def __post_init__(self):
        _positive("alpha", self.alpha)
        _positive("beta", self.beta)
        _positive("xm", self.xm)
        if self.tail_probability_at_xm > 1 + 1e-12:
            raise DomainError("alpha / xm**beta must not exceed 1")

    @classmethod
    def pareto(cls, xm, beta):
        """Full Pareto law: tail equal to 1 at the cutoff."""
        return cls(alpha=float(xm) ** beta, beta=beta, xm=xm)

    @classmethod
    def from_tail_probability(cls, xm, beta, p_xm):
        """Tail conditioned on ``P(X > xm) = p_xm``."""
        return cls(alpha=p_xm * float(xm) ** beta, beta=beta, xm=xm)

    @property
    def tail_probability_at_xm(self):
        return self.alpha / self.xm**self.beta

    @property
    def is_pareto(self):
        return math.isclose(self.tail_probability_at_xm, 1.0, rel_tol=1e-12)


@dataclass(frozen=True)
class PiecewiseParams:
    xm: float
    beta: float

    def __post_init__(self):
        _positive("xm", self.xm)
        _positive("beta", self.beta)


@dataclass(frozen=True)
class LomaxParams:
    lam: float
    beta: float

    def __post_init__(self):
        _positive("lam", self.lam)
        _positive("beta", self.beta)


def pareto_tail(p: PowerLawTail, x):
    x = np.asarray(x, dtype=np.float64)
    if np.any(~(x >= p.xm)):
        raise DomainError(f"x must be >= xm={p.xm}")
    return _out(p.alpha / x**p.beta)


def pareto_inverse_tail(p: PowerLawTail, u):
    """Quantile of the survival function, ``xm * u**(-1/beta)``."""
    if not p.is_pareto:
        raise DomainError("inverse tail requires a full Pareto law (alpha = xm**beta)")
    u = _check_unit(u)
    return _out(p.xm * u ** (-1.0 / p.beta))


def piecewise_tail(p: PiecewiseParams, x):
    # x = 0 is admitted (tail 1): it is the image of u = 1 under the inverse
    x = np.asarray(x, dtype=np.float64)
    if np.any(~(x >= 0)):
        raise DomainError("x must be nonnegative")
    # both branches are evaluated; silence the one np.where discards
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        out = np.where(
            x <= p.xm,
            np.exp(-p.beta * x / p.xm),
            np.exp(-p.beta) * (p.xm / x) ** p.beta,
        )
    return _out(out)


def piecewise_inverse_tail(p: PiecewiseParams, u):
    u = _check_unit(u)
    edge = math.exp(-p.beta)
    with np.errstate(divide="ignore"):
        out = np.where(
            u >= edge,
            -(p.xm / p.beta) * np.log(u),
            p.xm * (edge / u) ** (1.0 / p.beta),
        )
    return _out(out)


def lomax_tail(p: LomaxParams, x):
    x = np.asarray(x, dtype=np.float64)
    if np.any(~(x >= 0)):
        raise DomainError("x must be nonnegative")
    return _out((1.0 + x / p.lam) ** (-p.beta))


def lomax_inverse_tail(p: LomaxParams, u):
    u = _check_unit(u)
    return _out(p.lam * np.expm1(-np.log(u) / p.beta))


def tail_function(dist):
    """The tail function matching a parameter object."""
    if isinstance(dist, PowerLawTail):
        return lambda x: pareto_tail(dist, x)
    if isinstance(dist, PiecewiseParams):
        return lambda x: piecewise_tail(dist, x)
    if isinstance(dist, LomaxParams):
        return lambda x: lomax_tail(dist, x)
    raise TypeError(f"unsupported distribution {dist!r}")


def inverse_tail_function(dist):
    if isinstance(dist, PowerLawTail):
        return lambda u: pareto_inverse_tail(dist, u)
    if isinstance(dist, PiecewiseParams):
        return lambda u: piecewise_inverse_tail(dist, u)
    if isinstance(dist, LomaxParams):
        return lambda u: lomax_inverse_tail(dist, u)
    raise TypeError(f"unsupported distribution {dist!r}")


def uniforms(rng: np.random.Generator, size):
    """Uniform draws on (0, 1]."""
    return 1.0 - rng.random(size)


def sample(dist, n: int, seed) -> np.ndarray:
    """Draw ``n`` i.i.d. values by inverse transform.

    Parameters
    ----------
    dist : PowerLawTail, PiecewiseParams or LomaxParams
        A ``PowerLawTail`` must be a full Pareto law.
    n : int
        Number of draws, at least 1.
    seed : int, numpy.random.SeedSequence or numpy.random.Generator
        The same ``(dist, n, seed)`` always yields the same vector.

    Returns
    -------
    numpy.ndarray
        Draws in generation order (unsorted).
    """
    if int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    inverse = inverse_tail_function(dist)
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    return np.asarray(inverse(uniforms(rng, int(n))), dtype=np.float64).reshape(-1)
