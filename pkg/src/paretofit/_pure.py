"""Numpy implementations of the numerical kernels.

Used when the compiled ``_kernels`` extension is unavailable, and as the
reference the compiled versions are tested against. Every function here has
a same-named, same-signature twin in ``_kernels.pyx``.
"""
import numpy as np


def _log_tail(n):
    # log(n / (n - i + 1)) for i = 1..n, written as a difference of logs
    return np.log(n) - np.log(np.arange(n, 0, -1, dtype=np.float64))


def ols_slope(logratio):
    """No-intercept OLS slope of -log(empirical tail) on ascending log(x/xm)."""
    logratio = np.ascontiguousarray(logratio, dtype=np.float64)
    n = logratio.shape[0]
    num = np.dot(logratio, _log_tail(n))
    den = np.dot(logratio, logratio)
    return num / den


def ols_slope_rows(logratio):
    """Row-wise :func:`ols_slope` for a 2-D array of ascending rows."""
    logratio = np.ascontiguousarray(logratio, dtype=np.float64)
    n = logratio.shape[1]
    num = logratio @ _log_tail(n)
    den = np.einsum("ij,ij->i", logratio, logratio)
    return num / den


def renyi_factor_rows(z):
    """Distributional OLS factor for each row of unit-exponential draws.

    Row ``z`` gives order statistics ``k_i = sum_{j<=i} z_j / (n - j + 1)``
    and the factor ``sum k_i log(n/(n-i+1)) / sum k_i**2``.
    """
    z = np.ascontiguousarray(z, dtype=np.float64)
    n = z.shape[1]
    k = np.cumsum(z / np.arange(n, 0, -1, dtype=np.float64), axis=1)
    num = k @ _log_tail(n)
    den = np.einsum("ij,ij->i", k, k)
    return num / den


def ks_pareto(logratio, beta):
    """KS distance between the ascending sample and a Pareto CDF.

    ``logratio`` holds ``log(x_(i)/xm)``; the model CDF at each point is
    ``1 - exp(-beta * logratio)``. Both one-sided gaps at every jump count.
    """
    logratio = np.ascontiguousarray(logratio, dtype=np.float64)
    m = logratio.shape[0]
    cdf = -np.expm1(-beta * logratio)
    i = np.arange(m, dtype=np.float64)
    upper = np.abs((i + 1.0) / m - cdf)
    lower = np.abs(i / m - cdf)
    return float(max(upper.max(), lower.max()))


def cutoff_scan(x, min_tail):
    """KS-minimising cutoff scan over an ascending data vector.

    Returns ``(candidates, ks, beta, tail_count)`` arrays, one entry per
    unique value with at least ``min_tail`` points strictly above it.
    """
    x = np.ascontiguousarray(x, dtype=np.float64)
    n = x.shape[0]
    logx = np.log(x)
    # last index of every run of equal values
    ends = np.flatnonzero(np.append(x[1:] != x[:-1], True))
    ends = ends[n - 1 - ends >= min_tail]
    m = ends.shape[0]
    cand = np.empty(m)
    ks = np.empty(m)
    beta = np.empty(m)
    count = np.empty(m, dtype=np.int64)
    for c, k in enumerate(ends):
        lr = logx[k + 1:] - logx[k]
        b = lr.shape[0] / lr.sum()
        cand[c] = x[k]
        beta[c] = b
        count[c] = lr.shape[0]
        ks[c] = ks_pareto(lr, b)
    return cand, ks, beta, count
