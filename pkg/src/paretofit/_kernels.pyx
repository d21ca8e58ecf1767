# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numerical kernels. Mirrors ``_pure`` function for function."""
import numpy as np

from libc.math cimport exp, log


cdef double _slope(const double[::1] lr, const double[::1] lt) noexcept nogil:
    cdef Py_ssize_t i, n = lr.shape[0]
    cdef double num = 0.0, den = 0.0
    for i in range(n):
        num += lr[i] * lt[i]
        den += lr[i] * lr[i]
    return num / den


cdef double[::1] _log_tail(Py_ssize_t n):
    cdef double[::1] out = np.empty(n)
    cdef Py_ssize_t i
    cdef double logn = log(<double>n)
    for i in range(n):
        out[i] = logn - log(<double>(n - i))
    return out


def ols_slope(logratio):
    cdef const double[::1] lr = np.ascontiguousarray(logratio, dtype=np.float64)
    cdef double[::1] lt = _log_tail(lr.shape[0])
    cdef double out
    with nogil:
        out = _slope(lr, lt)
    return out


def ols_slope_rows(logratio):
    cdef const double[:, ::1] lr = np.ascontiguousarray(logratio, dtype=np.float64)
    cdef Py_ssize_t r, rows = lr.shape[0]
    cdef double[::1] lt = _log_tail(lr.shape[1])
    out = np.empty(rows)
    cdef double[::1] o = out
    with nogil:
        for r in range(rows):
            o[r] = _slope(lr[r], lt)
    return out


def renyi_factor_rows(z):
    cdef const double[:, ::1] zz = np.ascontiguousarray(z, dtype=np.float64)
    cdef Py_ssize_t r, i, rows = zz.shape[0], n = zz.shape[1]
    cdef double[::1] lt = _log_tail(n)
    cdef double k, num, den
    out = np.empty(rows)
    cdef double[::1] o = out
    with nogil:
        for r in range(rows):
            k = 0.0
            num = 0.0
            den = 0.0
            for i in range(n):
                k += zz[r, i] / <double>(n - i)
                num += k * lt[i]
                den += k * k
            o[r] = num / den
    return out


cdef double _ks(const double[::1] lx, Py_ssize_t start, double logv,
                double beta) noexcept nogil:
    # max(|(i+1)/m - F|, |i/m - F|) == max((i+1)/m - F, F - i/m).
    # int counter and ternary max keep the loop SIMD-vectorizable.
    cdef const double* p = &lx[start]
    cdef int i, m = <int>(lx.shape[0] - start)
    cdef double cdf, fi, a, g, d = 0.0, inv = 1.0 / m
    for i in range(m):
        fi = <double>i
        cdf = 1.0 - exp(-beta * (p[i] - logv))
        a = (fi + 1.0) * inv - cdf
        g = cdf - fi * inv
        g = a if a > g else g
        d = g if g > d else d
    return d


def ks_pareto(logratio, double beta):
    cdef const double[::1] lr = np.ascontiguousarray(logratio, dtype=np.float64)
    cdef double out
    with nogil:
        out = _ks(lr, 0, 0.0, beta)
    return out


def cutoff_scan(x, Py_ssize_t min_tail):
    xa = np.ascontiguousarray(x, dtype=np.float64)
    lxa = np.log(xa)
    # suffix[k] = sum of log x over indices > k
    suffix = np.zeros_like(lxa)
    suffix[:-1] = np.cumsum(lxa[::-1])[::-1][1:]
    cdef const double[::1] xs = xa
    cdef const double[::1] lx = lxa
    cdef const double[::1] sx = suffix
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t k, m, c = 0
    cdef double b

    cand = np.empty(n)
    ks = np.empty(n)
    beta = np.empty(n)
    count = np.empty(n, dtype=np.int64)
    cdef double[::1] cv = cand, kv = ks, bv = beta
    cdef long long[::1] nv = count

    with nogil:
        for k in range(n):
            m = n - 1 - k
            if m < min_tail:
                break
            # only the last index of a run of ties is a candidate
            if xs[k + 1] == xs[k]:
                continue
            b = m / (sx[k] - m * lx[k])
            cv[c] = xs[k]
            bv[c] = b
            nv[c] = m
            kv[c] = _ks(lx, k + 1, lx[k], b)
            c += 1
    return cand[:c].copy(), ks[:c].copy(), beta[:c].copy(), count[:c].copy()
