import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paretofit import _pure


def _ks_loop(lr, beta):
    m = len(lr)
    out = 0.0
    for i, v in enumerate(lr):
        f = 1 - np.exp(-beta * v)
        out = max(out, abs((i + 1) / m - f), abs(i / m - f))
    return out


def _logratios(seed, n):
    rng = np.random.default_rng(seed)
    return np.sort(rng.standard_exponential(n) / 1.5)


@settings(max_examples=200)
@given(st.integers(0, 2**32 - 1), st.integers(1, 400), st.floats(0.1, 5.0))
def test_ks_pareto(backend, seed, n, beta):
    lr = _logratios(seed, n)
    assert backend.ks_pareto(lr, beta) == pytest.approx(_ks_loop(lr, beta), rel=1e-10, abs=1e-13)


@settings(max_examples=200)
@given(st.integers(0, 2**32 - 1), st.integers(2, 300))
def test_ols_slope(backend, seed, n):
    lr = _logratios(seed, n)
    ref = sum(v * np.log(n / (n - i)) for i, v in enumerate(lr)) / np.sum(lr * lr)
    assert backend.ols_slope(lr) == pytest.approx(ref, rel=1e-11)


def test_row_kernels_match_scalar(backend):
    lr = np.sort(np.random.default_rng(3).standard_exponential((40, 25)), axis=1)
    rows = backend.ols_slope_rows(lr)
    np.testing.assert_allclose(rows, [backend.ols_slope(r) for r in lr], rtol=1e-13)
    z = np.random.default_rng(4).standard_exponential((40, 25))
    np.testing.assert_allclose(backend.renyi_factor_rows(z), _pure.renyi_factor_rows(z), rtol=1e-12)


@settings(max_examples=100)
@given(st.integers(0, 2**32 - 1), st.integers(5, 300), st.integers(1, 5), st.booleans())
def test_cutoff_scan_matches_pure(backend, seed, n, min_tail, ties):
    x = 1.0 + np.random.default_rng(seed).pareto(1.3, n)
    if ties:
        x = np.round(x, 1) + 0.05
    x = np.sort(x)
    got = backend.cutoff_scan(x, min_tail)
    ref = _pure.cutoff_scan(x, min_tail)
    np.testing.assert_array_equal(got[0], ref[0])
    np.testing.assert_array_equal(got[3], ref[3])
    np.testing.assert_allclose(got[1], ref[1], rtol=1e-9, atol=1e-12)
    np.testing.assert_allclose(got[2], ref[2], rtol=1e-9)


def test_cutoff_scan_empty(backend):
    out = backend.cutoff_scan(np.array([1.0, 2.0, 3.0]), 5)
    assert all(len(a) == 0 for a in out)


def _backend_in_subprocess(env_value):
    env = dict(os.environ)
    env.pop("PARETOFIT_PURE", None)
    if env_value is not None:
        env["PARETOFIT_PURE"] = env_value
    out = subprocess.run(
        [sys.executable, "-c", "import paretofit; print(paretofit.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    return out.stdout.strip()


def test_env_forces_fallback():
    assert _backend_in_subprocess("1") == "python"


def test_default_backend():
    try:
        import paretofit._kernels  # noqa: F401
    except ImportError:
        expected = "python"
    else:
        expected = "cython"
    assert _backend_in_subprocess(None) == expected
    assert _backend_in_subprocess("0") == expected
