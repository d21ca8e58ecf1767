"""Backend selection for the numerical kernels.

The compiled extension is used when it imports; otherwise the numpy
implementations in ``_pure`` take over. Set ``PARETOFIT_PURE=1`` to force
the fallback.
"""
import os

if os.environ.get("PARETOFIT_PURE", "") not in ("", "0"):
    from . import _pure as _impl
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "cython"
    except ImportError:  # extension not built
        from . import _pure as _impl
        BACKEND = "python"

ols_slope = _impl.ols_slope
ols_slope_rows = _impl.ols_slope_rows
renyi_factor_rows = _impl.renyi_factor_rows
ks_pareto = _impl.ks_pareto
cutoff_scan = _impl.cutoff_scan

__all__ = [
    "BACKEND",
    "ols_slope",
    "ols_slope_rows",
    "renyi_factor_rows",
    "ks_pareto",
    "cutoff_scan",
]
