"""Pareto tail-exponent estimation: Hill/MLE, log-tail regression and its
sigmoid bias correction, with cutoff selection and Monte-Carlo tooling."""

__version__ = "0.1.0"

from ._core import BACKEND
from .cutoff import CutoffScanResult, ks_distance, scan_cutoff
from .distributions import (
    DomainError,
    LomaxParams,
    PiecewiseParams,
    PowerLawTail,
    lomax_inverse_tail,
    lomax_tail,
    pareto_inverse_tail,
    pareto_tail,
    piecewise_inverse_tail,
    piecewise_tail,
    sample,
)
from .empirical import Sample, TailCurve, TailErrorDiagnostics, empirical_tail, log_residuals, order_sample
from .estimators import (
    CorrectionParams,
    EstimateReport,
    estimate,
    mle_raw,
    mle_sd_interval,
    mle_unbiased,
    ols_corrected,
    ols_raw,
    sigmoid_factor,
)
from .montecarlo import ExperimentGrid, GridStats, fit_gamma, run_grid, variance_slope
from .renyi import RenyiDraw, renyi_ols_factor, renyi_order_logs, renyi_vs_direct
