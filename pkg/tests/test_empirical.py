import io

import numpy as np
import pytest

from paretofit.distributions import DomainError, PowerLawTail, sample
from paretofit.empirical import empirical_tail, log_residuals, order_sample, tail_values


def test_order_sample_sorts():
    s = order_sample([3, 1, 2], 0.5)
    assert s.values.tolist() == [1, 2, 3]
    assert s.xm == 0.5 and s.n == 3


def test_singleton():
    assert order_sample([5], 1).values.tolist() == [5]


def test_near_ties_preserved():
    s = order_sample([2 + 1e-15, 3, 2], 1)
    assert s.n == 3
    assert s.values[0] == 2 and s.values[1] == 2 + 1e-15
    assert np.all(np.diff(s.values) >= 0)


@pytest.mark.parametrize("raw, xm", [([], 1), ([1, 2], 1), ([0.5, 2], 1), ([np.nan], 0.1)])
def test_order_sample_rejects(raw, xm):
    with pytest.raises(DomainError):
        order_sample(raw, xm)


def test_sample_values_read_only():
    s = order_sample([2, 3], 1)
    with pytest.raises(ValueError):
        s.values[0] = 10


def test_empirical_tail_small():
    c = empirical_tail(order_sample([4, 1.5, 2, 3], 1))
    np.testing.assert_array_equal(c.tail, [1, 0.75, 0.5, 0.25])
    np.testing.assert_array_equal(c.x, [1.5, 2, 3, 4])
    assert empirical_tail(order_sample([2], 1)).tail.tolist() == [1.0]
    assert tail_values(10)[-1] == 0.1


def test_empirical_tail_matches_indicator_definition():
    # P_n(X >= x) = (1/n) * #{x_j >= x}, evaluated by brute force
    x = sample(PowerLawTail.pareto(1, 1.5), 200, 3)
    c = empirical_tail(order_sample(x, 0.999))
    brute = np.array([np.mean(x >= v) for v in c.x])
    np.testing.assert_allclose(c.tail, brute, rtol=0, atol=1e-15)


def test_ties_use_positional_ranks():
    c = empirical_tail(order_sample([2, 2, 3], 1))
    np.testing.assert_allclose(c.tail, [1, 2 / 3, 1 / 3])


def test_tail_curve_csv():
    c = empirical_tail(order_sample([3, 2], 1))
    assert c.to_csv() == "x,tail\n2.0,1.0\n3.0,0.5\n"
    buf = io.StringIO()
    c.to_csv(buf)
    assert buf.getvalue().startswith("x,tail\n")


def test_residuals_zero_when_model_matches():
    # choose x_i so that the Pareto tail equals (n-i+1)/n exactly
    n = 5
    model = PowerLawTail.pareto(1.0, 2.0)
    x = tail_values(n) ** (-1 / 2.0)
    x[0] = np.nextafter(1.0, 2.0)  # tail 1 sits at xm itself
    d = log_residuals(order_sample(x, 1.0), model)
    np.testing.assert_allclose(d.residual, 0, atol=1e-15)
    np.testing.assert_allclose(d.log_residual, 0, atol=1e-15)


def test_residual_single_point():
    model = PowerLawTail.pareto(1.0, 1.5)
    d = log_residuals(order_sample([2.0], 1.0), model)
    assert d.residual[0] == pytest.approx(1 - 2**-1.5)
    assert d.log_residual[0] == pytest.approx(np.log(1 / 2**-1.5))
    assert d.model_variance[0] == pytest.approx(2**-1.5 * (1 - 2**-1.5))


def test_residuals_require_matching_cutoff():
    with pytest.raises(DomainError):
        log_residuals(order_sample([2.0], 1.0), PowerLawTail.pareto(1.5, 1.0))


def test_model_variance_bounds():
    s = order_sample(sample(PowerLawTail.pareto(1, 1.5), 1000, 5), 0.999)
    d = log_residuals(s, PowerLawTail.pareto(0.999, 1.5))
    assert np.all(d.model_variance >= 0)
    assert np.all(d.model_variance <= 1 / (4 * s.n))


def test_binomial_variance_at_median_point():
    """Empirical tail at a fixed x has variance p(1-p)/n."""
    # 2000 replications: the sample variance then has ~3% relative sd
    n, reps, beta = 10_000, 2000, 1.5
    model = PowerLawTail.pareto(1.0, beta)
    x_med = 2 ** (1 / beta)  # model tail 1/2
    eps = np.empty(reps)
    for r in range(reps):
        x = sample(model, n, r)
        eps[r] = np.mean(x >= x_med) - 0.5
    expected = 0.25 / n
    assert abs(eps.var(ddof=1) / expected - 1) < 0.15
    assert abs(eps.mean()) < 4 * np.sqrt(expected / reps)


def test_residuals_at_empirical_median_point():
    """Residual variance across replications at the median order statistic."""
    n, reps = 10_000, 2000
    model = PowerLawTail.pareto(1.0, 1.5)
    res = np.empty(reps)
    var = np.empty(reps)
    i = n // 2
    for r in range(reps):
        s = order_sample(sample(model, n, 10_000 + r), np.nextafter(1.0, 0))
        d = log_residuals(s, PowerLawTail.pareto(s.xm, 1.5))
        res[r] = d.residual[i]
        var[r] = d.model_variance[i]
    # at an order statistic the empirical tail is fixed; the residual inherits
    # the spread of the model tail there, Beta-distributed with var ~ p(1-p)/n
    assert abs(res.var(ddof=1) / var.mean() - 1) < 0.15


def test_glivenko_cantelli_shrinks():
    model = PowerLawTail.pareto(1.0, 1.5)
    med = []
    for n in (100, 1000, 10_000):
        dev = []
        for r in range(30):
            s = order_sample(sample(model, n, r), np.nextafter(1.0, 0))
            dev.append(np.max(np.abs(empirical_tail(s).tail - s.values**-1.5)))
        med.append(np.median(dev))
    assert med[0] > med[1] > med[2]
