import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.special import ndtri

from richness import ONE_SIDED, TWO_SIDED, normal_cdf, normal_quantile, upper_bound
from richness.errors import InvalidInputError, InvalidProbabilityError

GRID = [1e-9, 1e-6, 2.5e-2, 0.001, 0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.95,
        0.975, 0.99, 0.999, 1 - 1e-6, 1 - 1e-9]


@pytest.mark.parametrize("p", GRID)
def test_quantile_matches_scipy(p):
    ours = normal_quantile(p)
    reference = float(ndtri(p))
    assert ours == pytest.approx(reference, abs=1e-8 * max(1.0, abs(reference)))


def test_published_quantiles():
    assert normal_quantile(0.975) == pytest.approx(1.959964, abs=1e-6)
    assert normal_quantile(0.95) == pytest.approx(1.644854, abs=1e-6)


def test_median_is_zero():
    assert normal_quantile(0.5) == 0.0


@pytest.mark.parametrize("p", [0.0, 1.0, -0.1, 1.1, math.nan])
def test_quantile_rejects_bad_probability(p):
    with pytest.raises(InvalidProbabilityError):
        normal_quantile(p)


@given(st.floats(min_value=0.001, max_value=0.999))
def test_cdf_quantile_round_trip(p):
    assert normal_cdf(normal_quantile(p)) == pytest.approx(p, abs=1e-7)


# Capped at 6 on the right: beyond that the upper tail is below double
# resolution around 1.0 and strict monotonicity cannot be observed.
@given(st.floats(min_value=-8.0, max_value=6.0))
def test_cdf_is_monotone_and_symmetric(x):
    assert 0.0 < normal_cdf(x) < 1.0
    assert normal_cdf(x) + normal_cdf(-x) == pytest.approx(1.0, abs=1e-12)
    assert normal_cdf(x + 0.01) > normal_cdf(x)


def test_upper_bound_fields():
    answer = upper_bound("fisher", 5.0, 1.0, risk=0.05, sidedness=TWO_SIDED)
    assert answer.method == "fisher"
    assert answer.std_dev == 1.0
    assert answer.upper_bound == answer.estimate + answer.quantile * answer.std_dev
    assert answer.upper_bound == pytest.approx(6.98, abs=0.05)
    assert answer.c_max == 7
    assert answer.risk == 0.05
    assert answer.sidedness == TWO_SIDED


def test_published_rows_reproduce():
    jk1 = upper_bound("jackknife:1", 5.977, 0.955, 0.05, TWO_SIDED)
    assert jk1.upper_bound == pytest.approx(7.89, abs=0.01)
    assert jk1.c_max == 8
    starred = upper_bound("bootstrap", 4.695, 0.2134, 0.05, ONE_SIDED)
    assert starred.upper_bound == pytest.approx(5.45, abs=0.01)
    assert starred.c_max == 6


def test_zero_variance_bound_is_estimate():
    answer = upper_bound("any", 4.2, 0.0, risk=0.05, sidedness=TWO_SIDED)
    assert answer.upper_bound == 4.2
    assert answer.c_max == 5


estimates = st.floats(min_value=0.0, max_value=1e6)
variances = st.floats(min_value=0.0, max_value=1e6)
risks = st.floats(min_value=1e-6, max_value=0.5)


@given(estimates, variances, risks)
def test_c_max_at_least_floor_of_estimate(estimate, variance, risk):
    answer = upper_bound("m", estimate, variance, risk=risk, sidedness=TWO_SIDED)
    assert answer.c_max >= math.floor(estimate)
    assert answer.c_max == math.ceil(answer.upper_bound)


@given(estimates, variances, risks)
def test_one_sided_no_wider_than_two_sided(estimate, variance, risk):
    two = upper_bound("m", estimate, variance, risk=risk, sidedness=TWO_SIDED)
    one = upper_bound("m", estimate, variance, risk=risk, sidedness=ONE_SIDED)
    assert one.upper_bound <= two.upper_bound


def test_bound_monotonicity():
    base = upper_bound("m", 5.0, 1.0, risk=0.05, sidedness=TWO_SIDED)
    assert upper_bound("m", 5.5, 1.0, 0.05, TWO_SIDED).upper_bound > base.upper_bound
    assert upper_bound("m", 5.0, 2.0, 0.05, TWO_SIDED).upper_bound > base.upper_bound
    assert upper_bound("m", 5.0, 1.0, 0.01, TWO_SIDED).upper_bound > base.upper_bound


def test_upper_bound_rejects_bad_inputs():
    with pytest.raises(InvalidInputError):
        upper_bound("m", 5.0, -1e-9, risk=0.05)
    with pytest.raises(InvalidProbabilityError):
        upper_bound("m", 5.0, 1.0, risk=0.0)
    with pytest.raises(InvalidInputError):
        upper_bound("m", 5.0, 1.0, risk=0.05, sidedness="middle")
