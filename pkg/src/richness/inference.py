"""Normal-approximation upper bounds and the integer "at most" answer.

Given a method's point estimate and variance, the upper confidence bound
at risk r is estimate + z * sqrt(variance), with z the standard normal
quantile at 1 - r/2 (two-sided) or 1 - r (one-sided).  The deliverable
integer C_max is the ceiling of that bound: the smallest count the data
cannot rule out at the chosen risk.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidInputError, InvalidProbabilityError

TWO_SIDED = "two_sided"
ONE_SIDED = "one_sided"
SIDEDNESS = (TWO_SIDED, ONE_SIDED)

_SQRT2 = math.sqrt(2.0)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)

# Acklam's rational approximation to the inverse normal CDF
# (relative error below 1.15e-9 over (0, 1)).
_A = (-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
      1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00)
_B = (-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
      6.680131188771972e+01, -1.328068155288572e+01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
      -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
      3.754408661907416e+00)
_P_LOW = 0.02425


def normal_cdf(x: float) -> float:
    """Standard normal CDF, accurate in both tails."""
    if x < 0.0:
        return 0.5 * math.erfc(-x / _SQRT2)
    return 1.0 - 0.5 * math.erfc(x / _SQRT2)


def _normal_pdf(x: float) -> float:
    return _INV_SQRT_2PI * math.exp(-0.5 * x * x)


def _acklam(p: float) -> float:
    if p < _P_LOW:
        q = math.sqrt(-2.0 * math.log(p))
        return ((((( _C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5]) / \
            ((((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0)
    if p > 1.0 - _P_LOW:
        q = math.sqrt(-2.0 * math.log(1.0 - p))
        return -((((( _C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5]) / \
            ((((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0)
    q = p - 0.5
    r = q * q
    return ((((( _A[0] * r + _A[1]) * r + _A[2]) * r + _A[3]) * r + _A[4]) * r + _A[5]) * q / \
        ((((( _B[0] * r + _B[1]) * r + _B[2]) * r + _B[3]) * r + _B[4]) * r + 1.0)


def normal_quantile(p: float) -> float:
    """Inverse standard normal CDF, accurate to well under 1e-8.

    Acklam's rational approximation polished by one Newton step against
    the erf-based CDF.  Raises :class:`InvalidProbabilityError` outside
    (0, 1).
    """
    if not 0.0 < p < 1.0:
        raise InvalidProbabilityError(f"probability must lie in (0, 1), got {p!r}")
    z = _acklam(p)
    density = _normal_pdf(z)
    if density > 0.0:
        # cdf(z) - p, formed from the tail nearer to z to avoid cancellation
        if z < 0.0:
            offset = 0.5 * math.erfc(-z / _SQRT2) - p
        else:
            offset = (1.0 - p) - 0.5 * math.erfc(z / _SQRT2)
        z -= offset / density
    return z


@dataclass(frozen=True)
class ConfidenceAnswer:
    """One row of the "how many categories at most" table."""

    method: str
    estimate: float
    std_dev: float
    quantile: float
    upper_bound: float
    c_max: int
    risk: float
    sidedness: str


def upper_bound(method: str, estimate: float, variance: float,
                risk: float = 0.05, sidedness: str = TWO_SIDED) -> ConfidenceAnswer:
    """Normal upper confidence bound and its integer ceiling.

    ``variance`` must be non-negative; ``risk`` strictly inside (0, 1).
    """
    if variance < 0.0:
        raise InvalidInputError(f"variance must be non-negative, got {variance}")
    if not 0.0 < risk < 1.0:
        raise InvalidProbabilityError(f"risk must lie in (0, 1), got {risk!r}")
    if sidedness not in SIDEDNESS:
        raise InvalidInputError(f"sidedness must be one of {SIDEDNESS}, got {sidedness!r}")
    p = 1.0 - risk / 2.0 if sidedness == TWO_SIDED else 1.0 - risk
    quantile = normal_quantile(p)
    std_dev = math.sqrt(variance)
    bound = estimate + quantile * std_dev
    return ConfidenceAnswer(
        method=method,
        estimate=estimate,
        std_dev=std_dev,
        quantile=quantile,
        upper_bound=bound,
        c_max=math.ceil(bound),
        risk=risk,
        sidedness=sidedness,
    )
