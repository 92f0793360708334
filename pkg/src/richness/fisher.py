"""Log-series richness: the alpha index and the variance of observed richness.

For an incomplete sample with C observed categories among N individuals,
the log-series model ties the two through

    C = alpha * ln(1 + N / alpha)

with a unique positive root alpha whenever 0 < C < N (the right-hand side
is strictly increasing in alpha with range (0, N)).  The same model gives
the variance of C at sample size N:

    Var(C) = alpha * ln((2N + alpha) / (N + alpha)) - alpha^2 * N / (N + alpha)^2

which tends to alpha * ln(2) as N grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidInputError, NoFiniteSolutionError

DEFAULT_TOLERANCE = 1e-9
_MAX_ITERATIONS = 200


@dataclass(frozen=True)
class FisherFit:
    """Root of the log-series relation for one (C, N) pair.

    ``residual`` is the value of C - alpha * ln(1 + N/alpha) at the
    returned alpha; callers can recompute it to audit the fit.
    """

    alpha: float
    c_observed: int
    n_observed: int
    residual: float


def _balance(alpha: float, c: int, n: int) -> float:
    return c - alpha * math.log1p(n / alpha)


def solve_alpha(c: int, n: int, tol: float = DEFAULT_TOLERANCE) -> FisherFit:
    """Solve C = alpha * ln(1 + N/alpha) for alpha.

    Brackets the root by doubling/halving from the seed C / ln(1 + N),
    then runs Newton steps safeguarded by the bracket: any step that
    escapes it is replaced by a bisection step.  Stops when the residual
    is within ``tol``.

    Raises :class:`InvalidInputError` when c < 1, n < 1 or tol <= 0, and
    :class:`NoFiniteSolutionError` when c >= n (the root escapes to
    infinity).
    """
    if c < 1:
        raise InvalidInputError(f"observed richness must be >= 1, got {c}")
    if n < 1:
        raise InvalidInputError(f"sample size must be >= 1, got {n}")
    if tol <= 0:
        raise InvalidInputError(f"tolerance must be positive, got {tol}")
    if c >= n:
        raise NoFiniteSolutionError(
            f"no finite alpha exists for c={c} >= n={n}; "
            "the relation requires 0 < C < N"
        )

    # _balance is strictly decreasing in alpha: positive left of the root,
    # negative right of it.
    lo = hi = c / math.log1p(n)
    for _ in range(_MAX_ITERATIONS):
        if _balance(hi, c, n) <= 0:
            break
        hi *= 2.0
    for _ in range(_MAX_ITERATIONS):
        if _balance(lo, c, n) >= 0:
            break
        lo /= 2.0

    alpha = 0.5 * (lo + hi)
    for _ in range(_MAX_ITERATIONS):
        value = _balance(alpha, c, n)
        if abs(value) <= tol:
            return FisherFit(alpha=alpha, c_observed=c, n_observed=n, residual=value)
        if value > 0:
            lo = alpha
        else:
            hi = alpha
        slope = n / (alpha + n) - math.log1p(n / alpha)
        step = alpha - value / slope if slope != 0 else math.inf
        alpha = step if lo < step < hi else 0.5 * (lo + hi)
    raise ArithmeticError(
        f"root refinement did not reach tol={tol} within {_MAX_ITERATIONS} iterations"
    )


def variance_of_richness(fit: FisherFit, n: int) -> float:
    """Variance of observed richness at sample size ``n`` for a fitted alpha.

    ``n`` may differ from ``fit.n_observed``: the same alpha is routinely
    evaluated both at the observed size and in the large-N limit (see
    :func:`variance_limit` for the latter, which avoids cancellation).
    """
    if n < 1:
        raise InvalidInputError(f"sample size must be >= 1, got {n}")
    a = fit.alpha
    return a * math.log((2 * n + a) / (n + a)) - a * a * n / (n + a) ** 2


def variance_limit(fit: FisherFit) -> float:
    """Large-N limit of :func:`variance_of_richness`: alpha * ln(2)."""
    return fit.alpha * math.log(2.0)
