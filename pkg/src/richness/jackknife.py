"""Generalized delete-k jackknife for category richness.

Removing k of the n observations leaves c_i categories; the pseudo-value
for deletion pattern i is

    CJ_i = (n*C - (n-k)*c_i) / k  =  C + d_i * (n-k) / k

where d_i is the number of categories that vanish entirely.  The estimate
averages CJ_i over all Combin(n, k) deletions, and the variance divides
the sum of squared deviations by n * (Combin(n, k) - k).

Two interchangeable evaluation strategies are provided.  The enumerated
form walks deletion patterns grouped by how many individuals each
category loses (weighted by the number of subsets realizing the pattern),
which is exact and exponentially cheaper than visiting subsets one by
one.  The closed form needs only the first two moments of d, obtained
from per-category and per-pair vanishing probabilities.  Both compute in
exact rational arithmetic and must agree; the test suite enforces this
against a literal subset enumeration.
"""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceededError, InvalidOrderError
from .sample import AbundanceSample

ENUMERATED = "enumerated"
CLOSED_FORM = "closed_form"

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class JackknifeResult:
    order: int
    estimate: float
    variance: float
    subset_count: int
    mode: str


def _check_order(k: int, n: int) -> None:
    if k < 1 or k >= n:
        raise InvalidOrderError(f"order must satisfy 1 <= k < n, got k={k}, n={n}")


def _deletion_patterns(counts: tuple[int, ...], k: int) -> Iterator[tuple[int, int]]:
    """Yield (weight, vanished) over all ways of deleting k individuals.

    A pattern fixes how many individuals each category loses; ``weight``
    is the number of k-subsets realizing it and ``vanished`` the number
    of categories it removes completely.
    """

    def rec(idx: int, remaining: int, weight: int, vanished: int):
        if idx == len(counts):
            if remaining == 0:
                yield weight, vanished
            return
        available = counts[idx]
        for removed in range(min(available, remaining) + 1):
            yield from rec(
                idx + 1,
                remaining - removed,
                weight * math.comb(available, removed),
                vanished + (removed == available),
            )

    yield from rec(0, k, 1, 0)


def _assemble(sample: AbundanceSample, k: int, e_d: Fraction, e_d2: Fraction,
              mode: str) -> JackknifeResult:
    """Turn the first two moments of d into the estimate and variance."""
    n, c = sample.size, sample.richness
    total = math.comb(n, k)
    step = Fraction(n - k, k)
    estimate = c + step * e_d
    # Sum over all deletions of (CJ_i - mean)^2, then the estimator's
    # denominator n * (Combin(n,k) - k).
    deviation_sum = step * step * total * (e_d2 - e_d * e_d)
    variance = deviation_sum / (n * (total - k))
    return JackknifeResult(
        order=k,
        estimate=float(estimate),
        variance=float(variance),
        subset_count=total,
        mode=mode,
    )


def jackknife_enumerated(sample: AbundanceSample, k: int,
                         budget: int = DEFAULT_BUDGET) -> JackknifeResult:
    """Evaluate the delete-k jackknife by enumerating deletion patterns.

    Raises :class:`BudgetExceededError` when Combin(n, k) exceeds
    ``budget``; callers should fall back to
    :func:`jackknife_closed_form`, which is exact at any scale.
    """
    n = sample.size
    _check_order(k, n)
    total = math.comb(n, k)
    if total > budget:
        raise BudgetExceededError(combinations=total, budget=budget)

    weight_sum = 0
    vanished_sum = 0
    vanished_sq_sum = 0
    for weight, vanished in _deletion_patterns(sample.counts, k):
        weight_sum += weight
        vanished_sum += weight * vanished
        vanished_sq_sum += weight * vanished * vanished
    assert weight_sum == total

    e_d = Fraction(vanished_sum, total)
    e_d2 = Fraction(vanished_sq_sum, total)
    return _assemble(sample, k, e_d, e_d2, ENUMERATED)


def jackknife_closed_form(sample: AbundanceSample, k: int) -> JackknifeResult:
    """Evaluate the delete-k jackknife from vanishing probabilities.

    A category with m individuals vanishes from a uniform random
    k-deletion with probability Combin(n-m, k-m) / Combin(n, k) (zero for
    m > k); pairs vanish jointly with the analogous probability at m + m'.
    These give E[d] and E[d^2] by linearity, which determine both the
    estimate and the variance exactly.
    """
    n = sample.size
    _check_order(k, n)
    total = math.comb(n, k)

    removable = [m for m in sample.counts if m <= k]
    e_d = Fraction(0)
    for m in removable:
        e_d += Fraction(math.comb(n - m, k - m), total)
    pair_sum = Fraction(0)
    for i in range(len(removable)):
        for j in range(i + 1, len(removable)):
            both = removable[i] + removable[j]
            if both <= k:
                pair_sum += Fraction(math.comb(n - both, k - both), total)
    e_d2 = e_d + 2 * pair_sum
    return _assemble(sample, k, e_d, e_d2, CLOSED_FORM)
