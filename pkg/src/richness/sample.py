"""Abundance samples and their derived summaries.

An :class:`AbundanceSample` is the sole input to every estimator in this
package: an ordered list of unique category labels with positive counts.
Input order is preserved for reporting, but all estimates depend only on
the multiset of counts.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import DuplicateLabelError, EmptySampleError, NonPositiveCountError


@dataclass(frozen=True)
class AbundanceSample:
    """Category labels with positive counts; immutable once constructed."""

    entries: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if not self.entries:
            raise EmptySampleError("sample contains no categories")
        seen = set()
        for label, count in self.entries:
            if not isinstance(count, int) or isinstance(count, bool) or count < 1:
                raise NonPositiveCountError(label, count)
            if label in seen:
                raise DuplicateLabelError(label)
            seen.add(label)

    @property
    def size(self) -> int:
        """Total number of observed individuals (n)."""
        return sum(count for _, count in self.entries)

    @property
    def richness(self) -> int:
        """Number of observed categories (C)."""
        return len(self.entries)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.entries)

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(count for _, count in self.entries)


def validate(pairs: Iterable[tuple[str, int]]) -> AbundanceSample:
    """Build a validated sample from (label, count) pairs, preserving order.

    Raises :class:`EmptySampleError`, :class:`NonPositiveCountError` or
    :class:`DuplicateLabelError` on the first violated invariant.
    """
    return AbundanceSample(tuple((label, count) for label, count in pairs))


@dataclass(frozen=True)
class FrequencyCounts:
    """f_j: how many categories were observed exactly j times.

    Stored as (multiplicity, category count) pairs in ascending
    multiplicity order.  Satisfies sum(f_j) = C and sum(j * f_j) = n.
    """

    items: tuple[tuple[int, int], ...]

    def get(self, multiplicity: int) -> int:
        for j, count in self.items:
            if j == multiplicity:
                return count
        return 0

    @property
    def singletons(self) -> int:
        """f_1, the number of categories seen exactly once."""
        return self.get(1)

    @property
    def richness(self) -> int:
        return sum(count for _, count in self.items)

    @property
    def size(self) -> int:
        return sum(j * count for j, count in self.items)

    def as_dict(self) -> dict[int, int]:
        return dict(self.items)


def frequency_counts(sample: AbundanceSample) -> FrequencyCounts:
    """Tally the sample's counts into frequencies-of-frequencies."""
    tally = Counter(sample.counts)
    return FrequencyCounts(tuple(sorted(tally.items())))
