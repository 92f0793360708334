"""Bootstrap richness: Monte-Carlo resampling plus exact resampling moments.

Each replicate draws n observations uniformly with replacement from the
n observed individuals and counts the distinct categories c_i.  The
estimate is the mean of the c_i and the variance divides the squared
deviations by (replicates - 1).

The resampling distribution's moments also have a closed form: with
q_c = (1 - n_c/n)^n the chance that category c misses a replicate,

    mean = sum_c (1 - q_c)
    variance = sum_c q_c (1 - q_c)
             + sum_{c != c'} [ (1 - n_c/n - n_c'/n)^n - q_c q_c' ]

:func:`bootstrap_moments_exact` computes these and serves both as a test
oracle for the Monte Carlo and as a deterministic reporting mode.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._rng import substream
from .errors import InvalidInputError
from .sample import AbundanceSample

DEFAULT_REPLICATES = 200
DEFAULT_SEED = 42


@dataclass(frozen=True)
class BootstrapConfig:
    replicates: int = DEFAULT_REPLICATES
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.replicates < 2:
            raise InvalidInputError(
                f"replicates must be >= 2 (variance divides by replicates - 1), "
                f"got {self.replicates}"
            )
        if self.seed < 0:
            raise InvalidInputError(f"seed must be non-negative, got {self.seed}")


@dataclass(frozen=True)
class BootstrapResult:
    estimate: float
    variance: float
    replicate_values: tuple[int, ...]


def _canonical_observations(sample: AbundanceSample) -> np.ndarray:
    """Individual-level category ids in (count desc, label asc) order.

    Fixing the expansion order makes a seed portable across input
    orderings: permuting the sample's entries cannot change any
    replicate's draws.
    """
    order = sorted(sample.entries, key=lambda entry: (-entry[1], entry[0]))
    return np.repeat(np.arange(len(order)), [count for _, count in order])


def _replicate_richness(observations: np.ndarray, seed: int, index: int) -> int:
    """Distinct categories in replicate ``index``; one substream each.

    Keying the stream on (seed, index) makes the value independent of
    evaluation order, so parallel scheduling reproduces sequential runs.
    """
    rng = substream(seed, index)
    n = observations.size
    drawn = observations[rng.integers(0, n, size=n)]
    return int(np.unique(drawn).size)


def bootstrap_richness(sample: AbundanceSample,
                       config: BootstrapConfig | None = None) -> BootstrapResult:
    """Monte-Carlo bootstrap estimate of richness and its variance.

    Fully deterministic given (sample counts, config.seed,
    config.replicates); the order of the sample's entries is irrelevant.
    """
    cfg = config if config is not None else BootstrapConfig()
    observations = _canonical_observations(sample)
    values = tuple(
        _replicate_richness(observations, cfg.seed, i) for i in range(cfg.replicates)
    )
    estimate = math.fsum(values) / cfg.replicates
    variance = math.fsum((estimate - v) ** 2 for v in values) / (cfg.replicates - 1)
    return BootstrapResult(estimate=estimate, variance=variance, replicate_values=values)


def bootstrap_moments_exact(sample: AbundanceSample) -> tuple[float, float]:
    """Exact mean and variance of the resampling distribution of c_i."""
    n = sample.size
    counts = sample.counts
    miss = [(1.0 - m / n) ** n for m in counts]
    mean = math.fsum(1.0 - q for q in miss)
    terms = [q * (1.0 - q) for q in miss]
    for i in range(len(counts)):
        for j in range(i + 1, len(counts)):
            joint = (1.0 - (counts[i] + counts[j]) / n) ** n
            terms.append(2.0 * (joint - miss[i] * miss[j]))
    return mean, math.fsum(terms)
