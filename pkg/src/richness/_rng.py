"""Deterministic, order-independent random substreams.

Every stochastic operation in this package derives its generator from a
user-supplied integer seed plus an explicit key path, mixed through
numpy's ``SeedSequence`` spawn-key mechanism.  Streams for different keys
are statistically independent and do not depend on the order in which
they are created, so parallel evaluation reproduces sequential results
bit for bit.
"""

from __future__ import annotations

import numpy as np


def substream(seed: int, *key: int) -> np.random.Generator:
    """PCG64 generator for the substream identified by ``key`` under ``seed``."""
    if seed < 0:
        raise ValueError(f"seed must be a non-negative integer, got {seed}")
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(k) for k in key))
    return np.random.Generator(np.random.PCG64(ss))


def derive_seed(seed: int, *key: int) -> int:
    """Fold (seed, key) into a fresh 64-bit integer seed."""
    if seed < 0:
        raise ValueError(f"seed must be a non-negative integer, got {seed}")
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(k) for k in key))
    return int(ss.generate_state(1, dtype=np.uint64)[0])
