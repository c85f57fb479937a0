"""Seeded random set generators used by the experiments and the CLI."""

from __future__ import annotations

import numpy as np


def rng_for(seed: int, *key: int) -> np.random.Generator:
    """Independent stream for (seed, key...) so sweep items do not share state."""
    return np.random.default_rng([int(seed), *map(int, key)])


def random_subset(rng: np.random.Generator, universe: int, size: int, exclude=()) -> np.ndarray:
    """Sorted random subset of range(universe) minus ``exclude``."""
    pool = np.setdiff1d(np.arange(universe, dtype=np.int64), np.asarray(exclude, dtype=np.int64))
    size = min(size, pool.size)
    return np.sort(rng.choice(pool, size=size, replace=False))


def random_interval_start(rng: np.random.Generator, modulus: int) -> int:
    return int(rng.integers(0, modulus))


def random_fibers(rng, keys, universe: int, max_size: int, exclude=()) -> dict[int, np.ndarray]:
    """A random subset of size <= max_size for every key."""
    out = {}
    for key in keys:
        size = int(rng.integers(0, max_size + 1))
        out[int(key)] = random_subset(rng, universe, size, exclude)
    return out
