"""
Reproducible random streams.

Every generator in the toolkit draws from an ``Rng``: a numpy ``Generator``
over the counter-based Philox bit generator, keyed by a 64-bit seed. Streams
depend only on the seed, never on thread count or scheduling. Parallel work
gets its own stream through ``derive_seed`` instead of sharing one ``Rng``.
"""

import numpy as np

SEED_MASK = (1 << 64) - 1


def derive_seed(parent_seed: int, *indices: int) -> int:
    """
    Hash a parent seed and task indices into an independent child seed.

    Uses numpy's SeedSequence spawn keys, so (parent, indices) pairs that
    differ anywhere give statistically independent streams.
    """
    if any(i < 0 for i in indices):
        raise ValueError(f"Task indices must be non-negative, got {indices}")
    seq = np.random.SeedSequence(entropy=int(parent_seed) & SEED_MASK,
                                 spawn_key=tuple(int(i) for i in indices))
    return int(seq.generate_state(1, dtype=np.uint64)[0])


class Rng:
    """Single-owner seeded random stream."""

    def __init__(self, seed: int):
        self.seed = int(seed) & SEED_MASK
        self._gen = np.random.Generator(np.random.Philox(key=self.seed))

    def child(self, *indices: int) -> "Rng":
        return Rng(derive_seed(self.seed, *indices))

    def standard_normal(self, size) -> np.ndarray:
        return self._gen.standard_normal(size)

    def choice(self, pool: np.ndarray, count: int) -> np.ndarray:
        """Draw ``count`` distinct members of ``pool`` uniformly at random."""
        if count == 0:
            return np.empty(0, dtype=np.int64)
        return np.asarray(self._gen.choice(pool, size=count, replace=False), dtype=np.int64)

    def __repr__(self):
        return f"Rng(seed={self.seed})"
