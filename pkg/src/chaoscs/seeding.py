"""Deterministic seed derivation for parallel Monte Carlo trials.

Per-trial seeds are derived from a master seed and the trial coordinates
with SplitMix64 (Steele, Lea & Flood's mixing function), so the stream a
trial sees depends only on ``(master_seed, *coordinates)`` and never on
execution order or worker count.  Derived seeds feed ``numpy``'s PCG64
generator.
"""

import numpy as np

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(z):
    """One SplitMix64 output step for a 64-bit state."""
    z = (z + _GAMMA) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_seed(master_seed, *coordinates):
    """Mix ``master_seed`` with integer coordinates into one 64-bit seed.

    The mixing is positional: ``derive_seed(s, 1, 2) != derive_seed(s, 2, 1)``.
    """
    state = splitmix64(int(master_seed) & _MASK64)
    for c in coordinates:
        c = int(c)
        if c < 0:
            raise ValueError("seed coordinates must be non-negative integers")
        state = splitmix64(state ^ c)
    return state


def rng_from(seed):
    """A PCG64 generator for a derived 64-bit seed."""
    return np.random.Generator(np.random.PCG64(seed))
