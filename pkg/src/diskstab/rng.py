"""Counter-based splitmix64 pseudorandomness.

All instance generation and perturbation draws come from this one generator so
that corpora are reproducible across runs and platforms sharing IEEE doubles.
The scalar and vector paths compute identical values.
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def mix64(seed: int, index: int) -> int:
    """splitmix64 output for stream `seed` at position `index`."""
    z = (seed + (index + 1) * _GAMMA) & _MASK
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return z ^ (z >> 31)


def mix64_array(seed: int, start: int, count: int) -> np.ndarray:
    """Vectorized mix64 over indices [start, start+count)."""
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = (np.uint64(seed & _MASK) + idx * np.uint64(_GAMMA))
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
        return z ^ (z >> np.uint64(31))


def unit_floats(seed: int, start: int, count: int) -> np.ndarray:
    """Doubles in [0, 1) with 53 significant bits, one per counter index."""
    return (mix64_array(seed, start, count) >> np.uint64(11)) * 2.0**-53


def derive_seed(seed: int, *keys: int) -> int:
    """Fold extra keys into a seed so substreams never collide."""
    s = seed & _MASK
    for k in keys:
        s = mix64(s, k & _MASK)
    return s


class Stream:
    """Sequential view over the counter-based generator.

    Draws are buffered in blocks; values equal unit_floats(seed, i, 1) for
    consecutive i regardless of block size.
    """

    __slots__ = ("seed", "_pos", "_buf", "_lo")
    _BLOCK = 1024

    def __init__(self, seed: int, *keys: int):
        self.seed = derive_seed(seed, *keys)
        self._pos = 0
        self._buf = None
        self._lo = 0

    def next_float(self) -> float:
        buf = self._buf
        i = self._pos - self._lo
        if buf is None or i >= len(buf):
            self._lo = self._pos
            self._buf = buf = unit_floats(self.seed, self._lo, self._BLOCK)
            i = 0
        self._pos += 1
        return float(buf[i])

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.next_float()

    def log_uniform(self, lo: float, hi: float) -> float:
        return float(np.exp(self.uniform(np.log(lo), np.log(hi))))

    def angle(self) -> float:
        """Uniform angle in [0, 2*pi)."""
        return self.uniform(0.0, 2.0 * np.pi)

    def randint(self, lo: int, hi: int) -> int:
        """Integer in [lo, hi] inclusive."""
        return lo + int(self.next_float() * (hi - lo + 1))
