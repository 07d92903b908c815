"""Deterministic 64-bit PRNG (splitmix64) for reproducible campaigns.

The generator is fixed to a documented algorithm instead of the interpreter
default so the same seed yields the same stream on any platform or version.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


class SplitMix64:
    """splitmix64 stream; identical output for identical seeds."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-ish draw in [0, bound); bound must be positive."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def randint(self, lo: int, hi: int) -> int:
        """Draw in the inclusive range [lo, hi]."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.below(hi - lo + 1)

    def shuffle(self, items: list) -> list:
        """In-place Fisher-Yates shuffle; returns the list."""
        for idx in range(len(items) - 1, 0, -1):
            j = self.below(idx + 1)
            items[idx], items[j] = items[j], items[idx]
        return items
