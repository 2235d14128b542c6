"""Deterministic portable random numbers (SplitMix64).

Every stochastic step of the detector draws from this generator so that a
run can be replayed bit-for-bit from its seed, in pure Python or in the
compiled core, on any platform.  Uniform doubles are 53-bit draws in [0, 1);
bounded integers are ``floor(u * n)``, which for n <= 2**31 never returns n.
"""

from __future__ import annotations

_MASK = 0xFFFFFFFFFFFFFFFF
_GAMMA = 0x9E3779B97F4A7C15

# Smallest value a nonzero 53-bit uniform draw can take.
MIN_UNIFORM = 2.0 ** -53


def mix64(value: int) -> int:
    """One SplitMix64 output step applied to ``value`` (stateless)."""
    z = (value + _GAMMA) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def derive_seed(master: int, index: int) -> int:
    """Per-trial seed from a master seed and a trial index."""
    return mix64((master & _MASK) ^ mix64(index & _MASK))


class SplitMix64:
    """SplitMix64 stream: state += golden gamma, output = mixed state."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """53-bit uniform in [0, 1)."""
        return (self.next_u64() >> 11) * MIN_UNIFORM

    def randint(self, n: int) -> int:
        """Uniform integer in {0, ..., n-1}; consumes one draw."""
        return int(self.uniform() * n)
