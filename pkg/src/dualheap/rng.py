"""Deterministic 64-bit PRNG for input generation and random pivots.

A fixed algorithm (rather than Python's random module) so that a given seed
produces bit-identical streams in any implementation of this harness.
"""

MASK64 = (1 << 64) - 1

_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """splitmix64: the state advances by a fixed odd constant and the output
    is a finalizing avalanche mix of the state. All arithmetic mod 2**64."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        # Plain modulo reduction: the tiny bias is irrelevant here and keeps
        # the stream trivially reproducible in other languages.
        return self.next_u64() % bound
