"""Seeded 64-bit generator with a splitmix-style state advance.

Spelled out rather than delegated to random.Random so that the byte-for-
byte replay guarantee does not depend on any library's implementation
details.  Combat resolution is the only consumer.
"""

from __future__ import annotations

_MASK = 0xFFFFFFFFFFFFFFFF
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    __slots__ = ("state", "draws")

    def __init__(self, seed: int):
        self.state = seed & _MASK
        self.draws = 0

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        self.draws += 1
        return (z ^ (z >> 31)) & _MASK

    def below(self, n: int) -> int:
        """Uniform-ish integer in [0, n).  The modulo bias at 64 bits is
        far below anything the calibration tolerances can see."""
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next_u64() % n


def fnv1a64(data: bytes) -> int:
    """64-bit FNV-1a hash, used for state digests and map fingerprints."""
    digest = 0xCBF29CE484222325
    for byte in data:
        digest ^= byte
        digest = (digest * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return digest
