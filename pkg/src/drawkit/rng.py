"""Seedable, portable pseudo-random numbers (SplitMix64).

Animation frames and benchmark inputs must be byte-identical across runs
and platforms, so this module implements SplitMix64 explicitly instead of
leaning on Python's Mersenne Twister.  The generator is the one published
by Steele, Lea and Flood: the state advances by the golden-gamma constant
0x9E3779B97F4A7C15 and each output is finalized with the two xor-multiply
rounds 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB.
"""

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GAMMA = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """SplitMix64 stream over 64-bit outputs and [0, 1) doubles."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        return _mix(self._state)

    def uniform(self) -> float:
        """Next double in [0, 1), from the top 53 bits of the next output."""
        return (self.next_u64() >> 11) * 2.0**-53

    @classmethod
    def for_stream(cls, seed: int, index: int) -> "SplitMix64":
        """Independent stream `index`: seeded with the index-th output of a
        SplitMix64 seeded with `seed`."""
        if index < 0:
            raise ValueError("stream index must be >= 0")
        return cls(_mix((seed + (index + 1) * _GAMMA) & _MASK64))
