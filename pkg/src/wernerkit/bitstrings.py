"""Exact combinatorics of fixed-length binary words.

Positions are 1-based and position 1 is the most significant bit, so the
word written ``001011`` has integer value 11, weight 3, and bit 1 equal
to 0.  This matches the convention used when a word indexes a
computational-basis ket.  Word lengths are capped at 24 bits so that
exhaustive scans over all 2^m words stay fast.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

MAX_BITS = 24

# Below this many words a scan is not worth splitting across threads.
_CHUNK_FLOOR = 1 << 16


@dataclass(frozen=True)
class BitString:
    """An immutable binary word of fixed length."""

    bits: int
    length: int

    def __post_init__(self) -> None:
        if not 1 <= self.length <= MAX_BITS:
            raise ValueError(f"length must be in 1..{MAX_BITS}, got {self.length}")
        if not 0 <= self.bits < (1 << self.length):
            raise ValueError(f"value {self.bits} does not fit in {self.length} bits")

    @classmethod
    def from_string(cls, word: str) -> "BitString":
        if not word or set(word) - {"0", "1"}:
            raise ValueError(f"not a binary word: {word!r}")
        return cls(int(word, 2), len(word))

    def __str__(self) -> str:
        return format(self.bits, f"0{self.length}b")

    def bit(self, position: int) -> int:
        """Bit value at a 1-based position (1 = most significant)."""
        self._check_position(position)
        return (self.bits >> (self.length - position)) & 1

    def weight(self) -> int:
        """Number of 1 bits."""
        return self.bits.bit_count()

    def complement(self) -> "BitString":
        """Every bit flipped."""
        return BitString(self.bits ^ ((1 << self.length) - 1), self.length)

    def flip_bit(self, position: int) -> "BitString":
        """The word with only the bit at ``position`` flipped."""
        self._check_position(position)
        return BitString(self.bits ^ (1 << (self.length - position)), self.length)

    def cyclic_shift(self, k: int) -> "BitString":
        """Rotate left by k places: bit j of the result is bit j+k (cyclic).

        Any integer k is accepted and reduced mod the length, so shifting
        by the full length is the identity.
        """
        m = self.length
        k %= m
        if k == 0:
            return self
        mask = (1 << m) - 1
        return BitString(((self.bits << k) | (self.bits >> (m - k))) & mask, m)

    def is_aperiodic(self) -> bool:
        """True unless the word is a repetition of a strictly shorter block.

        A word of length m is periodic when it equals the concatenation of
        k > 1 copies of some block, i.e. when some proper divisor of m is a
        rotation period.  Length-1 words are aperiodic.
        """
        m = self.length
        for d in range(1, m):
            if m % d == 0 and self.cyclic_shift(d) == self:
                return False
        return True

    def _check_position(self, position: int) -> None:
        if not 1 <= position <= self.length:
            raise ValueError(
                f"position {position} out of range 1..{self.length}"
            )


def all_strings(m: int) -> Iterator[BitString]:
    """All m-bit words in increasing integer order."""
    _check_length(m)
    for value in range(1 << m):
        yield BitString(value, m)


def aperiodic_strings(m: int) -> Iterator[BitString]:
    """All aperiodic m-bit words in increasing integer order."""
    for word in all_strings(m):
        if word.is_aperiodic():
            yield word


def count_aperiodic(m: int, threads: int = 1) -> int:
    """Number of aperiodic m-bit words, by exhaustive scan."""
    _check_length(m)
    return _scan_count(m, 0, threads)


def count_periodic(m: int, threads: int = 1) -> int:
    """Number of periodic m-bit words: 2^m minus the aperiodic count."""
    return (1 << m) - count_aperiodic(m, threads)


def count_aperiodic_with_00(m: int, a: int, b: int, threads: int = 1) -> int:
    """Aperiodic m-bit words whose bits at positions a and b are both 0."""
    zero_mask = _pair_mask(m, a, b)
    return _scan_count(m, zero_mask, threads)


def count_periodic_with_00(m: int, a: int, b: int, threads: int = 1) -> int:
    """Periodic m-bit words with 0 bits at positions a and b."""
    return (1 << (m - 2)) - count_aperiodic_with_00(m, a, b, threads)


def count_aperiodic_mobius(m: int) -> int:
    """Aperiodic count through the divisor sum over block lengths.

    Independent of the exhaustive scan: sum of mu(m/d) * 2^d over the
    divisors d of m, where mu is the Moebius function.
    """
    _check_length(m)
    total = 0
    for d in range(1, m + 1):
        if m % d == 0:
            total += _mobius(m // d) * (1 << d)
    return total


def popcount_array(values: np.ndarray) -> np.ndarray:
    """Elementwise number of set bits."""
    return np.bitwise_count(values)


def _check_length(m: int) -> None:
    if not 1 <= m <= MAX_BITS:
        raise ValueError(f"word length must be in 1..{MAX_BITS}, got {m}")


def _pair_mask(m: int, a: int, b: int) -> int:
    _check_length(m)
    if not 1 <= a < b <= m:
        raise ValueError(f"positions must satisfy 1 <= a < b <= {m}, got ({a}, {b})")
    return (1 << (m - a)) | (1 << (m - b))


def _mobius(k: int) -> int:
    result = 1
    p = 2
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            result = -result
        p += 1
    if k > 1:
        result = -result
    return result


def _count_range(m: int, lo: int, hi: int, zero_mask: int) -> int:
    # uint64 keeps the pre-mask left shift (up to 2^47) exact.
    values = np.arange(lo, hi, dtype=np.uint64)
    if zero_mask:
        values = values[(values & np.uint64(zero_mask)) == 0]
    full = np.uint64((1 << m) - 1)
    periodic = np.zeros(values.shape, dtype=bool)
    for d in range(1, m):
        if m % d == 0:
            rotated = ((values << np.uint64(d)) | (values >> np.uint64(m - d))) & full
            periodic |= rotated == values
    return int(values.size - np.count_nonzero(periodic))


def _scan_count(m: int, zero_mask: int, threads: int) -> int:
    total = 1 << m
    if threads <= 1 or total < _CHUNK_FLOOR:
        return _count_range(m, 0, total, zero_mask)
    step = -(-total // threads)
    bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(lambda lh: _count_range(m, lh[0], lh[1], zero_mask), bounds)
    return sum(parts)
