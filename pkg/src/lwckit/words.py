"""Fixed-width word arithmetic and bit permutations.

Cipher cores work on bare ints masked to their width; ``Word`` is the
value type for the public word-level operations.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NonBijectivePermutation, WidthMismatch

# Word sizes of the implemented cipher families. The Feistel kit and the
# reduced-width analysis models also use 4- and 8-bit toy words, so Word
# itself only requires 1..64.
FAMILY_WORD_WIDTHS = (16, 24, 32, 48, 64)


@dataclass(frozen=True)
class Word:
    """An unsigned integer constrained to a fixed bit width."""

    value: int
    width: int

    def __post_init__(self):
        if not 1 <= self.width <= 64:
            raise ValueError(f"unsupported word width {self.width}")
        if not 0 <= self.value < (1 << self.width):
            raise ValueError(f"value {self.value:#x} does not fit {self.width} bits")

    def __xor__(self, other: "Word") -> "Word":
        _check_same_width(self, other)
        return Word(self.value ^ other.value, self.width)

    def __and__(self, other: "Word") -> "Word":
        _check_same_width(self, other)
        return Word(self.value & other.value, self.width)

    def __or__(self, other: "Word") -> "Word":
        _check_same_width(self, other)
        return Word(self.value | other.value, self.width)

    def __invert__(self) -> "Word":
        return Word(self.value ^ ((1 << self.width) - 1), self.width)

    def add(self, other: "Word") -> "Word":
        """Wrapping addition at word width."""
        _check_same_width(self, other)
        return Word((self.value + other.value) & ((1 << self.width) - 1), self.width)

    def sub(self, other: "Word") -> "Word":
        """Wrapping subtraction at word width."""
        _check_same_width(self, other)
        return Word((self.value - other.value) & ((1 << self.width) - 1), self.width)


def _check_same_width(a: Word, b: Word) -> None:
    if a.width != b.width:
        raise WidthMismatch(f"widths differ: {a.width} vs {b.width}")


def rotl_int(x: int, r: int, width: int) -> int:
    """Circular left rotation of a bare int, ``r`` reduced mod width."""
    r %= width
    if r == 0:
        return x
    mask = (1 << width) - 1
    return ((x << r) | (x >> (width - r))) & mask


def rotr_int(x: int, r: int, width: int) -> int:
    """Circular right rotation of a bare int, ``r`` reduced mod width."""
    r %= width
    if r == 0:
        return x
    mask = (1 << width) - 1
    return ((x >> r) | (x << (width - r))) & mask


def rotl(w: Word, r: int) -> Word:
    """Rotate ``w`` left by ``r`` positions (``r >= 0``, reduced mod width)."""
    if r < 0:
        raise ValueError("rotation count must be non-negative")
    return Word(rotl_int(w.value, r, w.width), w.width)


def rotr(w: Word, r: int) -> Word:
    """Rotate ``w`` right by ``r`` positions (``r >= 0``, reduced mod width)."""
    if r < 0:
        raise ValueError("rotation count must be non-negative")
    return Word(rotr_int(w.value, r, w.width), w.width)


def check_permutation(perm: Sequence[int]) -> None:
    """Raise NonBijectivePermutation unless perm is a bijection on [0, len)."""
    n = len(perm)
    seen = [False] * n
    for target in perm:
        if not 0 <= target < n or seen[target]:
            raise NonBijectivePermutation(f"table is not a bijection on [0, {n})")
        seen[target] = True


def permute_bits(value: int, perm: Sequence[int]) -> int:
    """Move bit i of ``value`` to position ``perm[i]``.

    ``perm`` must be a bijection on [0, len(perm)); the block width is
    len(perm) and bit 0 is the least significant bit.
    """
    check_permutation(perm)
    width = len(perm)
    if not 0 <= value < (1 << width):
        raise ValueError(f"value does not fit {width} bits")
    out = 0
    for i, target in enumerate(perm):
        out |= ((value >> i) & 1) << target
    return out


def invert_permutation(perm: Sequence[int]) -> list[int]:
    """Inverse table of a bit permutation."""
    check_permutation(perm)
    inv = [0] * len(perm)
    for i, target in enumerate(perm):
        inv[target] = i
    return inv


def int_from_hex(text: str, bits: int) -> int:
    """Parse big-endian hex of exactly ``bits`` bits (case-insensitive)."""
    s = text.strip().lower()
    if s.startswith("0x"):
        s = s[2:]
    if len(s) != bits // 4:
        raise ValueError(f"expected {bits // 4} hex digits, got {len(s)}")
    return int(s, 16)


def hex_from_int(value: int, bits: int) -> str:
    """Uppercase big-endian hex of ``value`` padded to ``bits`` bits."""
    return f"{value:0{bits // 4}X}"


def int_from_bytes(data: bytes) -> int:
    return int.from_bytes(data, "big")


def bytes_from_int(value: int, bits: int) -> bytes:
    return value.to_bytes(bits // 8, "big")
