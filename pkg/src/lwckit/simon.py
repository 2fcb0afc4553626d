"""SIMON family: all ten published (block, key) parameter sets.

Round function f(x) = (x <<< 1  AND  x <<< 8) XOR (x <<< 2), Feistel
update (x, y) -> (y XOR f(x) XOR k, x). Key expansion uses right
rotations by 3 and 1, the constant 2^n - 4 and one of five binary
constant sequences, all locked by the published test vectors.
"""
from __future__ import annotations

from .core import CipherContext, CipherSpec
from .errors import KeyLengthMismatch, WidthMismatch
from .words import Word, rotl_int, rotr_int

Z_SEQUENCES = (
    "11111010001001010110000111001101111101000100101011000011100110",
    "10001110111110010011000010110101000111011111001001100001011010",
    "10101111011100000011010010011000101000010001111110010110110011",
    "11011011101011000110010111100000010010001010011100110100001111",
    "11010001111001101011011000100000010111000011001010010011101111",
)

# (block_bits, key_bits) -> (word_bits, key_words, rounds, z_index)
PARAMS = {
    (32, 64): (16, 4, 32, 0),
    (48, 72): (24, 3, 36, 0),
    (48, 96): (24, 4, 36, 1),
    (64, 96): (32, 3, 42, 2),
    (64, 128): (32, 4, 44, 3),
    (96, 96): (48, 2, 52, 2),
    (96, 144): (48, 3, 54, 3),
    (128, 128): (64, 2, 68, 2),
    (128, 192): (64, 3, 69, 3),
    (128, 256): (64, 4, 72, 4),
}

ROTATIONS = (1, 8, 2)


def feistel_function(x: int, word_bits: int) -> int:
    """(x <<< 1 AND x <<< 8) XOR (x <<< 2) at the given width."""
    return (rotl_int(x, 1, word_bits) & rotl_int(x, 8, word_bits)) ^ rotl_int(x, 2, word_bits)


def round_forward(x: Word, y: Word, k: Word) -> tuple[Word, Word]:
    """One SIMON round on Words: (x, y) -> (y ^ f(x) ^ k, x)."""
    if not (x.width == y.width == k.width):
        raise WidthMismatch("round operands must share one width")
    n = x.width
    return Word(y.value ^ feistel_function(x.value, n) ^ k.value, n), x


def round_inverse(x: Word, y: Word, k: Word) -> tuple[Word, Word]:
    if not (x.width == y.width == k.width):
        raise WidthMismatch("round operands must share one width")
    n = x.width
    return y, Word(x.value ^ feistel_function(y.value, n) ^ k.value, n)


def key_schedule(key: int, block_bits: int, key_bits: int) -> tuple[int, ...]:
    """Expand a master key into the full list of round keys.

    The first ``m`` round keys are the master key words, low word
    first; the rest follow the published recurrence.
    """
    n, m, rounds, zi = PARAMS[(block_bits, key_bits)]
    if not 0 <= key < (1 << key_bits):
        raise KeyLengthMismatch(f"key does not fit {key_bits} bits")
    mask = (1 << n) - 1
    k = [(key >> (n * i)) & mask for i in range(m)]
    z = Z_SEQUENCES[zi]
    for i in range(m, rounds):
        tmp = rotr_int(k[i - 1], 3, n)
        if m == 4:
            tmp ^= k[i - 3]
        tmp ^= rotr_int(tmp, 1, n)
        k.append((~k[i - m] & mask) ^ tmp ^ int(z[(i - m) % 62]) ^ 3)
    return tuple(k)


def encrypt(round_keys, x: int, y: int, word_bits: int) -> tuple[int, int]:
    n = word_bits
    mask = (1 << n) - 1
    r1, r8, r2 = n - 1, n - 8, n - 2
    for k in round_keys:
        f = (((x << 1) | (x >> r1)) & ((x << 8) | (x >> r8)) ^ ((x << 2) | (x >> r2))) & mask
        x, y = y ^ f ^ k, x
    return x, y


def decrypt(round_keys, x: int, y: int, word_bits: int) -> tuple[int, int]:
    n = word_bits
    mask = (1 << n) - 1
    r1, r8, r2 = n - 1, n - 8, n - 2
    for k in reversed(round_keys):
        f = (((y << 1) | (y >> r1)) & ((y << 8) | (y >> r8)) ^ ((y << 2) | (y >> r2))) & mask
        x, y = y, x ^ f ^ k
    return x, y


class SimonContext(CipherContext):
    """Keyed SIMON instance for one published parameter set."""

    __slots__ = ("word_bits",)

    def __init__(self, spec: CipherSpec, key: int):
        n = spec.block_bits // 2
        super().__init__(spec, key_schedule(key, spec.block_bits, spec.key_bits))
        object.__setattr__(self, "word_bits", n)

    def encrypt_block(self, block: int) -> int:
        self._check_block(block)
        n = self.word_bits
        x, y = encrypt(self.round_keys, block >> n, block & ((1 << n) - 1), n)
        return (x << n) | y

    def decrypt_block(self, block: int) -> int:
        self._check_block(block)
        n = self.word_bits
        x, y = decrypt(self.round_keys, block >> n, block & ((1 << n) - 1), n)
        return (x << n) | y

    def encrypt_many(self, blocks) -> list[int]:
        n = self.word_bits
        mask = (1 << n) - 1
        r1, r8, r2 = n - 1, n - 8, n - 2
        rk = self.round_keys
        out = []
        append = out.append
        for block in blocks:
            x, y = block >> n, block & mask
            for k in rk:
                f = (((x << 1) | (x >> r1)) & ((x << 8) | (x >> r8)) ^ ((x << 2) | (x >> r2))) & mask
                x, y = y ^ f ^ k, x
            append((x << n) | y)
        return out

    def _round_key_bits(self) -> int:
        return self.word_bits

    def state_items(self) -> dict[str, int]:
        items = super().state_items()
        items["z_sequence"] = 8  # 62 bits, stored byte-aligned
        return items
