"""SPECK family: all ten published (block, key) parameter sets.

ARX round: x' = (x >>> alpha) + y XOR k, y' = (y <<< beta) XOR x', with
(alpha, beta) = (7, 2) for 16-bit words and (8, 3) otherwise. The key
schedule runs the round function over the key words with a counter.
"""
from __future__ import annotations

from .core import CipherContext, CipherSpec
from .errors import KeyLengthMismatch, WidthMismatch
from .words import Word, rotl_int, rotr_int

# (block_bits, key_bits) -> (word_bits, key_words, rounds, alpha, beta)
PARAMS = {
    (32, 64): (16, 4, 22, 7, 2),
    (48, 72): (24, 3, 22, 8, 3),
    (48, 96): (24, 4, 23, 8, 3),
    (64, 96): (32, 3, 26, 8, 3),
    (64, 128): (32, 4, 27, 8, 3),
    (96, 96): (48, 2, 28, 8, 3),
    (96, 144): (48, 3, 29, 8, 3),
    (128, 128): (64, 2, 32, 8, 3),
    (128, 192): (64, 3, 33, 8, 3),
    (128, 256): (64, 4, 34, 8, 3),
}


def rotations(word_bits: int) -> tuple[int, int]:
    return (7, 2) if word_bits == 16 else (8, 3)


def round_forward(x: Word, y: Word, k: Word) -> tuple[Word, Word]:
    """One SPECK round on Words."""
    if not (x.width == y.width == k.width):
        raise WidthMismatch("round operands must share one width")
    n = x.width
    alpha, beta = rotations(n)
    mask = (1 << n) - 1
    nx = ((rotr_int(x.value, alpha, n) + y.value) & mask) ^ k.value
    ny = rotl_int(y.value, beta, n) ^ nx
    return Word(nx, n), Word(ny, n)


def round_inverse(x: Word, y: Word, k: Word) -> tuple[Word, Word]:
    if not (x.width == y.width == k.width):
        raise WidthMismatch("round operands must share one width")
    n = x.width
    alpha, beta = rotations(n)
    mask = (1 << n) - 1
    py = rotr_int(x.value ^ y.value, beta, n)
    px = rotl_int(((x.value ^ k.value) - py) & mask, alpha, n)
    return Word(px, n), Word(py, n)


def key_schedule(key: int, block_bits: int, key_bits: int) -> tuple[int, ...]:
    """Expand a master key; round key 0 is the low master-key word."""
    n, m, rounds, alpha, beta = PARAMS[(block_bits, key_bits)]
    if not 0 <= key < (1 << key_bits):
        raise KeyLengthMismatch(f"key does not fit {key_bits} bits")
    mask = (1 << n) - 1
    words = [(key >> (n * i)) & mask for i in range(m)]
    k = [words[0]]
    l = words[1:]
    for i in range(rounds - 1):
        nl = ((rotr_int(l[i], alpha, n) + k[i]) & mask) ^ i
        l.append(nl)
        k.append(rotl_int(k[i], beta, n) ^ nl)
    return tuple(k)


def encrypt(round_keys, x: int, y: int, word_bits: int, alpha: int, beta: int) -> tuple[int, int]:
    n = word_bits
    mask = (1 << n) - 1
    ra, rb = n - alpha, n - beta
    for k in round_keys:
        x = ((((x >> alpha) | (x << ra)) & mask) + y & mask) ^ k
        y = (((y << beta) | (y >> rb)) & mask) ^ x
    return x, y


def decrypt(round_keys, x: int, y: int, word_bits: int, alpha: int, beta: int) -> tuple[int, int]:
    n = word_bits
    mask = (1 << n) - 1
    ra, rb = n - alpha, n - beta
    for k in reversed(round_keys):
        y = x ^ y
        y = ((y >> beta) | (y << rb)) & mask
        x = ((x ^ k) - y) & mask
        x = ((x << alpha) | (x >> ra)) & mask
    return x, y


class SpeckContext(CipherContext):
    """Keyed SPECK instance for one published parameter set."""

    __slots__ = ("word_bits", "alpha", "beta")

    def __init__(self, spec: CipherSpec, key: int):
        n = spec.block_bits // 2
        super().__init__(spec, key_schedule(key, spec.block_bits, spec.key_bits))
        object.__setattr__(self, "word_bits", n)
        alpha, beta = rotations(n)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    def encrypt_block(self, block: int) -> int:
        self._check_block(block)
        n = self.word_bits
        x, y = encrypt(self.round_keys, block >> n, block & ((1 << n) - 1), n, self.alpha, self.beta)
        return (x << n) | y

    def decrypt_block(self, block: int) -> int:
        self._check_block(block)
        n = self.word_bits
        x, y = decrypt(self.round_keys, block >> n, block & ((1 << n) - 1), n, self.alpha, self.beta)
        return (x << n) | y

    def encrypt_many(self, blocks) -> list[int]:
        n = self.word_bits
        mask = (1 << n) - 1
        alpha, beta = self.alpha, self.beta
        ra, rb = n - alpha, n - beta
        rk = self.round_keys
        out = []
        append = out.append
        for block in blocks:
            x, y = block >> n, block & mask
            for k in rk:
                x = ((((x >> alpha) | (x << ra)) & mask) + y & mask) ^ k
                y = (((y << beta) | (y >> rb)) & mask) ^ x
            append((x << n) | y)
        return out

    def _round_key_bits(self) -> int:
        return self.word_bits

    # no constant tables beyond the round keys
