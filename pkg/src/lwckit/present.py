"""PRESENT-64/80 and PRESENT-64/128.

64-bit substitution-permutation cipher: 31 rounds of key addition,
nibble S-box layer and bit permutation, then a final key addition.
Bit 0 is the least significant bit throughout; the permutation sends
bit i to 16*i mod 63 (bit 63 fixed), which is the published layer
expressed in LSB-first numbering and is pinned by the test vectors.
"""
from __future__ import annotations

from .core import CipherContext, CipherSpec
from .errors import KeyLengthMismatch

SBOX = (0xC, 0x5, 0x6, 0xB, 0x9, 0x0, 0xA, 0xD, 0x3, 0xE, 0xF, 0x8, 0x4, 0x7, 0x1, 0x2)
INV_SBOX = tuple(SBOX.index(v) for v in range(16))

PERM = tuple((16 * i) % 63 for i in range(63)) + (63,)
INV_PERM = tuple(PERM.index(i) for i in range(64))

ROUNDS = 31
KEY_SIZES = (80, 128)

_MASK64 = (1 << 64) - 1


def sbox_layer(state: int) -> int:
    """Substitute each of the 16 nibbles through the S-box."""
    out = 0
    for i in range(0, 64, 4):
        out |= SBOX[(state >> i) & 0xF] << i
    return out


def inv_sbox_layer(state: int) -> int:
    out = 0
    for i in range(0, 64, 4):
        out |= INV_SBOX[(state >> i) & 0xF] << i
    return out


def p_layer(state: int) -> int:
    """Move bit i to position 16*i mod 63; bit 63 is a fixed point."""
    out = state & (1 << 63)
    for i in range(63):
        out |= ((state >> i) & 1) << PERM[i]
    return out


def inv_p_layer(state: int) -> int:
    out = state & (1 << 63)
    for i in range(63):
        out |= ((state >> PERM[i]) & 1) << i
    return out


def _build_sp_tables():
    # Per-nibble fusion of the S-box layer with the bit permutation:
    # table[i][v] is the spread of S(v) taken from nibble position i.
    tables = []
    for i in range(16):
        row = []
        for v in range(16):
            sv = SBOX[v]
            acc = 0
            for b in range(4):
                if (sv >> b) & 1:
                    acc |= 1 << PERM[4 * i + b]
            row.append(acc)
        tables.append(tuple(row))
    return tuple(tables)


def _build_ip_tables():
    # Spread tables for the inverse permutation alone (inverse S-box is
    # applied nibble-wise afterwards, since it needs gathered nibbles).
    tables = []
    for i in range(16):
        row = []
        for v in range(16):
            acc = 0
            for b in range(4):
                if (v >> b) & 1:
                    acc |= 1 << INV_PERM[4 * i + b]
            row.append(acc)
        tables.append(tuple(row))
    return tuple(tables)


_SP = _build_sp_tables()
_IP = _build_ip_tables()


def key_schedule(key: int, key_bits: int) -> tuple[int, ...]:
    """Expand an 80- or 128-bit key into 32 round keys.

    Round key r is the top 64 bits of the register; between
    extractions the register rotates left by 61, the top nibble(s) pass
    through the S-box and the round counter is XORed in.
    """
    if key_bits not in KEY_SIZES:
        raise KeyLengthMismatch(f"key size must be one of {KEY_SIZES}, got {key_bits}")
    if not 0 <= key < (1 << key_bits):
        raise KeyLengthMismatch(f"key does not fit {key_bits} bits")
    rks = []
    if key_bits == 80:
        mask = (1 << 80) - 1
        low76 = (1 << 76) - 1
        for r in range(1, ROUNDS + 2):
            rks.append(key >> 16)
            key = ((key << 61) | (key >> 19)) & mask
            key = (SBOX[key >> 76] << 76) | (key & low76)
            key ^= r << 15
    else:
        mask = (1 << 128) - 1
        low120 = (1 << 120) - 1
        for r in range(1, ROUNDS + 2):
            rks.append(key >> 64)
            key = ((key << 61) | (key >> 67)) & mask
            key = (SBOX[key >> 124] << 124) | (SBOX[(key >> 120) & 0xF] << 120) | (key & low120)
            key ^= r << 62
    return tuple(rks)


def encrypt(round_keys, block: int) -> int:
    """31 rounds of addRoundKey / sBoxLayer / pLayer, then whitening."""
    sp = _SP
    for i in range(ROUNDS):
        b = block ^ round_keys[i]
        block = (
            sp[0][b & 0xF] | sp[1][(b >> 4) & 0xF] | sp[2][(b >> 8) & 0xF]
            | sp[3][(b >> 12) & 0xF] | sp[4][(b >> 16) & 0xF] | sp[5][(b >> 20) & 0xF]
            | sp[6][(b >> 24) & 0xF] | sp[7][(b >> 28) & 0xF] | sp[8][(b >> 32) & 0xF]
            | sp[9][(b >> 36) & 0xF] | sp[10][(b >> 40) & 0xF] | sp[11][(b >> 44) & 0xF]
            | sp[12][(b >> 48) & 0xF] | sp[13][(b >> 52) & 0xF] | sp[14][(b >> 56) & 0xF]
            | sp[15][b >> 60]
        )
    return block ^ round_keys[ROUNDS]


def decrypt(round_keys, block: int) -> int:
    ip = _IP
    inv = INV_SBOX
    block ^= round_keys[ROUNDS]
    for i in range(ROUNDS - 1, -1, -1):
        b = (
            ip[0][block & 0xF] | ip[1][(block >> 4) & 0xF] | ip[2][(block >> 8) & 0xF]
            | ip[3][(block >> 12) & 0xF] | ip[4][(block >> 16) & 0xF] | ip[5][(block >> 20) & 0xF]
            | ip[6][(block >> 24) & 0xF] | ip[7][(block >> 28) & 0xF] | ip[8][(block >> 32) & 0xF]
            | ip[9][(block >> 36) & 0xF] | ip[10][(block >> 40) & 0xF] | ip[11][(block >> 44) & 0xF]
            | ip[12][(block >> 48) & 0xF] | ip[13][(block >> 52) & 0xF] | ip[14][(block >> 56) & 0xF]
            | ip[15][block >> 60]
        )
        block = (
            inv[b & 0xF] | inv[(b >> 4) & 0xF] << 4 | inv[(b >> 8) & 0xF] << 8
            | inv[(b >> 12) & 0xF] << 12 | inv[(b >> 16) & 0xF] << 16
            | inv[(b >> 20) & 0xF] << 20 | inv[(b >> 24) & 0xF] << 24
            | inv[(b >> 28) & 0xF] << 28 | inv[(b >> 32) & 0xF] << 32
            | inv[(b >> 36) & 0xF] << 36 | inv[(b >> 40) & 0xF] << 40
            | inv[(b >> 44) & 0xF] << 44 | inv[(b >> 48) & 0xF] << 48
            | inv[(b >> 52) & 0xF] << 52 | inv[(b >> 56) & 0xF] << 56
            | inv[b >> 60] << 60
        ) ^ round_keys[i]
    return block


class PresentContext(CipherContext):
    """Keyed PRESENT instance (80- or 128-bit key)."""

    __slots__ = ()

    def __init__(self, spec: CipherSpec, key: int):
        super().__init__(spec, key_schedule(key, spec.key_bits))

    def encrypt_block(self, block: int) -> int:
        self._check_block(block)
        return encrypt(self.round_keys, block)

    def decrypt_block(self, block: int) -> int:
        self._check_block(block)
        return decrypt(self.round_keys, block)

    def encrypt_many(self, blocks) -> list[int]:
        rk = self.round_keys
        return [encrypt(rk, b) for b in blocks]

    def decrypt_many(self, blocks) -> list[int]:
        rk = self.round_keys
        return [decrypt(rk, b) for b in blocks]

    def _round_key_bits(self) -> int:
        return 64

    def state_items(self) -> dict[str, int]:
        items = super().state_items()
        items["sbox"] = 16
        items["inv_sbox"] = 16
        return items
