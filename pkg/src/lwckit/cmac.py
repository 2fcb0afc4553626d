"""CMAC over any registered 64- or 128-bit block cipher.

Subkeys come from doubling E_K(0) in GF(2^n) with the width's standard
reduction constant (0x1B for 64-bit blocks, 0x87 for 128-bit). The
final message block is XORed with K1 when complete, or padded with
0x80 00.. and XORed with K2 otherwise; the tag is the last chaining
value, one full block long.
"""
from __future__ import annotations

import hmac

from .core import CipherContext
from .errors import InvalidTagLength, UnsupportedBlockWidth

DOUBLING_CONSTANTS = {64: 0x1B, 128: 0x87}


def doubled(value: int, block_bits: int) -> int:
    """Multiply by x in GF(2^block_bits) under the standard polynomial."""
    rb = DOUBLING_CONSTANTS[block_bits]
    top = 1 << (block_bits - 1)
    out = (value << 1) & ((1 << block_bits) - 1)
    if value & top:
        out ^= rb
    return out


def cmac_subkeys(ctx: CipherContext) -> tuple[int, int]:
    """(K1, K2) derived once from E_K(0) by repeated doubling."""
    bits = ctx.block_bits
    if bits not in DOUBLING_CONSTANTS:
        raise UnsupportedBlockWidth(f"CMAC needs a 64- or 128-bit block, got {bits}")
    l = ctx.encrypt_block(0)
    k1 = doubled(l, bits)
    k2 = doubled(k1, bits)
    return k1, k2


class MacContext:
    """Immutable CMAC instance bound to one keyed cipher."""

    __slots__ = ("cipher", "k1", "k2")

    def __init__(self, cipher: CipherContext):
        k1, k2 = cmac_subkeys(cipher)
        object.__setattr__(self, "cipher", cipher)
        object.__setattr__(self, "k1", k1)
        object.__setattr__(self, "k2", k2)

    def __setattr__(self, name, value):
        raise AttributeError("MacContext is immutable")

    @property
    def block_bytes(self) -> int:
        return self.cipher.block_bytes


def cmac_tag(mac: MacContext, message: bytes) -> bytes:
    """Authentication tag for a message of any length, empty included."""
    nb = mac.block_bytes
    enc = mac.cipher.encrypt_block
    # all blocks before the last run through plain CBC chaining
    n_full = max(1, -(-len(message) // nb))
    chain = 0
    for i in range(n_full - 1):
        block = int.from_bytes(message[i * nb:(i + 1) * nb], "big")
        chain = enc(chain ^ block)
    last = message[(n_full - 1) * nb:]
    if len(last) == nb:
        final = int.from_bytes(last, "big") ^ mac.k1
    else:
        padded = last + b"\x80" + b"\x00" * (nb - len(last) - 1)
        final = int.from_bytes(padded, "big") ^ mac.k2
    tag = enc(chain ^ final)
    return tag.to_bytes(nb, "big")


def cmac_verify(mac: MacContext, message: bytes, tag: bytes) -> bool:
    """Recompute and compare; True iff the tag is exactly right."""
    if len(tag) != mac.block_bytes:
        raise InvalidTagLength(f"tag must be {mac.block_bytes} bytes, got {len(tag)}")
    return hmac.compare_digest(cmac_tag(mac, message), tag)


def memory_report(mac: MacContext):
    """Persistent MAC state: round keys, both subkeys, chaining block."""
    from .bench import MemoryReport  # local import keeps module deps one-way

    ctx = mac.cipher
    nb = ctx.block_bytes
    items = {
        "round_keys": ctx.state_items()["round_keys"],
        "subkeys": 2 * nb,
        "chaining_block": nb,
    }
    return MemoryReport(label=f"cmac-{ctx.spec.spec_id}", items=items)
