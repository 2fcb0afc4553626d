"""Cipher parameter records and the keyed-context base class."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import BlockWidthMismatch


@dataclass(frozen=True)
class CipherSpec:
    """Static parameters of one cipher family member."""

    spec_id: str
    family: str
    block_bits: int
    key_bits: int
    rounds: int
    constants: Mapping[str, object] = field(default_factory=dict)


class CipherContext:
    """An immutable keyed cipher instance.

    Subclasses hold expanded round keys and implement the block
    transforms. Contexts are safe to share between threads: all state is
    fixed at construction and every operation is a pure function.
    """

    __slots__ = ("spec", "round_keys")

    def __init__(self, spec: CipherSpec, round_keys: Iterable[int]):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "round_keys", tuple(round_keys))

    def __setattr__(self, name, value):
        raise AttributeError("CipherContext is immutable")

    @property
    def block_bits(self) -> int:
        return self.spec.block_bits

    @property
    def block_bytes(self) -> int:
        return self.spec.block_bits // 8

    def _check_block(self, block: int) -> None:
        if not 0 <= block < (1 << self.spec.block_bits):
            raise BlockWidthMismatch(
                f"block does not fit {self.spec.block_bits} bits ({self.spec.spec_id})"
            )

    def encrypt_block(self, block: int) -> int:
        raise NotImplementedError

    def decrypt_block(self, block: int) -> int:
        raise NotImplementedError

    def encrypt_many(self, blocks: Iterable[int]) -> list[int]:
        """Encrypt a batch; families override with a tighter loop."""
        enc = self.encrypt_block
        return [enc(b) for b in blocks]

    def decrypt_many(self, blocks: Iterable[int]) -> list[int]:
        dec = self.decrypt_block
        return [dec(b) for b in blocks]

    def state_items(self) -> dict[str, int]:
        """Persistent state, in bytes, item by item.

        Counts the canonical representation (round keys, published
        constant tables, one working block), never derived acceleration
        tables, so the accounting is machine-independent.
        """
        rk_bytes = len(self.round_keys) * (self._round_key_bits() // 8)
        return {
            "round_keys": rk_bytes,
            "working_block": self.block_bytes,
        }

    def _round_key_bits(self) -> int:
        raise NotImplementedError
