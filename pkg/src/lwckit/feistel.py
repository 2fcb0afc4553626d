"""Generic balanced Feistel construction kit.

A definition supplies a round function F(right_word, round_key) and a
key schedule; decryption is derived from the structure, so F need not
be invertible (or even bijective). Round i maps (L, R) to
(R, L XOR F(R, k_i)); with ``final_swap`` an extra half-swap is applied
after the last round.

Three example instantiations ship with the kit so the analysis and
benchmark pipelines have Feistel targets to chew on. They are demo
constructions assembled for this toolkit; none carries any security
claim and the rotate/XOR one is outright linear.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .core import CipherContext, CipherSpec
from .errors import InvalidDefinition, KeyLengthMismatch
from .present import SBOX as PRESENT_SBOX
from .words import rotl_int
from . import simon as _simon


@dataclass(frozen=True)
class FeistelDef:
    """Everything needed to build a balanced Feistel cipher.

    round_function: (right word, round key) -> word, pure, total.
    schedule: master key int -> sequence of ``rounds`` round-key words.
    const_bytes: footprint of any constant tables F relies on, for the
    memory accounting.
    """

    name: str
    word_bits: int
    rounds: int
    key_bits: int
    round_function: Callable[[int, int], int] = field(repr=False)
    schedule: Callable[[int], Sequence[int]] = field(repr=False)
    final_swap: bool = False
    const_bytes: int = 0

    @property
    def block_bits(self) -> int:
        return 2 * self.word_bits


def _validate(defn: FeistelDef) -> None:
    if defn.rounds <= 0:
        raise InvalidDefinition("rounds must be positive")
    if defn.word_bits <= 0:
        raise InvalidDefinition("word_bits must be positive")
    limit = 1 << defn.word_bits
    try:
        probe_keys = list(defn.schedule(0))
    except Exception as exc:
        raise InvalidDefinition(f"schedule failed on probe key: {exc}") from exc
    if len(probe_keys) != defn.rounds:
        raise InvalidDefinition(
            f"schedule produced {len(probe_keys)} keys for {defn.rounds} rounds"
        )
    if any(not 0 <= k < limit for k in probe_keys):
        raise InvalidDefinition("schedule output exceeds the word width")
    probe = defn.round_function(limit - 1, probe_keys[0])
    if not 0 <= probe < limit:
        raise InvalidDefinition("round function output exceeds the word width")


class FeistelContext(CipherContext):
    """Keyed instance of a FeistelDef."""

    __slots__ = ("defn",)

    def __init__(self, spec: CipherSpec, defn: FeistelDef, key: int):
        rks = tuple(defn.schedule(key))
        limit = 1 << defn.word_bits
        if len(rks) != defn.rounds or any(not 0 <= k < limit for k in rks):
            raise InvalidDefinition("schedule output does not fit the definition")
        super().__init__(spec, rks)
        object.__setattr__(self, "defn", defn)

    def encrypt_block(self, block: int) -> int:
        self._check_block(block)
        d = self.defn
        n = d.word_bits
        mask = (1 << n) - 1
        f = d.round_function
        left, right = block >> n, block & mask
        for k in self.round_keys:
            left, right = right, left ^ f(right, k)
        if d.final_swap:
            left, right = right, left
        return (left << n) | right

    def decrypt_block(self, block: int) -> int:
        self._check_block(block)
        d = self.defn
        n = d.word_bits
        mask = (1 << n) - 1
        f = d.round_function
        left, right = block >> n, block & mask
        if d.final_swap:
            left, right = right, left
        for k in reversed(self.round_keys):
            left, right = right ^ f(left, k), left
        return (left << n) | right

    def _round_key_bits(self) -> int:
        # round keys are word-width but may not be byte aligned for toys
        return self.defn.word_bits

    def state_items(self) -> dict[str, int]:
        rk_bytes = len(self.round_keys) * max(1, self.defn.word_bits // 8)
        items = {
            "round_keys": rk_bytes,
            "working_block": max(1, self.spec.block_bits // 8),
        }
        if self.defn.const_bytes:
            items["round_function_tables"] = self.defn.const_bytes
        return items


def build_feistel(defn: FeistelDef) -> Callable[[CipherSpec, int], FeistelContext]:
    """Validate a definition and return a (spec, key int) -> context factory."""
    _validate(defn)

    def factory(spec: CipherSpec, key: int) -> FeistelContext:
        return FeistelContext(spec, defn, key)

    return factory


# ---------------------------------------------------------------------------
# Example instantiations


def _two_word_schedule(word_bits: int, rounds: int):
    # k0, k1 = master words; k_i = (k_{i-1} <<< 3) ^ k_{i-2} ^ i
    mask = (1 << word_bits) - 1

    def schedule(key: int) -> list[int]:
        keys = [key & mask, (key >> word_bits) & mask]
        for i in range(2, rounds):
            keys.append(rotl_int(keys[i - 1], 3, word_bits) ^ keys[i - 2] ^ i)
        return keys[:rounds]

    return schedule


def _rotxor_f(right: int, key: int) -> int:
    # linear demo round: two rotations XORed under the key (16-bit words)
    return rotl_int(right, 1, 16) ^ rotl_int(right, 8, 16) ^ key


def _sbox_pair(x: int) -> int:
    return (PRESENT_SBOX[x >> 4] << 4) | PRESENT_SBOX[x & 0xF]


def sbox_rotate_g(x: int) -> int:
    """8-bit nonlinear core of the S-box demo round: S-box pair, <<< 2."""
    return rotl_int(_sbox_pair(x), 2, 8)


def _sbox_f(right: int, key: int) -> int:
    return sbox_rotate_g(right ^ key)


def _simon_f(right: int, key: int) -> int:
    return _simon.feistel_function(right, 32) ^ key


def _simon_kit_schedule(key: int) -> tuple[int, ...]:
    return _simon.key_schedule(key, 64, 128)


ROTXOR32 = FeistelDef(
    name="rotxor32",
    word_bits=16,
    rounds=16,
    key_bits=32,
    round_function=_rotxor_f,
    schedule=_two_word_schedule(16, 16),
)

SBOX16 = FeistelDef(
    name="sbox16",
    word_bits=8,
    rounds=8,
    key_bits=16,
    round_function=_sbox_f,
    schedule=_two_word_schedule(8, 8),
    const_bytes=16,
)

# SIMON-64/128 expressed through the kit. The kit's fixed round shape
# mirrors SIMON's (x, y) update, so with the trailing swap the two
# agree up to a half-word swap of the block:
#   kit.encrypt(swap_halves(b)) == native_simon.encrypt(b)
SIMON64_VIA_KIT = FeistelDef(
    name="simon64",
    word_bits=32,
    rounds=44,
    key_bits=128,
    round_function=_simon_f,
    schedule=_simon_kit_schedule,
    final_swap=True,
    const_bytes=8,
)

EXAMPLE_DEFS = (ROTXOR32, SBOX16, SIMON64_VIA_KIT)
