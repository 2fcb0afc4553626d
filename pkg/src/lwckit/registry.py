"""Cipher registry: the single public construction path.

Identifiers are lowercase family-block-key strings ("present-64-80",
"simon-32-64", "speck-128-256"); custom Feistel definitions register
under "feistel-custom-<name>". Keys are big-endian byte strings.
"""
from __future__ import annotations

from typing import Callable

from . import feistel, present, simon, speck
from .core import CipherContext, CipherSpec
from .errors import KeyLengthMismatch, UnknownSpec

_BUILDERS: dict[str, tuple[CipherSpec, Callable[[CipherSpec, int], CipherContext]]] = {}


def _add(spec: CipherSpec, builder) -> None:
    _BUILDERS[spec.spec_id] = (spec, builder)


def _register_families() -> None:
    for key_bits in present.KEY_SIZES:
        spec = CipherSpec(
            spec_id=f"present-64-{key_bits}",
            family="present",
            block_bits=64,
            key_bits=key_bits,
            rounds=present.ROUNDS,
            constants={"sbox": present.SBOX, "permutation": present.PERM},
        )
        _add(spec, present.PresentContext)

    for (block, kbits), (n, m, rounds, zi) in simon.PARAMS.items():
        spec = CipherSpec(
            spec_id=f"simon-{block}-{kbits}",
            family="simon",
            block_bits=block,
            key_bits=kbits,
            rounds=rounds,
            constants={"word_bits": n, "key_words": m, "z_index": zi,
                       "rotations": simon.ROTATIONS},
        )
        _add(spec, simon.SimonContext)

    for (block, kbits), (n, m, rounds, alpha, beta) in speck.PARAMS.items():
        spec = CipherSpec(
            spec_id=f"speck-{block}-{kbits}",
            family="speck",
            block_bits=block,
            key_bits=kbits,
            rounds=rounds,
            constants={"word_bits": n, "key_words": m, "rotations": (alpha, beta)},
        )
        _add(spec, speck.SpeckContext)


def register_feistel(defn: feistel.FeistelDef) -> str:
    """Register a Feistel definition; returns its spec identifier."""
    spec_id = f"feistel-custom-{defn.name}"
    factory = feistel.build_feistel(defn)
    spec = CipherSpec(
        spec_id=spec_id,
        family="feistel-custom",
        block_bits=defn.block_bits,
        key_bits=defn.key_bits,
        rounds=defn.rounds,
        constants={"word_bits": defn.word_bits, "final_swap": defn.final_swap},
    )
    _add(spec, factory)
    return spec_id


_register_families()
for _defn in feistel.EXAMPLE_DEFS:
    register_feistel(_defn)


def list_specs() -> list[str]:
    """All registered identifiers, sorted."""
    return sorted(_BUILDERS)


def get_spec(spec_id: str) -> CipherSpec:
    try:
        return _BUILDERS[spec_id][0]
    except KeyError:
        raise UnknownSpec(f"unknown cipher spec {spec_id!r}") from None


def make_cipher(spec_id: str, key: bytes) -> CipherContext:
    """Construct an immutable keyed context for a registered spec.

    ``key`` must be exactly key_bits/8 big-endian bytes.
    """
    try:
        spec, builder = _BUILDERS[spec_id]
    except KeyError:
        raise UnknownSpec(f"unknown cipher spec {spec_id!r}") from None
    expected = spec.key_bits // 8
    if len(key) != expected:
        raise KeyLengthMismatch(
            f"{spec_id} needs a {expected}-byte key, got {len(key)} bytes"
        )
    return builder(spec, int.from_bytes(key, "big"))
