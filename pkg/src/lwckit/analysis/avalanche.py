"""Empirical avalanche measurement.

Each trial flips one random plaintext bit and records which ciphertext
bits changed. A full-strength block cipher should flip about half the
output bits; the per-bit frequencies expose positional weaknesses.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from ..registry import get_spec, make_cipher


@dataclass
class AvalancheStats:
    label: str
    trials: int
    block_bits: int
    mean_flip_ratio: float
    per_bit_flip_freq: list[float]

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "trials": self.trials,
            "block_bits": self.block_bits,
            "mean_flip_ratio": self.mean_flip_ratio,
            "per_bit_flip_freq": self.per_bit_flip_freq,
        }


def avalanche_test(target, trials: int, seed: int) -> AvalancheStats:
    """Single-bit avalanche statistics, deterministic under ``seed``.

    ``target`` is either a registered spec id (a fresh random key is
    drawn per trial) or a ready object exposing ``block_bits`` and
    ``encrypt_block`` (used as-is, e.g. a fixed context or a stub).
    """
    if trials < 100:
        raise ValueError("need at least 100 trials for meaningful statistics")
    rng = random.Random(seed)

    if isinstance(target, str):
        spec = get_spec(target)
        width = spec.block_bits
        key_bytes = spec.key_bits // 8
        label = target

        def next_cipher():
            return make_cipher(target, rng.getrandbits(spec.key_bits).to_bytes(key_bytes, "big"))
    else:
        width = target.block_bits
        label = getattr(getattr(target, "spec", None), "spec_id", None) or type(target).__name__

        def next_cipher():
            return target

    counts = [0] * width
    total = 0
    for _ in range(trials):
        ctx = next_cipher()
        pt = rng.getrandbits(width)
        flip = rng.randrange(width)
        diff = ctx.encrypt_block(pt) ^ ctx.encrypt_block(pt ^ (1 << flip))
        total += diff.bit_count()
        while diff:
            low = diff & -diff
            counts[low.bit_length() - 1] += 1
            diff ^= low
    return AvalancheStats(
        label=label,
        trials=trials,
        block_bits=width,
        mean_flip_ratio=total / (trials * width),
        per_bit_flip_freq=[c / trials for c in counts],
    )
