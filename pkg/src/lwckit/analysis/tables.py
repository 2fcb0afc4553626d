"""Difference distribution and linear approximation tables."""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

from ..present import SBOX as PRESENT_SBOX

NAMED_SBOXES = {"present": PRESENT_SBOX}

MAX_BITS = 8


@dataclass
class AnalysisTable:
    """2^n x 2^n integer matrix over an n-bit S-box.

    For a DDT, entries[a][b] counts inputs x with S(x) ^ S(x ^ a) == b.
    For a LAT, entries[a][b] = #{x : parity(a & x) == parity(b & S(x))}
    - 2^(n-1), so entries lie in [-2^(n-1), 2^(n-1)].
    """

    kind: str  # "DDT" or "LAT"
    n: int
    entries: list[list[int]]
    sbox_bijective: bool = True

    def max_nontrivial(self) -> int:
        """Largest |entry| outside the forced (0, 0) cell / zero row."""
        size = 1 << self.n
        best = 0
        for a in range(size):
            for b in range(size):
                if a == 0 and (self.kind == "DDT" or b == 0):
                    continue
                best = max(best, abs(self.entries[a][b]))
        return best

    def to_csv(self) -> str:
        return "\n".join(",".join(str(v) for v in row) for row in self.entries) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "sbox_bijective": self.sbox_bijective,
            "entries": self.entries,
        }


def _check_sbox(sbox: Sequence[int]) -> tuple[int, bool]:
    size = len(sbox)
    n = size.bit_length() - 1
    if size != (1 << n) or n < 1:
        raise ValueError("S-box length must be a power of two >= 2")
    if n > MAX_BITS:
        raise ValueError(f"S-box width above {MAX_BITS} bits is not supported")
    if any(not 0 <= v < size for v in sbox):
        raise ValueError("S-box values must lie in [0, 2^n)")
    bijective = len(set(sbox)) == size
    return n, bijective


def compute_ddt(sbox: Sequence[int]) -> AnalysisTable:
    """Exhaustive difference distribution table.

    A non-bijective table is still well defined; it is flagged on the
    result and a warning is emitted.
    """
    n, bijective = _check_sbox(sbox)
    if not bijective:
        warnings.warn("S-box is not bijective; DDT computed anyway", stacklevel=2)
    size = 1 << n
    entries = [[0] * size for _ in range(size)]
    for a in range(size):
        row = entries[a]
        for x in range(size):
            row[sbox[x] ^ sbox[x ^ a]] += 1
    return AnalysisTable("DDT", n, entries, bijective)


def compute_lat(sbox: Sequence[int]) -> AnalysisTable:
    """Linear approximation table via a Walsh transform per output mask.

    entries[a][b] = #{x : a.x == b.S(x)} - 2^(n-1); the Walsh sum
    W(a,b) = sum_x (-1)^(a.x ^ b.S(x)) relates as entry = W / 2.
    """
    n, bijective = _check_sbox(sbox)
    size = 1 << n
    entries = [[0] * size for _ in range(size)]
    for b in range(size):
        # signs of b.S(x), then an in-place Walsh-Hadamard transform
        col = [1 if (b & sbox[x]).bit_count() % 2 == 0 else -1 for x in range(size)]
        h = 1
        while h < size:
            for i in range(0, size, h * 2):
                for j in range(i, i + h):
                    u, v = col[j], col[j + h]
                    col[j], col[j + h] = u + v, u - v
            h *= 2
        for a in range(size):
            entries[a][b] = col[a] // 2
    return AnalysisTable("LAT", n, entries, bijective)
