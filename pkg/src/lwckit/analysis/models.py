"""Round-transition models for trail search.

Every bundled model is deliberately small enough that exhaustive
enumeration of its transitions stays cheap, so branch-and-bound output
can be checked against brute force exactly:

* ``present8``    - 8-bit substitution-permutation state, two 4-bit
                    S-boxes and a bit spread (differential + linear).
* ``simon-toy8``  - width-reduced AND-rotation round on two 4-bit
                    words; transition weights follow the rotation-set
                    difference model (differential only).
* ``feistel-toy16`` - the 16-bit S-box demo Feistel; transitions come
                    straight from the round core's DDT/LAT.

Transition values are exact fractions: probabilities in (0, 1] for
differential models, signed correlations in [-1, 1] for linear ones.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator

from ..feistel import sbox_rotate_g
from ..present import SBOX as PRESENT_SBOX
from ..words import rotl_int
from .tables import compute_ddt, compute_lat

DIFFERENTIAL = "differential"
LINEAR = "linear"


class TrailModel:
    """Per-round state-transition model over packed integer states."""

    name: str
    kind: str
    state_bits: int

    def initial_states(self) -> Iterator[int]:
        return iter(range(1, 1 << self.state_bits))

    def transitions(self, state: int) -> list[tuple[int, Fraction]]:
        raise NotImplementedError

    def best_step(self) -> Fraction:
        """Largest |value| any single transition can take (for pruning)."""
        raise NotImplementedError

    def format_state(self, state: int) -> str:
        return f"{state:0{self.state_bits // 4}x}"


def _permute(value: int, perm) -> int:
    out = 0
    for i, target in enumerate(perm):
        out |= ((value >> i) & 1) << target
    return out


class SpnModel(TrailModel):
    """S-box layer plus bit permutation, one round per transition.

    Differential transitions multiply DDT entries of the active boxes;
    linear transitions multiply signed LAT correlations. The mask/
    difference then moves through the bit permutation.
    """

    def __init__(self, name: str, kind: str, sbox, perm):
        self.name = name
        self.kind = kind
        self.sbox = tuple(sbox)
        self.perm = tuple(perm)
        self.state_bits = len(perm)
        self.boxes = self.state_bits // 4
        if kind == DIFFERENTIAL:
            table = compute_ddt(sbox).entries
            denom = 16
        else:
            table = compute_lat(sbox).entries
            denom = 8
        # per input nibble value: list of (output nibble, exact value)
        self.rows = [
            [(b, Fraction(table[a][b], denom)) for b in range(16) if table[a][b] != 0]
            for a in range(16)
        ]
        self._best = max(
            abs(v) for a in range(1, 16) for _, v in self.rows[a]
        )

    def transitions(self, state: int) -> list[tuple[int, Fraction]]:
        options = []
        for i in range(self.boxes):
            nib = (state >> (4 * i)) & 0xF
            options.append([(b << (4 * i), v) for b, v in self.rows[nib]])
        out = []
        for combo in product(*options):
            merged = 0
            value = Fraction(1)
            for bits, v in combo:
                merged |= bits
                value *= v
            out.append((_permute(merged, self.perm), value))
        return out

    def best_step(self) -> Fraction:
        return self._best


class SimonLikeDifferentialModel(TrailModel):
    """Difference propagation through (x <<< a AND x <<< b) XOR (x <<< c).

    State packs (dx, dy) of a two-word Feistel state. Outputs of the
    AND gate form an affine set per input difference; each carries
    probability 2^-wt(varibits ^ doublebits). The width-1 gcd condition
    on (a - b) required by that characterization holds for the bundled
    rotation set. The all-ones input difference is the special case:
    every even-weight output, each at 2^-(width-1).
    """

    kind = DIFFERENTIAL

    def __init__(self, name: str, word_bits: int, rot_and: tuple[int, int], rot_lin: int):
        self.name = name
        self.word_bits = word_bits
        self.a, self.b = rot_and
        self.c = rot_lin
        self.state_bits = 2 * word_bits
        self.mask = (1 << word_bits) - 1

    def _and_outputs(self, dx: int) -> list[tuple[int, Fraction]]:
        w = self.word_bits
        if dx == 0:
            return [(0, Fraction(1))]
        if dx == self.mask:
            p = Fraction(1, 1 << (w - 1))
            return [(g, p) for g in range(1 << w) if g.bit_count() % 2 == 0]
        ra = rotl_int(dx, self.a, w)
        rb = rotl_int(dx, self.b, w)
        vari = ra | rb
        # output bits p+a and p+b read the same input bit exactly when
        # dx_p = 0 and dx_{p-(a-b)} = dx_{p+(a-b)} = 1
        doub = rb & ~ra & rotl_int(dx, (2 * self.a - self.b) % w, w)
        p = Fraction(1, 1 << (vari ^ doub).bit_count())
        shift = (self.a - self.b) % w
        out = []
        # enumerate subsets of varibits, filter the doubled-bit constraint
        g = vari
        while True:
            if (g ^ rotl_int(g, shift, w)) & doub == 0:
                out.append((g, p))
            if g == 0:
                break
            g = (g - 1) & vari
        out.reverse()
        return out

    def transitions(self, state: int) -> list[tuple[int, Fraction]]:
        w = self.word_bits
        dx, dy = state >> w, state & self.mask
        lin = dy ^ rotl_int(dx, self.c, w)
        return [((lin ^ g) << w | dx, p) for g, p in self._and_outputs(dx)]

    def best_step(self) -> Fraction:
        # dx = 0 passes the round for free
        return Fraction(1)


class FeistelBoxModel(TrailModel):
    """Feistel rounds whose core is a fixed 8-bit table.

    Differential: (dL, dR) -> (dR, dL ^ dF) with dF weighted by the
    core's DDT row for dR. Linear: masks (mL, mR) -> (mR ^ u, mL) for
    every input mask u the core's LAT pairs with mL.
    """

    def __init__(self, name: str, kind: str, core):
        self.name = name
        self.kind = kind
        self.word_bits = 8
        self.state_bits = 16
        table = [core(x) for x in range(256)]
        if kind == DIFFERENTIAL:
            self.table = compute_ddt(table).entries
            self.denom = 256
        else:
            self.table = compute_lat(table).entries
            self.denom = 128
        self._best = max(
            abs(Fraction(v, self.denom))
            for row in self.table
            for v in row
            if v != 0
        )

    def transitions(self, state: int) -> list[tuple[int, Fraction]]:
        left, right = state >> 8, state & 0xFF
        if self.kind == DIFFERENTIAL:
            row = self.table[right]
            return [
                ((right << 8) | (left ^ df), Fraction(row[df], self.denom))
                for df in range(256)
                if row[df] != 0
            ]
        out = []
        for u in range(256):
            v = self.table[u][left]
            if v != 0:
                out.append((((right ^ u) << 8) | left, Fraction(v, self.denom)))
        return out

    def best_step(self) -> Fraction:
        return self._best


_PRESENT8_PERM = tuple((2 * i) % 7 for i in range(7)) + (7,)

_FACTORIES = {
    ("present8", DIFFERENTIAL): lambda: SpnModel("present8", DIFFERENTIAL, PRESENT_SBOX, _PRESENT8_PERM),
    ("present8", LINEAR): lambda: SpnModel("present8", LINEAR, PRESENT_SBOX, _PRESENT8_PERM),
    ("simon-toy8", DIFFERENTIAL): lambda: SimonLikeDifferentialModel("simon-toy8", 4, (1, 0), 2),
    ("feistel-toy16", DIFFERENTIAL): lambda: FeistelBoxModel("feistel-toy16", DIFFERENTIAL, sbox_rotate_g),
    ("feistel-toy16", LINEAR): lambda: FeistelBoxModel("feistel-toy16", LINEAR, sbox_rotate_g),
}

_CACHE: dict[tuple[str, str], TrailModel] = {}


def list_models(kind: str | None = None) -> list[str]:
    """Bundled model names, optionally restricted to one analysis kind."""
    names = sorted({n for n, k in _FACTORIES if kind is None or k == kind})
    return names


def get_model(name: str, kind: str = DIFFERENTIAL) -> TrailModel:
    try:
        factory = _FACTORIES[(name, kind)]
    except KeyError:
        known = ", ".join(sorted(f"{n}/{k}" for n, k in _FACTORIES))
        raise ValueError(f"no {kind} model named {name!r} (have: {known})") from None
    key = (name, kind)
    if key not in _CACHE:
        _CACHE[key] = factory()
    return _CACHE[key]
