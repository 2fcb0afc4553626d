"""Best-first branch-and-bound search for differential and linear trails.

Weights are exact fractions, so comparisons never suffer float drift;
ties between equally good trails break toward the lexicographically
smallest state sequence, which pins the output down to a single
deterministic answer. The optimistic bound of a partial trail is its
weight times the model's best single-round weight raised to the
remaining depth, an admissible per-round best-case estimate.

A search that finds nothing at or above the requested bound is a
result, not an error: ``found`` is False on the returned record.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from heapq import heappush, heappop
from typing import Iterable, Sequence

from .models import DIFFERENTIAL, LINEAR, TrailModel, get_model


@dataclass
class TrailResult:
    """Outcome of one trail search."""

    kind: str
    model: str
    rounds: int
    found: bool
    states: tuple[int, ...] | None
    value: Fraction | None  # probability, or signed correlation product
    nodes: int

    @property
    def log2_magnitude(self) -> float | None:
        if not self.found:
            return None
        return math.log2(abs(self.value))

    def to_json_dict(self, state_formatter=None) -> dict:
        fmt = state_formatter or (lambda s: f"{s:x}")
        return {
            "kind": self.kind,
            "model": self.model,
            "rounds": self.rounds,
            "found": self.found,
            "states": [fmt(s) for s in self.states] if self.found else None,
            "value": str(self.value) if self.found else None,
            "magnitude": float(abs(self.value)) if self.found else None,
            "log2_magnitude": self.log2_magnitude,
            "nodes": self.nodes,
        }


def _search(
    model: TrailModel,
    rounds: int,
    min_weight,
    initial_states: Iterable[int],
) -> TrailResult:
    best_pow = [Fraction(1)]
    step = model.best_step()
    for _ in range(rounds):
        best_pow.append(best_pow[-1] * step)

    heap: list = []
    nodes = 0
    start_opt = best_pow[rounds]
    if not (min_weight is not None and start_opt < min_weight):
        for s0 in sorted(initial_states):
            heappush(heap, (-start_opt, (s0,), Fraction(1), Fraction(1)))

    while heap:
        neg_opt, states, weight, signed = heappop(heap)
        nodes += 1
        depth = len(states) - 1
        if depth == rounds:
            return TrailResult(model.kind, model.name, rounds, True, states, signed, nodes)
        remaining = rounds - depth - 1
        if remaining == 0:
            # final round: fold straight to the best completion
            best = None
            for nxt, val in model.transitions(states[-1]):
                w = weight * abs(val)
                if min_weight is not None and w < min_weight:
                    continue
                cand_states = states + (nxt,)
                if best is None or w > best[0] or (w == best[0] and cand_states < best[1]):
                    best = (w, cand_states, signed * val)
            if best is not None:
                heappush(heap, (-best[0], best[1], best[0], best[2]))
        else:
            tail = best_pow[remaining]
            for nxt, val in model.transitions(states[-1]):
                w = weight * abs(val)
                opt = w * tail
                if min_weight is not None and opt < min_weight:
                    continue
                heappush(heap, (-opt, states + (nxt,), w, signed * val))
    return TrailResult(model.kind, model.name, rounds, False, None, None, nodes)


def _search_chunk(args) -> TrailResult:
    model, rounds, min_weight, chunk = args
    return _search(model, rounds, min_weight, chunk)


def _merge(results: Sequence[TrailResult]) -> TrailResult:
    nodes = sum(r.nodes for r in results)
    found = [r for r in results if r.found]
    if not found:
        base = results[0]
        return TrailResult(base.kind, base.model, base.rounds, False, None, None, nodes)
    best = found[0]
    for r in found[1:]:
        rw, bw = abs(r.value), abs(best.value)
        if rw > bw or (rw == bw and r.states < best.states):
            best = r
    return TrailResult(best.kind, best.model, best.rounds, True, best.states, best.value, nodes)


def _run(
    model: TrailModel,
    rounds: int,
    min_weight,
    initial_states,
    workers: int,
) -> TrailResult:
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    states = sorted(initial_states) if initial_states is not None else sorted(model.initial_states())
    if workers <= 1 or len(states) < 2 * workers:
        return _search(model, rounds, min_weight, states)
    size = -(-len(states) // workers)
    chunks = [states[i: i + size] for i in range(0, len(states), size)]
    args = [(model, rounds, min_weight, c) for c in chunks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_search_chunk, args))
    return _merge(results)


def search_differential_trail(
    model: TrailModel | str,
    rounds: int,
    log2_bound: float | None = None,
    initial_states: Iterable[int] | None = None,
    workers: int = 1,
) -> TrailResult:
    """Highest-probability differential trail at or above 2^log2_bound."""
    if isinstance(model, str):
        model = get_model(model, DIFFERENTIAL)
    if model.kind != DIFFERENTIAL:
        raise ValueError(f"{model.name} is a {model.kind} model")
    min_weight = None if log2_bound is None else 2.0 ** log2_bound
    return _run(model, rounds, min_weight, initial_states, workers)


def search_linear_trail(
    model: TrailModel | str,
    rounds: int,
    correlation_bound: float | None = None,
    initial_states: Iterable[int] | None = None,
    workers: int = 1,
) -> TrailResult:
    """Largest-|correlation| linear trail at or above the bound."""
    if isinstance(model, str):
        model = get_model(model, LINEAR)
    if model.kind != LINEAR:
        raise ValueError(f"{model.name} is a {model.kind} model")
    min_weight = None if correlation_bound is None else abs(correlation_bound)
    return _run(model, rounds, min_weight, initial_states, workers)
