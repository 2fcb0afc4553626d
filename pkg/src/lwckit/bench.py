"""Throughput measurement and static memory accounting.

Throughput follows the bits-over-seconds definition exactly: the
report stores N, T and N/T, and the identity is asserted in tests.
Memory accounting counts persistent cipher state only (round keys,
published constant tables, one working block), which is deterministic
and machine-independent, unlike RSS-style measurement.
"""
from __future__ import annotations

import json
import random
import statistics
import time
from dataclasses import dataclass, field
from datetime import datetime, timezone

from .core import CipherContext
from .errors import ClockResolutionTooCoarse

CSV_FIELDS = (
    "spec_id", "n_bits", "elapsed_seconds", "throughput_bps", "bytes_state",
    "energy_joules", "joules_per_bit", "repetitions", "timestamp",
)


def throughput_bits_per_second(n_bits: int, elapsed_seconds: float) -> float:
    """Plaintext bits divided by encryption seconds."""
    if elapsed_seconds <= 0:
        raise ValueError("elapsed time must be positive")
    return n_bits / elapsed_seconds


@dataclass
class MemoryReport:
    """Itemized persistent-state byte counts."""

    label: str
    items: dict[str, int]

    @property
    def total(self) -> int:
        return sum(self.items.values())

    def to_json_dict(self) -> dict:
        return {"label": self.label, "items": dict(self.items), "total_bytes": self.total}


@dataclass
class BenchReport:
    spec_id: str
    n_bits: int
    elapsed_seconds: float
    throughput_bps: float
    bytes_state: int
    repetitions: int
    timestamp: str
    energy_joules: float | None = None
    joules_per_bit: float | None = None
    memory: MemoryReport | None = field(default=None, repr=False)

    def to_json_dict(self) -> dict:
        out = {f: getattr(self, f) for f in CSV_FIELDS}
        if self.memory is not None:
            out["memory_items"] = dict(self.memory.items)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @staticmethod
    def csv_header() -> str:
        return ",".join(CSV_FIELDS)

    def to_csv_row(self) -> str:
        vals = []
        for f in CSV_FIELDS:
            v = getattr(self, f)
            vals.append("" if v is None else str(v))
        return ",".join(vals)


def measure_memory(ctx: CipherContext) -> MemoryReport:
    """Static accounting of one keyed context."""
    return MemoryReport(label=ctx.spec.spec_id, items=ctx.state_items())


def measure_throughput(
    ctx: CipherContext,
    n_blocks: int,
    repetitions: int = 3,
    seed: int = 0,
) -> BenchReport:
    """Encrypt ``n_blocks`` random blocks per repetition; report the median.

    Raises ClockResolutionTooCoarse when the timed loop is shorter than
    1000 timer ticks; use more blocks in that case.
    """
    if n_blocks < 1:
        raise ValueError("n_blocks must be >= 1")
    if repetitions < 3:
        raise ValueError("need at least 3 repetitions for a median")
    rng = random.Random(seed)
    width = ctx.block_bits
    blocks = [rng.getrandbits(width) for _ in range(n_blocks)]

    timings = []
    for _ in range(repetitions):
        t0 = time.perf_counter()
        ctx.encrypt_many(blocks)
        timings.append(time.perf_counter() - t0)
    elapsed = statistics.median(timings)

    resolution = time.get_clock_info("perf_counter").resolution
    if elapsed < 1000 * resolution:
        raise ClockResolutionTooCoarse(
            f"median loop took {elapsed:.3e}s, below 1000x timer resolution "
            f"({resolution:.1e}s); increase n_blocks"
        )

    n_bits = n_blocks * width
    memory = measure_memory(ctx)
    return BenchReport(
        spec_id=ctx.spec.spec_id,
        n_bits=n_bits,
        elapsed_seconds=elapsed,
        throughput_bps=throughput_bits_per_second(n_bits, elapsed),
        bytes_state=memory.total,
        repetitions=repetitions,
        timestamp=datetime.now(timezone.utc).isoformat(),
        memory=memory,
    )
