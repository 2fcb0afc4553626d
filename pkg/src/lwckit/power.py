"""Power-log ingestion and energy-per-bit integration.

Hardware power capture happens elsewhere; this side consumes its CSV
export (header ``t_seconds,watts``) and integrates trapezoidally over
a window to get joules and joules per processed bit.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

import numpy as np

from .errors import MalformedRow, NonMonotonicTimestamps, WindowOutOfRange

HEADER = ("t_seconds", "watts")


@dataclass
class PowerLog:
    """Strictly time-ordered (seconds, watts) samples."""

    times: np.ndarray
    watts: np.ndarray

    def __len__(self) -> int:
        return len(self.times)

    @property
    def span(self) -> tuple[float, float]:
        return float(self.times[0]), float(self.times[-1])


def ingest_power_log(source: str | Path | TextIO) -> PowerLog:
    """Parse and validate a power CSV.

    Row errors carry 1-based line numbers (the header is line 1).
    """
    if isinstance(source, (str, Path)):
        with open(source, "r", newline="") as fh:
            return ingest_power_log(fh)

    reader = csv.reader(source)
    try:
        header = next(reader)
    except StopIteration:
        raise MalformedRow(1, "missing header") from None
    if tuple(h.strip() for h in header) != HEADER:
        raise MalformedRow(1, f"expected header {','.join(HEADER)}")

    times: list[float] = []
    watts: list[float] = []
    for line_no, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != 2:
            raise MalformedRow(line_no, f"expected 2 fields, got {len(row)}")
        try:
            t, w = float(row[0]), float(row[1])
        except ValueError:
            raise MalformedRow(line_no, f"non-numeric field in {row!r}") from None
        if w < 0:
            raise MalformedRow(line_no, "negative power")
        if times and t <= times[-1]:
            raise NonMonotonicTimestamps(line_no)
        times.append(t)
        watts.append(w)
    if len(times) < 2:
        raise MalformedRow(2, "need at least two samples")
    return PowerLog(np.asarray(times), np.asarray(watts))


def energy_over_window(log: PowerLog, t0: float, t1: float) -> float:
    """Trapezoidal integral of power over [t0, t1] within the log span."""
    lo, hi = log.span
    if not t0 < t1:
        raise WindowOutOfRange(f"window [{t0}, {t1}] is empty or reversed")
    if t0 < lo or t1 > hi:
        raise WindowOutOfRange(f"window [{t0}, {t1}] outside log span [{lo}, {hi}]")
    inside = (log.times > t0) & (log.times < t1)
    ts = np.concatenate(([t0], log.times[inside], [t1]))
    ws = np.concatenate((
        [np.interp(t0, log.times, log.watts)],
        log.watts[inside],
        [np.interp(t1, log.times, log.watts)],
    ))
    return float(np.trapz(ws, ts))


def energy_per_bit(log: PowerLog, window: tuple[float, float], n_bits: int) -> tuple[float, float]:
    """(total joules, joules per bit) for the processing window."""
    if n_bits < 1:
        raise ValueError("n_bits must be >= 1")
    joules = energy_over_window(log, window[0], window[1])
    return joules, joules / n_bits


def parse_power_csv_text(text: str) -> PowerLog:
    """Convenience wrapper for in-memory CSV content."""
    return ingest_power_log(io.StringIO(text))
