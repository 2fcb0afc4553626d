"""Known-answer-test files: parse, execute, summarize.

File format: one record per line, whitespace separated,

    spec_id  key_hex  plaintext_hex  expected_ciphertext_hex

with ``#`` comments and blank lines permitted. Hex field lengths must
match the spec's key and block sizes exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import MalformedKatRecord, UnknownSpec
from .registry import get_spec, make_cipher
from .words import hex_from_int

BUNDLED_KAT_NAME = "published.kat"


@dataclass
class KatRecord:
    line_no: int
    spec_id: str
    key: bytes
    plaintext: int
    expected: int


@dataclass
class KatFailure:
    record: KatRecord
    got: int


@dataclass
class KatSummary:
    passed: int = 0
    failed: int = 0
    failures: list[KatFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def bundled_kat_path() -> Path:
    """Location of the vectors shipped with the package."""
    return Path(resources.files("lwckit").joinpath("data", BUNDLED_KAT_NAME))


def _parse_hex(text: str, bits: int, line_no: int, what: str) -> int:
    if len(text) != bits // 4:
        raise MalformedKatRecord(
            line_no, f"{what} must be {bits // 4} hex digits, got {len(text)}"
        )
    try:
        return int(text, 16)
    except ValueError:
        raise MalformedKatRecord(line_no, f"{what} is not valid hex") from None


def parse_kat_file(path: str | Path) -> list[KatRecord]:
    records = []
    with open(path) as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) != 4:
                raise MalformedKatRecord(line_no, f"expected 4 fields, got {len(fields)}")
            spec_id, key_hex, pt_hex, ct_hex = fields
            try:
                spec = get_spec(spec_id)
            except UnknownSpec:
                raise MalformedKatRecord(line_no, f"unknown spec {spec_id!r}") from None
            key = _parse_hex(key_hex, spec.key_bits, line_no, "key")
            pt = _parse_hex(pt_hex, spec.block_bits, line_no, "plaintext")
            ct = _parse_hex(ct_hex, spec.block_bits, line_no, "ciphertext")
            records.append(
                KatRecord(line_no, spec_id, key.to_bytes(spec.key_bits // 8, "big"), pt, ct)
            )
    return records


def run_kat(path: str | Path) -> KatSummary:
    """Execute every record through the registry."""
    summary = KatSummary()
    for rec in parse_kat_file(path):
        ctx = make_cipher(rec.spec_id, rec.key)
        got = ctx.encrypt_block(rec.plaintext)
        if got == rec.expected:
            # decryption must restore the plaintext as well
            if ctx.decrypt_block(got) == rec.plaintext:
                summary.passed += 1
                continue
        summary.failed += 1
        summary.failures.append(KatFailure(rec, got))
    return summary


def format_failure(f: KatFailure) -> str:
    spec = get_spec(f.record.spec_id)
    return (
        f"line {f.record.line_no} {f.record.spec_id}: expected "
        f"{hex_from_int(f.record.expected, spec.block_bits)}, got "
        f"{hex_from_int(f.got, spec.block_bits)}"
    )
