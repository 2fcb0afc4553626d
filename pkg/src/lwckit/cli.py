"""Command-line interface.

Subcommands: encrypt, decrypt, kat, bench, analyze (ddt, lat,
avalanche, trail), mac (tag, verify). Outputs are plain hex, JSON or
CSV so they can be piped into other tooling.

Exit status: 0 success; 1 operational failure (bad input files, failed
known-answer records, out-of-range windows); 2 usage errors (unknown
flags, unknown spec ids, malformed keys). Set LWC_NO_COLOR to suppress
the colored pass/fail markers.

Block-wise encryption here is raw ECB per block: a correctness and
measurement vehicle, not a data-at-rest mode.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .analysis import (
    NAMED_SBOXES,
    avalanche_test,
    compute_ddt,
    compute_lat,
    get_model,
    search_differential_trail,
    search_linear_trail,
)
from .analysis.models import DIFFERENTIAL, LINEAR
from .bench import BenchReport, measure_throughput
from .cmac import MacContext, cmac_tag, cmac_verify
from .errors import (
    BlockWidthMismatch,
    InvalidTagLength,
    KeyLengthMismatch,
    LwcError,
    UnknownSpec,
    UnsupportedBlockWidth,
)
from .kat import format_failure, run_kat
from .power import energy_per_bit, ingest_power_log
from .registry import get_spec, list_specs, make_cipher
from .words import hex_from_int

_USAGE_ERRORS = (
    UnknownSpec,
    KeyLengthMismatch,
    BlockWidthMismatch,
    UnsupportedBlockWidth,
    InvalidTagLength,
    ValueError,
)


def _color_enabled() -> bool:
    return "LWC_NO_COLOR" not in os.environ and sys.stdout.isatty()


def _mark(ok: bool) -> str:
    text = "PASS" if ok else "FAIL"
    if _color_enabled():
        code = "32" if ok else "31"
        return f"\x1b[{code}m{text}\x1b[0m"
    return text


def _parse_key(spec_id: str, key_hex: str) -> bytes:
    spec = get_spec(spec_id)
    digits = spec.key_bits // 4
    s = key_hex.strip().lower()
    if len(s) != digits:
        raise KeyLengthMismatch(f"{spec_id} needs {digits} key hex digits, got {len(s)}")
    return int(s, 16).to_bytes(spec.key_bits // 8, "big")


def _read_hex_input(value: str) -> str:
    # a path wins over a literal hex string when the file exists
    p = Path(value)
    if p.is_file():
        return "".join(p.read_text().split())
    return value.strip()


def _read_message(value: str) -> bytes:
    p = Path(value)
    if p.is_file():
        return p.read_bytes()
    s = value.strip()
    if len(s) % 2 != 0:
        raise ValueError("hex message needs an even number of digits")
    return bytes.fromhex(s)


def _cmd_crypt(args, decrypt: bool) -> int:
    ctx = make_cipher(args.spec, _parse_key(args.spec, args.key))
    digits = ctx.block_bits // 4
    data = _read_hex_input(args.input)
    if len(data) == 0 or len(data) % digits != 0:
        raise ValueError(f"input must be a multiple of {digits} hex digits")
    blocks = [int(data[i: i + digits], 16) for i in range(0, len(data), digits)]
    op = ctx.decrypt_many if decrypt else ctx.encrypt_many
    print("".join(hex_from_int(b, ctx.block_bits) for b in op(blocks)))
    return 0


def _cmd_kat(args) -> int:
    summary = run_kat(args.file)
    for failure in summary.failures:
        print(f"{_mark(False)} {format_failure(failure)}")
    print(f"passed {summary.passed}, failed {summary.failed}")
    return 0 if summary.ok else 1


def _cmd_bench(args) -> int:
    ctx = make_cipher(args.spec, _parse_key(args.spec, args.key))
    report = measure_throughput(ctx, args.blocks, args.reps, seed=args.seed)
    if args.power_log:
        log = ingest_power_log(args.power_log)
        t0, t1 = (float(v) for v in args.window.split(","))
        joules, per_bit = energy_per_bit(log, (t0, t1), report.n_bits)
        report.energy_joules = joules
        report.joules_per_bit = per_bit
    if args.format == "csv":
        print(BenchReport.csv_header())
        print(report.to_csv_row())
    else:
        print(report.to_json())
    return 0


def _resolve_sbox(text: str) -> list[int]:
    if text in NAMED_SBOXES:
        return list(NAMED_SBOXES[text])
    s = text.strip().lower()
    if len(s) != 16 or any(c not in "0123456789abcdef" for c in s):
        names = ", ".join(sorted(NAMED_SBOXES))
        raise ValueError(f"--sbox takes a name ({names}) or 16 hex nibbles")
    return [int(c, 16) for c in s]


def _cmd_table(args, which: str) -> int:
    sbox = _resolve_sbox(args.sbox)
    table = compute_ddt(sbox) if which == "ddt" else compute_lat(sbox)
    if args.format == "json":
        print(json.dumps(table.to_json_dict()))
    else:
        sys.stdout.write(table.to_csv())
    return 0


def _cmd_avalanche(args) -> int:
    stats = avalanche_test(args.spec, args.trials, args.seed)
    print(json.dumps(stats.to_json_dict()))
    return 0


def _cmd_trail(args) -> int:
    model = get_model(args.model, args.kind)
    if args.kind == LINEAR:
        result = search_linear_trail(model, args.rounds, args.bound, workers=args.workers)
    else:
        bound = args.bound
        result = search_differential_trail(model, args.rounds, bound, workers=args.workers)
    print(json.dumps(result.to_json_dict(model.format_state)))
    return 0


def _cmd_mac(args, verify: bool) -> int:
    ctx = make_cipher(args.spec, _parse_key(args.spec, args.key))
    mac = MacContext(ctx)
    message = _read_message(args.input)
    if verify:
        tag = bytes.fromhex(args.tag.strip().lower())
        ok = cmac_verify(mac, message, tag)
        print(_mark(ok))
        return 0 if ok else 1
    print(cmac_tag(mac, message).hex().upper())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lwckit",
        description="Lightweight block ciphers with cryptanalysis and performance tooling",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec_key(p):
        p.add_argument("--spec", required=True, help=f"one of: {', '.join(list_specs())}")
        p.add_argument("--key", required=True, help="key as big-endian hex")

    p = sub.add_parser("encrypt", help="ECB-encrypt hex blocks")
    add_spec_key(p)
    p.add_argument("--in", dest="input", required=True, help="hex string or file of hex")

    p = sub.add_parser("decrypt", help="ECB-decrypt hex blocks")
    add_spec_key(p)
    p.add_argument("--in", dest="input", required=True, help="hex string or file of hex")

    p = sub.add_parser("kat", help="known-answer tests")
    kat_sub = p.add_subparsers(dest="kat_command", required=True)
    p = kat_sub.add_parser("run", help="run a KAT file")
    p.add_argument("file")

    p = sub.add_parser("bench", help="throughput and memory, optional energy from a power log")
    add_spec_key(p)
    p.add_argument("--blocks", type=int, required=True)
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--power-log", help="CSV power capture (t_seconds,watts)")
    p.add_argument("--window", default=None, help="t0,t1 integration window in seconds")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("analyze", help="tables, avalanche statistics, trail search")
    an_sub = p.add_subparsers(dest="analyze_command", required=True)
    for which in ("ddt", "lat"):
        q = an_sub.add_parser(which, help=f"{which.upper()} of an S-box")
        q.add_argument("--sbox", required=True, help="name or 16 hex nibbles")
        q.add_argument("--format", choices=("csv", "json"), default="csv")
    q = an_sub.add_parser("avalanche", help="single-bit avalanche statistics")
    q.add_argument("--spec", required=True)
    q.add_argument("--trials", type=int, required=True)
    q.add_argument("--seed", type=int, default=0)
    q = an_sub.add_parser("trail", help="best trail by branch-and-bound")
    q.add_argument("--model", required=True)
    q.add_argument("--rounds", type=int, required=True)
    q.add_argument("--bound", type=float, default=None,
                   help="log2 probability bound (differential) or |correlation| bound (linear)")
    q.add_argument("--kind", choices=(DIFFERENTIAL, LINEAR), default=DIFFERENTIAL)
    q.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("mac", help="CMAC tag and verify")
    mac_sub = p.add_subparsers(dest="mac_command", required=True)
    q = mac_sub.add_parser("tag", help="compute a tag")
    add_spec_key(q)
    q.add_argument("--in", dest="input", required=True, help="hex string or file of raw bytes")
    q = mac_sub.add_parser("verify", help="check a tag")
    add_spec_key(q)
    q.add_argument("--in", dest="input", required=True, help="hex string or file of raw bytes")
    q.add_argument("--tag", required=True, help="expected tag as hex")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "encrypt":
            return _cmd_crypt(args, decrypt=False)
        if args.command == "decrypt":
            return _cmd_crypt(args, decrypt=True)
        if args.command == "kat":
            return _cmd_kat(args)
        if args.command == "bench":
            if bool(args.power_log) != bool(args.window):
                parser.error("--power-log and --window go together")
            return _cmd_bench(args)
        if args.command == "analyze":
            if args.analyze_command in ("ddt", "lat"):
                return _cmd_table(args, args.analyze_command)
            if args.analyze_command == "avalanche":
                return _cmd_avalanche(args)
            return _cmd_trail(args)
        if args.command == "mac":
            return _cmd_mac(args, verify=args.mac_command == "verify")
        parser.error(f"unhandled command {args.command}")
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LwcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
