"""Lightweight block ciphers and their evaluation toolkit.

Cipher families (PRESENT, SIMON, SPECK), a generic Feistel
construction kit, CMAC authentication, and the measurement side:
difference/linear tables, trail search, avalanche statistics,
throughput, memory accounting and energy-per-bit from power logs.

These are research/teaching implementations: correct and tested
against published vectors, but not hardened against side channels.
"""

__version__ = "0.1.0"

from .analysis import (
    AnalysisTable,
    AvalancheStats,
    TrailResult,
    avalanche_test,
    compute_ddt,
    compute_lat,
    get_model,
    list_models,
    search_differential_trail,
    search_linear_trail,
)
from .bench import (
    BenchReport,
    MemoryReport,
    measure_memory,
    measure_throughput,
    throughput_bits_per_second,
)
from .cmac import MacContext, cmac_subkeys, cmac_tag, cmac_verify, memory_report
from .core import CipherContext, CipherSpec
from .feistel import FeistelDef, build_feistel
from .kat import bundled_kat_path, parse_kat_file, run_kat
from .power import PowerLog, energy_per_bit, ingest_power_log
from .registry import get_spec, list_specs, make_cipher, register_feistel
from .words import (
    Word,
    hex_from_int,
    int_from_hex,
    invert_permutation,
    permute_bits,
    rotl,
    rotr,
)

__all__ = [
    "AnalysisTable",
    "AvalancheStats",
    "BenchReport",
    "CipherContext",
    "CipherSpec",
    "FeistelDef",
    "MacContext",
    "MemoryReport",
    "PowerLog",
    "TrailResult",
    "Word",
    "avalanche_test",
    "build_feistel",
    "bundled_kat_path",
    "cmac_subkeys",
    "cmac_tag",
    "cmac_verify",
    "compute_ddt",
    "compute_lat",
    "energy_per_bit",
    "get_model",
    "get_spec",
    "hex_from_int",
    "ingest_power_log",
    "int_from_hex",
    "invert_permutation",
    "list_models",
    "list_specs",
    "make_cipher",
    "measure_memory",
    "measure_throughput",
    "memory_report",
    "parse_kat_file",
    "permute_bits",
    "register_feistel",
    "rotl",
    "rotr",
    "run_kat",
    "search_differential_trail",
    "search_linear_trail",
    "throughput_bits_per_second",
]
