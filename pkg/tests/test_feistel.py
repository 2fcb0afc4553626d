import random

import pytest
from hypothesis import given, settings, strategies as st

from lwckit import FeistelDef, build_feistel, make_cipher
from lwckit.core import CipherSpec
from lwckit.errors import InvalidDefinition
from lwckit.registry import get_spec

from conftest import random_key


def _build(name, word_bits, rounds, f, schedule=None, final_swap=False):
    defn = FeistelDef(
        name=name,
        word_bits=word_bits,
        rounds=rounds,
        key_bits=word_bits,
        round_function=f,
        schedule=schedule or (lambda key: [key & ((1 << word_bits) - 1)] * rounds),
        final_swap=final_swap,
    )
    factory = build_feistel(defn)
    spec = CipherSpec(f"test-{name}", "feistel-custom", 2 * word_bits, word_bits, rounds)
    return defn, factory, spec


def test_zero_round_function_one_round_is_swap():
    _, factory, spec = _build("swap", 16, 1, lambda r, k: 0)
    ctx = factory(spec, 0)
    assert ctx.encrypt_block(0xAAAA5555) == 0x5555AAAA


def test_zero_round_function_two_rounds_is_identity(rng):
    _, factory, spec = _build("ident", 16, 2, lambda r, k: 0)
    ctx = factory(spec, 0)
    for _ in range(100):
        b = rng.getrandbits(32)
        assert ctx.encrypt_block(b) == b


def test_key_only_round_function():
    # one round: (L, R) -> (R, L ^ k_1)
    _, factory, spec = _build("keyonly", 16, 1, lambda r, k: k)
    ctx = factory(spec, 0x1234)
    assert ctx.encrypt_block(0xAAAA5555) == ((0x5555 << 16) | (0xAAAA ^ 0x1234))


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_random_table_round_function_inverts(data):
    # invertibility holds even for non-bijective round functions
    table = data.draw(st.lists(st.integers(0, 255), min_size=256, max_size=256))
    _, factory, spec = _build("table", 8, 8, lambda r, k: table[r] ^ k)
    ctx = factory(spec, data.draw(st.integers(0, 255)))
    for _ in range(50):
        b = data.draw(st.integers(0, 2**16 - 1))
        assert ctx.decrypt_block(ctx.encrypt_block(b)) == b


def test_toy_8bit_block_is_permutation():
    rng = random.Random(5)
    table = [rng.randrange(16) for _ in range(16)]
    _, factory, spec = _build("toy8", 4, 6, lambda r, k: table[r] ^ k)
    ctx = factory(spec, 9)
    images = {ctx.encrypt_block(b) for b in range(256)}
    assert len(images) == 256


def test_encrypt_injective_on_random_blocks(rng):
    ctx = make_cipher("feistel-custom-sbox16", random_key("feistel-custom-sbox16", rng))
    blocks = set()
    while len(blocks) < 10**4:
        blocks.add(rng.getrandbits(16))
    outputs = {ctx.encrypt_block(b) for b in blocks}
    assert len(outputs) == len(blocks)


def test_final_swap_round_trip(rng):
    _, factory, spec = _build("fs", 8, 3, lambda r, k: (r * 17 + k) & 0xFF, final_swap=True)
    ctx = factory(spec, 77)
    for _ in range(200):
        b = rng.getrandbits(16)
        assert ctx.decrypt_block(ctx.encrypt_block(b)) == b


def test_example_instantiations_round_trip(rng):
    for spec_id in ("feistel-custom-rotxor32", "feistel-custom-sbox16", "feistel-custom-simon64"):
        spec = get_spec(spec_id)
        for _ in range(200):
            ctx = make_cipher(spec_id, random_key(spec_id, rng))
            b = rng.getrandbits(spec.block_bits)
            assert ctx.decrypt_block(ctx.encrypt_block(b)) == b


def test_simon_through_kit_matches_native(rng):
    # same round function and schedule; states differ by a half swap
    def swap(b):
        return ((b & 0xFFFFFFFF) << 32) | (b >> 32)

    for _ in range(1000):
        key = random_key("simon-64-128", rng)
        kit = make_cipher("feistel-custom-simon64", key)
        native = make_cipher("simon-64-128", key)
        b = rng.getrandbits(64)
        assert kit.encrypt_block(swap(b)) == native.encrypt_block(b)


def test_zero_rounds_rejected():
    with pytest.raises(InvalidDefinition):
        _build("bad", 16, 0, lambda r, k: 0)


def test_oversized_schedule_output_rejected():
    with pytest.raises(InvalidDefinition):
        defn = FeistelDef(
            name="bad",
            word_bits=8,
            rounds=2,
            key_bits=8,
            round_function=lambda r, k: 0,
            schedule=lambda key: [1 << 8, 0],
        )
        build_feistel(defn)


def test_wrong_schedule_length_rejected():
    with pytest.raises(InvalidDefinition):
        defn = FeistelDef(
            name="bad",
            word_bits=8,
            rounds=3,
            key_bits=8,
            round_function=lambda r, k: 0,
            schedule=lambda key: [0, 0],
        )
        build_feistel(defn)


def test_oversized_round_function_output_rejected():
    with pytest.raises(InvalidDefinition):
        defn = FeistelDef(
            name="bad",
            word_bits=8,
            rounds=2,
            key_bits=8,
            round_function=lambda r, k: 256,
            schedule=lambda key: [0, 0],
        )
        build_feistel(defn)
