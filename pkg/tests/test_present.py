import random

import pytest

from lwckit import make_cipher
from lwckit.errors import KeyLengthMismatch
from lwckit.present import (
    INV_SBOX,
    PERM,
    ROUNDS,
    SBOX,
    decrypt,
    encrypt,
    inv_p_layer,
    inv_sbox_layer,
    key_schedule,
    p_layer,
    sbox_layer,
)

# Published all-zero / all-one vectors for the 80-bit key plus the
# 128-bit zero vector; confirmed against independent implementations.
KATS_80 = [
    (0x00000000000000000000, 0x0000000000000000, 0x5579C1387B228445),
    (0x00000000000000000000, 0xFFFFFFFFFFFFFFFF, 0xA112FFC72F68417B),
    (0xFFFFFFFFFFFFFFFFFFFF, 0x0000000000000000, 0xE72C46C0F5945049),
    (0xFFFFFFFFFFFFFFFFFFFF, 0xFFFFFFFFFFFFFFFF, 0x3333DCD3213210D2),
]
KAT_128 = (0, 0, 0x96DB702A2E6900AF)


def test_sbox_is_bijective():
    assert sorted(SBOX) == list(range(16))
    assert all(INV_SBOX[SBOX[v]] == v for v in range(16))


def test_perm_is_bijective():
    assert sorted(PERM) == list(range(64))


def test_perm_formula():
    assert PERM[0] == 0
    assert PERM[1] == 16
    assert PERM[63] == 63


def test_p_layer_single_bits():
    assert p_layer(1) == 1
    assert p_layer(1 << 1) == 1 << 16
    assert p_layer(1 << 63) == 1 << 63


def test_sbox_layer_all_zero_nibbles():
    # first table entry lands in every nibble position
    assert sbox_layer(0) == 0xCCCCCCCCCCCCCCCC


def test_sbox_layer_all_f_nibbles():
    # last table entry
    assert sbox_layer(0xFFFFFFFFFFFFFFFF) == 0x2222222222222222


def test_layers_invert(rng):
    for _ in range(200):
        b = rng.getrandbits(64)
        assert inv_sbox_layer(sbox_layer(b)) == b
        assert inv_p_layer(p_layer(b)) == b


def test_schedule_length():
    assert len(key_schedule(0, 80)) == ROUNDS + 1 == 32
    assert len(key_schedule(0, 128)) == 32


def test_first_round_key_is_leftmost_bits(rng):
    key80 = rng.getrandbits(80)
    assert key_schedule(key80, 80)[0] == key80 >> 16
    key128 = rng.getrandbits(128)
    assert key_schedule(key128, 128)[0] == key128 >> 64


def test_schedule_rejects_bad_width():
    with pytest.raises(KeyLengthMismatch):
        key_schedule(0, 64)


@pytest.mark.parametrize("key,pt,ct", KATS_80)
def test_known_answers_80(key, pt, ct):
    rks = key_schedule(key, 80)
    assert encrypt(rks, pt) == ct
    assert decrypt(rks, ct) == pt


def test_known_answer_128():
    key, pt, ct = KAT_128
    rks = key_schedule(key, 128)
    assert encrypt(rks, pt) == ct
    assert decrypt(rks, ct) == pt


def _reference_encrypt(rks, block):
    # plain layer-by-layer pipeline, no fused tables
    for i in range(ROUNDS):
        block = p_layer(sbox_layer(block ^ rks[i]))
    return block ^ rks[ROUNDS]


def test_fused_tables_match_plain_layers(rng):
    for _ in range(50):
        rks = key_schedule(rng.getrandbits(80), 80)
        b = rng.getrandbits(64)
        assert encrypt(rks, b) == _reference_encrypt(rks, b)


@pytest.mark.parametrize("key_bits", [80, 128])
def test_round_trip(key_bits, rng):
    for _ in range(500):
        rks = key_schedule(rng.getrandbits(key_bits), key_bits)
        b = rng.getrandbits(64)
        assert decrypt(rks, encrypt(rks, b)) == b


def test_single_bit_flip_diffuses():
    rng = random.Random(41)
    ctx = make_cipher("present-64-80", rng.getrandbits(80).to_bytes(10, "big"))
    total = 0
    trials = 1000
    for _ in range(trials):
        pt = rng.getrandbits(64)
        flipped = pt ^ (1 << rng.randrange(64))
        total += (ctx.encrypt_block(pt) ^ ctx.encrypt_block(flipped)).bit_count()
    assert 0.45 <= total / (trials * 64) <= 0.55
