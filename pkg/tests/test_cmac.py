import random

import pytest
from hypothesis import given, settings, strategies as st

from lwckit import MacContext, cmac_subkeys, cmac_tag, cmac_verify, make_cipher, memory_report
from lwckit.cmac import doubled
from lwckit.errors import InvalidTagLength, UnsupportedBlockWidth

from conftest import random_key


def _mac(spec_id="simon-64-128", key=None, rng=None):
    rng = rng or random.Random(1)
    key = key or random_key(spec_id, rng)
    return MacContext(make_cipher(spec_id, key))


def _double_oracle(value: int, bits: int) -> int:
    # byte-wise shift with carry, reduction constant XORed at the end
    rb = {64: 0x1B, 128: 0x87}[bits]
    data = bytearray(value.to_bytes(bits // 8, "big"))
    msb = data[0] >> 7
    carry = 0
    for i in range(len(data) - 1, -1, -1):
        nxt = data[i] >> 7
        data[i] = ((data[i] << 1) & 0xFF) | carry
        carry = nxt
    out = int.from_bytes(data, "big")
    return out ^ rb if msb else out


def test_doubling_without_reduction():
    l = 0x0123456789ABCDEF >> 1  # msb clear
    assert doubled(l, 64) == l << 1


def test_doubling_with_reduction():
    assert doubled(0x8000000000000000, 64) == 0x1B


def test_doubling_matches_oracle_both_branches():
    rng = random.Random(3)
    seen = {0, 1}
    for _ in range(1000):
        bits = rng.choice((64, 128))
        l = rng.getrandbits(bits)
        seen.discard(l >> (bits - 1))
        assert doubled(l, bits) == _double_oracle(l, bits)
    assert not seen  # both msb branches exercised


def test_subkeys_are_double_and_double_again(rng):
    ctx = make_cipher("simon-64-128", random_key("simon-64-128", rng))
    k1, k2 = cmac_subkeys(ctx)
    l = ctx.encrypt_block(0)
    assert k1 == doubled(l, 64)
    assert k2 == doubled(k1, 64)


def test_unsupported_block_width():
    ctx = make_cipher("speck-32-64", bytes(8))
    with pytest.raises(UnsupportedBlockWidth):
        MacContext(ctx)


def test_empty_message_uses_padded_k2_branch():
    mac = _mac()
    pad = 0x80 << (64 - 8)
    expected = mac.cipher.encrypt_block(mac.k2 ^ pad)
    assert cmac_tag(mac, b"") == expected.to_bytes(8, "big")


def test_tag_deterministic():
    mac = _mac()
    msg = b"attack at dawn"
    assert cmac_tag(mac, msg) == cmac_tag(mac, msg)


def test_tag_length_is_block_width():
    mac = _mac()
    assert len(cmac_tag(mac, b"xyz")) == 8
    mac128 = _mac("present-64-128")
    assert len(cmac_tag(mac128, b"xyz")) == 8


def test_full_final_block_uses_k1_branch():
    mac = _mac()
    msg = bytes(range(8))
    expected = mac.cipher.encrypt_block(int.from_bytes(msg, "big") ^ mac.k1)
    assert cmac_tag(mac, msg) == expected.to_bytes(8, "big")


def _reference_cmac(ctx, message: bytes) -> bytes:
    # independent straight-line reimplementation over byte strings
    nb = ctx.block_bytes
    l = ctx.encrypt_block(0)
    k1 = _double_oracle(l, nb * 8)
    k2 = _double_oracle(k1, nb * 8)
    if message and len(message) % nb == 0:
        blocks = [message[i: i + nb] for i in range(0, len(message), nb)]
        blocks[-1] = (int.from_bytes(blocks[-1], "big") ^ k1).to_bytes(nb, "big")
    else:
        padded = message + b"\x80" + b"\x00" * ((nb - len(message) % nb - 1) % nb)
        blocks = [padded[i: i + nb] for i in range(0, len(padded), nb)]
        blocks[-1] = (int.from_bytes(blocks[-1], "big") ^ k2).to_bytes(nb, "big")
    state = 0
    for b in blocks:
        state = ctx.encrypt_block(state ^ int.from_bytes(b, "big"))
    return state.to_bytes(nb, "big")


@settings(max_examples=80, deadline=None)
@given(st.binary(min_size=0, max_size=64))
def test_matches_independent_reimplementation(message):
    mac = _mac()
    assert cmac_tag(mac, message) == _reference_cmac(mac.cipher, message)


@settings(max_examples=80, deadline=None)
@given(st.binary(min_size=0, max_size=40))
def test_padding_branch_exactly_on_partial_or_empty(message):
    # tags over m and over m plus one 0x80 0x00.. pad block collide only
    # when the branch logic is wrong; instead verify via the k1/k2 choice
    mac = _mac("present-64-80")
    nb = 8
    tag = cmac_tag(mac, message)
    assert len(tag) == nb
    # recompute with the opposite branch forced; must differ
    wrong = _reference_cmac_wrong_branch(mac.cipher, message)
    assert tag != wrong


def _reference_cmac_wrong_branch(ctx, message: bytes) -> bytes:
    nb = ctx.block_bytes
    l = ctx.encrypt_block(0)
    k1 = _double_oracle(l, nb * 8)
    k2 = _double_oracle(k1, nb * 8)
    complete = bool(message) and len(message) % nb == 0
    if complete:
        # wrong: pad a complete message and use k2
        padded = message + b"\x80" + b"\x00" * (nb - 1)
        blocks = [padded[i: i + nb] for i in range(0, len(padded), nb)]
        blocks[-1] = (int.from_bytes(blocks[-1], "big") ^ k2).to_bytes(nb, "big")
    else:
        # wrong: zero-fill and use k1
        padded = message + b"\x00" * ((nb - len(message) % nb) % nb or nb)
        blocks = [padded[i: i + nb] for i in range(0, len(padded), nb)]
        blocks[-1] = (int.from_bytes(blocks[-1], "big") ^ k1).to_bytes(nb, "big")
    state = 0
    for b in blocks:
        state = ctx.encrypt_block(state ^ int.from_bytes(b, "big"))
    return state.to_bytes(nb, "big")


def test_one_bit_message_change_changes_tag():
    rng = random.Random(17)
    mac = _mac(rng=rng)
    for _ in range(300):
        msg = bytearray(rng.randbytes(rng.randrange(1, 32)))
        tag = cmac_tag(mac, bytes(msg))
        msg[rng.randrange(len(msg))] ^= 1 << rng.randrange(8)
        assert cmac_tag(mac, bytes(msg)) != tag


def test_verify_accepts_and_rejects():
    mac = _mac()
    msg = b"report ready"
    tag = cmac_tag(mac, msg)
    assert cmac_verify(mac, msg, tag)
    bad = bytearray(tag)
    bad[0] ^= 1
    assert not cmac_verify(mac, msg, bytes(bad))


def test_truncated_tag_rejected():
    mac = _mac()
    with pytest.raises(InvalidTagLength):
        cmac_verify(mac, b"m", b"\x00" * 4)


def test_memory_report_simon_64_128():
    report = memory_report(_mac())
    assert report.items == {"round_keys": 176, "subkeys": 16, "chaining_block": 8}
    assert report.total == 200


def test_memory_report_total_is_sum_and_reproducible(rng):
    key = random_key("present-64-80", rng)
    a = memory_report(MacContext(make_cipher("present-64-80", key)))
    b = memory_report(MacContext(make_cipher("present-64-80", key)))
    assert a.total == sum(a.items.values())
    assert a.items == b.items


def test_mac_context_immutable():
    mac = _mac()
    with pytest.raises(AttributeError):
        mac.k1 = 0
