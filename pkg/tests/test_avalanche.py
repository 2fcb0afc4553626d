import pytest

from lwckit import avalanche_test


def test_identity_stub_flips_exactly_one_bit(identity_stub):
    stats = avalanche_test(identity_stub, trials=500, seed=1)
    assert stats.mean_flip_ratio == 1 / 64
    assert sum(stats.per_bit_flip_freq) * 500 == 500  # one flip per trial


def test_deterministic_under_seed():
    a = avalanche_test("present-64-80", trials=200, seed=42)
    b = avalanche_test("present-64-80", trials=200, seed=42)
    assert a == b


def test_different_seeds_differ():
    a = avalanche_test("present-64-80", trials=200, seed=1)
    b = avalanche_test("present-64-80", trials=200, seed=2)
    assert a != b


def test_trials_floor():
    with pytest.raises(ValueError):
        avalanche_test("present-64-80", trials=99, seed=0)


@pytest.mark.parametrize("spec_id", ["present-64-80", "simon-64-128", "speck-64-128"])
def test_full_round_ciphers_diffuse(spec_id):
    stats = avalanche_test(spec_id, trials=1000, seed=7)
    assert 0.45 <= stats.mean_flip_ratio <= 0.55
    assert stats.block_bits == 64
    assert len(stats.per_bit_flip_freq) == 64
    assert all(0.0 <= f <= 1.0 for f in stats.per_bit_flip_freq)


def test_fixed_context_accepted(rng):
    from lwckit import make_cipher

    ctx = make_cipher("speck-64-128", rng.getrandbits(128).to_bytes(16, "big"))
    stats = avalanche_test(ctx, trials=300, seed=5)
    assert 0.4 <= stats.mean_flip_ratio <= 0.6
    assert stats.label == "speck-64-128"
