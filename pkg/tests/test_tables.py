import random

import pytest

from lwckit import compute_ddt, compute_lat
from lwckit.present import SBOX


def _ddt_oracle(sbox):
    # direct definition, organized differently from the library loop
    n = len(sbox).bit_length() - 1
    size = 1 << n
    table = [[0] * size for _ in range(size)]
    for x in range(size):
        for a in range(size):
            table[a][sbox[x] ^ sbox[x ^ a]] += 1
    return table


def _lat_oracle(sbox):
    # counts agreements one cell at a time; no transform involved
    n = len(sbox).bit_length() - 1
    size = 1 << n
    half = size // 2

    def parity(v):
        return v.bit_count() & 1

    return [
        [
            sum(1 for x in range(size) if parity(a & x) == parity(b & sbox[x])) - half
            for b in range(size)
        ]
        for a in range(size)
    ]


def test_ddt_matches_oracle_entry_for_entry():
    assert compute_ddt(SBOX).entries == _ddt_oracle(SBOX)


def test_lat_matches_oracle_entry_for_entry():
    assert compute_lat(SBOX).entries == _lat_oracle(SBOX)


def test_ddt_random_sboxes_match_oracle():
    rng = random.Random(2)
    for _ in range(5):
        sbox = list(range(16))
        rng.shuffle(sbox)
        assert compute_ddt(sbox).entries == _ddt_oracle(sbox)
        assert compute_lat(sbox).entries == _lat_oracle(sbox)


def test_ddt_zero_difference_row():
    ddt = compute_ddt(SBOX).entries
    assert ddt[0][0] == 16
    assert all(ddt[0][b] == 0 for b in range(1, 16))


def test_ddt_row_sums():
    ddt = compute_ddt(SBOX).entries
    assert all(sum(row) == 16 for row in ddt)


def test_ddt_entries_even():
    ddt = compute_ddt(SBOX).entries
    assert all(v % 2 == 0 for row in ddt for v in row)


def test_ddt_max_nontrivial_is_4():
    assert compute_ddt(SBOX).max_nontrivial() == 4


def test_identity_sbox_ddt_is_diagonal():
    ddt = compute_ddt(list(range(16))).entries
    for a in range(16):
        for b in range(16):
            assert ddt[a][b] == (16 if a == b else 0)


def test_lat_empty_masks():
    lat = compute_lat(SBOX).entries
    assert lat[0][0] == 8


def test_lat_zero_input_mask_balanced():
    # nonzero linear forms of a permutation are balanced
    lat = compute_lat(SBOX).entries
    assert all(lat[0][b] == 0 for b in range(1, 16))
    assert all(lat[a][0] == 0 for a in range(1, 16))


def test_lat_max_nontrivial_is_4():
    assert compute_lat(SBOX).max_nontrivial() == 4


def test_eight_bit_sbox_supported():
    sbox = [(x * 167 + 13) % 256 for x in range(256)]  # affine-ish permutation
    assert len(set(sbox)) == 256
    ddt = compute_ddt(sbox)
    assert all(sum(row) == 256 for row in ddt.entries)
    lat = compute_lat(sbox)
    assert lat.entries[0][0] == 128


def test_non_bijective_sbox_flagged():
    sbox = [0] * 16
    with pytest.warns(UserWarning):
        ddt = compute_ddt(sbox)
    assert not ddt.sbox_bijective
    assert ddt.entries[1][0] == 16  # every difference collapses to zero


def test_oversized_sbox_rejected():
    with pytest.raises(ValueError):
        compute_ddt(list(range(512)))


def test_csv_shape():
    csv = compute_ddt(SBOX).to_csv()
    rows = csv.strip().split("\n")
    assert len(rows) == 16
    assert all(len(r.split(",")) == 16 for r in rows)
