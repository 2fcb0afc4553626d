import random

import pytest

from lwckit.registry import get_spec


class IdentityStub:
    """Minimal encrypt-capable object: output equals input."""

    block_bits = 64

    def encrypt_block(self, block: int) -> int:
        return block


def random_key(spec_id: str, rng: random.Random) -> bytes:
    spec = get_spec(spec_id)
    return rng.getrandbits(spec.key_bits).to_bytes(spec.key_bits // 8, "big")


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


@pytest.fixture
def identity_stub():
    return IdentityStub()
