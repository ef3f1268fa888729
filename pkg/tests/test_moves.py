import random

import pytest

from cleavedpa.moves import STRAIGHT, embed_pair, local_pairs, orient_pair, r1_pairs
from cleavedpa.tangle import partition_tangle, unshifted_partition, validate_tangle


def test_all_kinks_found():
    pairs = r1_pairs()
    assert len(pairs) == 16
    for kink, straight in pairs:
        validate_tangle(kink, strict=True)
        assert straight == STRAIGHT


@pytest.mark.parametrize("move", ["R1", "R2", "R3"])
def test_local_pairs_agree_after_shift(move):
    rng = random.Random(61)
    for left, right in local_pairs(move):
        a, b = orient_pair(left, right, rng)
        assert partition_tangle(a) == partition_tangle(b)


@pytest.mark.parametrize("move", ["R1", "R2"])
def test_unshifted_maps_differ(move):
    # the sides are genuinely different diagrams: the unshifted sums disagree
    for left, right in local_pairs(move):
        assert unshifted_partition(left) != unshifted_partition(right)


@pytest.mark.parametrize("move", ["R1", "R2", "R3"])
def test_embedded_moves(move):
    rng = random.Random({"R1": 71, "R2": 72, "R3": 73}[move])
    pairs = local_pairs(move)
    for t in range(10):
        A, B = embed_pair(*pairs[t % len(pairs)], rng)
        validate_tangle(A, strict=True)
        assert len(A.crossings) - len(B.crossings) == len(pairs[0][0].crossings) - len(pairs[0][1].crossings)
        assert partition_tangle(A) == partition_tangle(B)
