import random

import pytest

import oracles
from lcdkit.enumeration import (
    BudgetExceeded,
    _information_set_chain,
    _scan_worker,
    add_packed,
    min_weight_exhaustive,
    pack_rows_scaled,
    pack_vector,
    packed_weight,
    weight_distribution_exhaustive,
)
from lcdkit.gf import GF2, GF3, GF4H
from lcdkit.linalg import rank


def _payload(f, G):
    if f.order == 2:
        return [int(p[0]) for p in (pack_vector(2, row) for row in G)]
    return pack_rows_scaled(f, G)


def test_pack_vector_weight():
    assert packed_weight(pack_vector(2, [1, 0, 1, 1])) == 3
    assert packed_weight(pack_vector(3, [0, 1, 2, 2, 0])) == 3
    assert packed_weight(pack_vector(4, [0, 1, 2, 3])) == 3


def test_add_packed_matches_field_add():
    rng = random.Random(21)
    for f in (GF2, GF3, GF4H):
        mask = (1 << 12) - 1
        for _ in range(100):
            a = [rng.randrange(f.order) for _ in range(12)]
            b = [rng.randrange(f.order) for _ in range(12)]
            expect = [int(f.add(x, y)) for x, y in zip(a, b)]
            got = add_packed(f.order, pack_vector(f.order, a), pack_vector(f.order, b), mask)
            assert got == pack_vector(f.order, expect)


@pytest.mark.parametrize("f,k,n", [(GF2, 9, 14), (GF3, 6, 11), (GF4H, 5, 10)])
def test_partitioned_scan_consistency(f, k, n):
    # the mid-range start-state computation must agree with a full scan,
    # including split points that land mid-carry in the radix odometer
    rng = random.Random(9)
    c = oracles.random_code(f, n, k, rng)
    q = f.order
    total = q**k
    payload = _payload(f, c.generator)
    full_best, full_counts = _scan_worker((q, payload, n, 0, total, True))
    assert full_counts == oracles.brute_weight_counts(c)
    for split in (1, q - 1, q**2, total // 3, total // 2 + 7, total - 1):
        b1, c1 = _scan_worker((q, payload, n, 0, split, True))
        b2, c2 = _scan_worker((q, payload, n, split, total - split, True))
        assert min(b1, b2) == full_best
        assert [x + y for x, y in zip(c1, c2)] == full_counts


def test_information_set_chain_disjoint_blocks():
    rng = random.Random(33)
    for f in (GF2, GF3, GF4H):
        c = oracles.random_code(f, 13, 5, rng)
        chain = _information_set_chain(f, c.generator)
        assert chain
        assert chain[0][1] == 0  # the first matrix is fully systematic
        for mat, deficit in chain:
            assert 0 <= deficit < c.k
            assert rank(mat, f) == c.k


def test_bz_agrees_at_moderate_scale():
    # wide enough for two full-rank systematic blocks, so the early-stop
    # lower bound actually drives termination
    rng = random.Random(47)
    for f, n, k in [(GF2, 30, 15), (GF3, 18, 7), (GF4H, 16, 6)]:
        c = oracles.random_code(f, n, k, rng)
        from lcdkit.enumeration import min_weight_bz

        assert min_weight_bz(f, c.generator) == min_weight_exhaustive(f, c.generator)


def test_caps_and_budget():
    rng = random.Random(35)
    c = oracles.random_code(GF2, 12, 9, rng)
    with pytest.raises(BudgetExceeded):
        weight_distribution_exhaustive(GF2, c.generator, cap=10)
    with pytest.raises(BudgetExceeded) as exc:
        min_weight_exhaustive(GF2, c.generator, cap=16)
    assert exc.value.best_upper is not None
    d = min_weight_exhaustive(GF2, c.generator)
    assert exc.value.best_upper >= d
