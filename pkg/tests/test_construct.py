import random

import numpy as np
import pytest

import oracles
from lcdkit import linalg
from lcdkit.codes import EmptyCode, LinearCode, dual, hull, is_lcd, min_weight, new_code, shorten
from lcdkit.construct import (
    M1,
    M2,
    ConstructError,
    NoCandidate,
    NotInDual,
    NotLcd,
    WeightCondition,
    apply_record,
    decompose_m1,
    extend_m1,
    extend_m2,
    extension_vector,
    format_record,
    pad_zero_column,
    parse_record,
    project_split,
    puncture_to_lcd,
    search_extend,
    shorten_to_lcd,
    weight_condition,
)
from lcdkit.gf import GF2, GF3, GF4H

FIELDS = [GF2, GF3, GF4H]


def random_dual_vector(C, rng):
    dgen = dual(C).generator
    if dgen.shape[0] == 0:
        return np.zeros(C.n, dtype=np.uint8)
    coeffs = np.array([rng.randrange(C.field.order) for _ in range(dgen.shape[0])], dtype=np.uint8)
    return oracles.table_matmul(C.field, coeffs.reshape(1, -1), dgen)[0]


def raw_extension_matrix(C, vec, method):
    if method == M1:
        g = np.zeros((C.k + 1, C.n + 1), dtype=np.uint8)
        g[0, 0] = 1
        g[0, 1:] = vec
        g[1:, 1:] = C.generator
    else:
        g = np.vstack([vec.reshape(1, -1), C.generator])
    return g


def test_weight_condition_table():
    assert weight_condition(GF2, M1, 4) and not weight_condition(GF2, M1, 3)
    assert weight_condition(GF2, M2, 3) and not weight_condition(GF2, M2, 4)
    assert weight_condition(GF3, M1, 0) and weight_condition(GF3, M1, 4)
    assert not weight_condition(GF3, M1, 5)  # 5 = 2 mod 3
    assert weight_condition(GF3, M2, 4) and not weight_condition(GF3, M2, 6)
    assert weight_condition(GF4H, M1, 2) and not weight_condition(GF4H, M1, 3)
    assert weight_condition(GF4H, M2, 5) and not weight_condition(GF4H, M2, 2)


def test_shorten_to_lcd_noop_on_lcd():
    c = new_code(GF2, np.eye(3, dtype=np.uint8))
    got, t = shorten_to_lcd(c)
    assert got is c and t == ()


def test_shorten_to_lcd_small_example():
    c = new_code(GF2, [[1, 1, 0], [0, 0, 1]])
    h = hull(c)
    assert h.dim == 1 and h.pivot_set == (0,)
    got, t = shorten_to_lcd(c)
    assert t == (0,)
    assert got.params() == (2, 1)
    # oracle: codewords zero on coordinate 0, restricted
    words = oracles.codeword_array(c)
    expected = set(map(tuple, words[words[:, 0] == 0][:, 1:].tolist()))
    assert oracles.codeword_set(got) == expected
    assert is_lcd(got)


def test_shorten_to_lcd_self_orthogonal_errors():
    c = new_code(GF2, [[1, 1, 0, 0], [0, 0, 1, 1]])
    assert hull(c).dim == 2
    with pytest.raises(EmptyCode):
        shorten_to_lcd(c)


@pytest.mark.parametrize("f", FIELDS)
def test_shorten_to_lcd_contract_sweep(f):
    rng = random.Random(101)
    done = 0
    while done < 60:
        k = rng.randrange(2, 7)
        n = rng.randrange(k + 1, 13)
        c = oracles.random_code(f, n, k, rng)
        l = hull(c).dim
        if l == 0 or l == k:
            continue
        done += 1
        d = oracles.brute_min_weight(c)
        got, t = shorten_to_lcd(c)
        assert len(t) == l
        assert got.params() == (n - l, k - l)
        assert is_lcd(got)
        assert oracles.brute_min_weight(got) >= d


@pytest.mark.parametrize("f", FIELDS)
def test_puncture_to_lcd_contract_sweep(f):
    rng = random.Random(103)
    done = 0
    while done < 40:
        k = rng.randrange(2, 6)
        n = rng.randrange(k + 2, 13)
        c = oracles.random_code(f, n, k, rng)
        l = hull(c).dim
        d = oracles.brute_min_weight(c)
        if not 1 <= l < d:
            continue
        done += 1
        got, t = puncture_to_lcd(c)
        assert got.params() == (n - l, k)
        assert is_lcd(got)
        assert oracles.brute_min_weight(got) >= d - l
        # dual-side identity: dual of the punctured code is the shortened dual
        try:
            ds, t2 = shorten_to_lcd(dual(c))
        except EmptyCode:
            assert dual(got).k == 0  # dual was self-orthogonal
            continue
        assert t2 == t
        assert dual(got).same_code(ds)


def test_puncture_to_lcd_requires_hull_below_distance():
    # hull dimension 1 equals the minimum distance: no dimension guarantee
    c = new_code(GF2, [[1, 1, 0], [0, 0, 1]])
    assert hull(c).dim == 1
    assert oracles.brute_min_weight(c) == 1
    with pytest.raises(ConstructError):
        puncture_to_lcd(c)


def test_extend_m1_requires_lcd_dual_membership_and_weight():
    non_lcd = new_code(GF2, [[1, 1, 0], [0, 0, 1]])
    with pytest.raises(NotLcd):
        extend_m1(non_lcd, np.zeros(3, dtype=np.uint8))
    c = new_code(GF2, [[1, 0, 1], [0, 1, 1]])
    assert is_lcd(c)
    with pytest.raises(NotInDual):
        extend_m1(c, np.array([1, 0, 0], dtype=np.uint8))
    # dual is spanned by (1,1,1): weight 3 is odd, method 1 must refuse
    with pytest.raises(WeightCondition):
        extend_m1(c, np.array([1, 1, 1], dtype=np.uint8))
    got = extend_m2(c, np.array([1, 1, 1], dtype=np.uint8))
    assert got.params() == (3, 3)


def test_extend_m1_zero_vector_degenerates():
    c = new_code(GF2, np.eye(3, dtype=np.uint8))
    with pytest.warns(UserWarning):
        got = extend_m1(c, np.zeros(3, dtype=np.uint8))
    assert got.params() == (4, 4)
    assert is_lcd(got)
    assert min_weight(got) == 1


@pytest.mark.parametrize("f", FIELDS)
def test_extension_forward_and_converse(f):
    # valid weight -> LCD extension; violating weight -> provably non-LCD
    rng = random.Random(107)
    for method in (M1, M2):
        good = bad = 0
        while good < 40 or bad < 40:
            k = rng.randrange(1, 5)
            n = rng.randrange(k + 1, 10)
            c = oracles.random_lcd_code(f, n, k, rng)
            v = random_dual_vector(c, rng)
            w = int((v != 0).sum())
            if method == M2 and w == 0:
                continue
            if weight_condition(f, method, w):
                if good >= 40:
                    continue
                good += 1
                got = extend_m1(c, v) if method == M1 else extend_m2(c, v)
                assert is_lcd(got)
                assert got.params() == ((n + 1, k + 1) if method == M1 else (n, k + 1))
            else:
                if bad >= 40:
                    continue
                bad += 1
                raw = raw_extension_matrix(c, v, method)
                assert linalg.rank(raw, f) == k + 1
                assert not is_lcd(LinearCode(f, raw))


def test_extend_m1_gram_block_structure():
    rng = random.Random(109)
    for f in FIELDS:
        for _ in range(20):
            c = oracles.random_lcd_code(f, 8, 3, rng)
            v = random_dual_vector(c, rng)
            if not weight_condition(f, M1, int((v != 0).sum())):
                continue
            got = extend_m1(c, v)
            g = linalg.gram(got.generator, f)
            self_pair = 0
            for a in v:
                self_pair = int(f.add(self_pair, f.mul(int(a), int(f.conj(int(a))))))
            assert g[0, 0] == f.add(1, self_pair) != 0
            assert not g[0, 1:].any() and not g[1:, 0].any()
            assert np.array_equal(g[1:, 1:], linalg.gram(c.generator, f))


def test_extension_round_trips():
    rng = random.Random(113)
    for f in FIELDS:
        for _ in range(20):
            c = oracles.random_lcd_code(f, 7, 3, rng)
            v = random_dual_vector(c, rng)
            w = int((v != 0).sum())
            if weight_condition(f, M1, w):
                ext = extend_m1(c, v)
                assert shorten(ext, (0,)).same_code(c)
            if w and weight_condition(f, M2, w):
                ext = extend_m2(c, v)
                assert np.array_equal(ext.generator[1:], c.generator)


def test_pad_zero_column():
    c = new_code(GF2, np.eye(2, dtype=np.uint8))
    got = pad_zero_column(c)
    assert got.params() == (3, 2)
    assert is_lcd(got)
    assert min_weight(got) == 1
    rng = random.Random(127)
    for f in FIELDS:
        for _ in range(15):
            c = oracles.random_code(f, 8, 3, rng)
            p = pad_zero_column(c)
            assert np.array_equal(linalg.gram(p.generator, f), linalg.gram(c.generator, f))
            assert min_weight(p) == oracles.brute_min_weight(c)
            assert is_lcd(p) == is_lcd(c)


def test_project_split_members():
    rng = random.Random(131)
    for f in FIELDS:
        c = oracles.random_lcd_code(f, 8, 3, rng)
        dgen = dual(c).generator
        v_in = oracles.codeword_array(c)[5]
        cc, hh = project_split(v_in, c)
        assert np.array_equal(cc, v_in) and not hh.any()
        coeffs = np.array([1 + rng.randrange(f.order - 1) for _ in range(dgen.shape[0])], dtype=np.uint8)
        v_dual = oracles.table_matmul(f, coeffs.reshape(1, -1), dgen)[0]
        cc, hh = project_split(v_dual, c)
        assert not cc.any() and np.array_equal(hh, v_dual)


def test_project_split_random():
    rng = random.Random(137)
    for f in FIELDS:
        for _ in range(30):
            c = oracles.random_lcd_code(f, 9, 4, rng)
            v = np.array([rng.randrange(f.order) for _ in range(9)], dtype=np.uint8)
            cc, hh = project_split(v, c)
            assert np.array_equal(f.add_table[cc, hh], v)
            assert not oracles.pairings_with_generator(c, hh.reshape(1, -1)).any()
            assert linalg.solve_rowspace(c.generator, cc, f) is not None


def test_project_split_requires_lcd():
    c = new_code(GF2, [[1, 1, 0], [0, 0, 1]])
    with pytest.raises(NotLcd):
        project_split(np.zeros(3, dtype=np.uint8), c)


def test_decompose_recovers_extension_at_front():
    rng = random.Random(139)
    for _ in range(25):
        c = oracles.random_lcd_code(GF2, 8, 3, rng)
        v = random_dual_vector(c, rng)
        if int((v != 0).sum()) % 2:
            continue
        ext = extend_m1(c, v)
        i, back, x = decompose_m1(ext)
        assert i == 0
        assert back.same_code(c)
        assert np.array_equal(x, v)


def test_decompose_preconditions():
    with pytest.raises(ConstructError):
        decompose_m1(new_code(GF3, [[1, 0], [0, 1]]))
    with pytest.raises(ConstructError):
        decompose_m1(new_code(GF2, [[1, 0]]))  # k < 2
    even_like = new_code(GF2, [[1, 1, 0, 0], [0, 1, 1, 0]])
    assert is_lcd(even_like)
    with pytest.raises(ConstructError):
        decompose_m1(even_like)


def test_decompose_round_trip_distribution():
    from lcdkit.codes import weight_distribution

    rng = random.Random(149)
    done = 0
    while done < 30:
        k = rng.randrange(2, 6)
        n = rng.randrange(k, 11)
        c = oracles.random_code(GF2, n, k, rng)
        from lcdkit.codes import is_even_like

        if not is_lcd(c) or is_even_like(c):
            continue
        done += 1
        i, base, x = decompose_m1(c)
        assert base.params() == (n - 1, k - 1)
        assert is_lcd(base)
        assert oracles.brute_min_weight(base) >= oracles.brute_min_weight(c)
        rebuilt = extend_m1(base, x)
        assert weight_distribution(rebuilt).counts == weight_distribution(c).counts


def test_search_no_candidate_for_m2_on_universe():
    c = new_code(GF2, np.eye(4, dtype=np.uint8))
    with pytest.raises(NoCandidate):
        search_extend(c, M2, budget=100, seed=1)


def test_search_beats_random_candidates():
    rng = random.Random(151)
    for f in FIELDS:
        for _ in range(4):
            c = oracles.random_lcd_code(f, 8, 4, rng)
            for method in (M1, M2):
                try:
                    res = search_extend(c, method, budget=10_000, seed=7)
                except NoCandidate:
                    continue
                assert res.exact and res.exhaustive
                assert min_weight(res.code) == res.min_weight
                # no sampled valid candidate may beat the search result
                for _ in range(100):
                    v = random_dual_vector(c, rng)
                    w = int((v != 0).sum())
                    if not weight_condition(f, method, w) or (method == M2 and w == 0):
                        continue
                    other = extend_m1(c, v) if method == M1 else extend_m2(c, v)
                    assert min_weight(other) <= res.min_weight


def test_search_deterministic():
    rng = random.Random(157)
    c = oracles.random_lcd_code(GF3, 9, 3, rng)
    a = search_extend(c, M1, budget=50, seed=42)
    b = search_extend(c, M1, budget=50, seed=42)
    assert np.array_equal(a.vector, b.vector) and a.min_weight == b.min_weight
    assert not a.exhaustive  # 3^6 > 50 forces sampling


def test_ternary_hull_growth_under_shortening():
    rng = random.Random(163)
    for _ in range(40):
        k = rng.randrange(2, 6)
        n = rng.randrange(k + 1, 11)
        c = oracles.random_code(GF3, n, k, rng)
        l = hull(c).dim
        for i in range(n):
            try:
                s = shorten(c, (i,))
            except EmptyCode:
                continue
            assert hull(s).dim <= l + 1


def test_search_exhaustive_ternary_19_6_9_reaches_9():
    # full search over the 3^13 dual of the stored [19,6,9] code: the best
    # method-1 extension reaches minimum distance exactly 9
    from lcdkit import corpus

    c = corpus.resolve_code("t_19_6_9")
    res = search_extend(c, M1, target=9, budget=3**13, seed=0)
    assert res.exhaustive and res.exact
    assert res.min_weight == 9
    assert res.target_met
    assert res.code.params() == (20, 7)
    assert min_weight(res.code) == 9


def test_record_roundtrip_and_replay():
    text = "# chain\nbase start\nextend-m2 111\npad\nshorten 1\n"
    rec = parse_record(text)
    assert rec.base == "start"
    assert [s.op for s in rec.steps] == ["extend-m2", "pad", "shorten"]
    assert format_record(rec) == "base start\nextend-m2 111\npad\nshorten 1\n"
    base = new_code(GF2, [[1, 0, 1], [0, 1, 1]])
    out = apply_record(rec, base)
    assert [c.params() for c in out] == [(3, 3), (4, 3), (3, 2)]


def test_record_parse_errors():
    with pytest.raises(ConstructError):
        parse_record("shorten 1\n")  # step before base
    with pytest.raises(ConstructError):
        parse_record("base a\nbase b\n")
    with pytest.raises(ConstructError):
        parse_record("base a\nshorten 0\n")  # 1-based coordinates
    with pytest.raises(ConstructError):
        parse_record("base a\nfrobnicate 1\n")
    with pytest.raises(ConstructError):
        parse_record("")


def test_extension_vector_validation():
    c = new_code(GF2, [[1, 0, 1], [0, 1, 1]])
    ev = extension_vector(c, [1, 1, 1], M2)
    assert ev.weight == 3 and ev.method == M2
    with pytest.raises(ConstructError):
        extend_m1(c, ev)  # method mismatch
