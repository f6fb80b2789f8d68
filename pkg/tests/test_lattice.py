import itertools
import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import restricted_count_brute
from parkstat.errors import ParamOutOfRange, SideConditionViolated
from parkstat.lattice import (
    Composition,
    binom,
    compositions,
    compositions_up_to,
    contains,
    count_brute,
    count_det,
    count_pf_coimage,
    count_pf_run_coimage,
    count_rw_coimage,
    cyclic_sum,
    cyclic_terms,
    det,
    enumerate_sequences,
    ladder_matrix,
    lemma_identities,
    random_composition,
    type_count_pf,
    type_count_run,
)
from parkstat.words import OrderedPartition, Word, all_words, coimage, is_parking, is_rook, ordered_partitions, run

parts_st = st.lists(st.integers(1, 6), min_size=1, max_size=5)


def op(text):
    return OrderedPartition.parse(text)


def test_binom_convention():
    assert binom(5, 2) == 10
    assert binom(-1, 0) == 1 and binom(-7, 0) == 1
    assert binom(3, -1) == 0
    assert binom(2, 3) == 0
    assert binom(-2, 1) == 0


def test_det_small():
    assert det([]) == 1
    assert det([[6, 15], [1, 7]]) == 27
    assert det([[0, 1], [1, 0]]) == -1
    assert det([[2, 0, 1], [1, 3, 2], [1, 1, 1]]) == 0
    assert det([[2, 0, 1], [1, 3, 2], [1, 1, 2]]) == 6


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=4, max_size=4))
def test_det_matches_permutation_expansion(m):
    def sign(p):
        inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
        return -1 if inv % 2 else 1

    expected = 0
    for p in itertools.permutations(range(4)):
        term = sign(p)
        for i in range(4):
            term *= m[i][p[i]]
        expected += term
    assert det(m) == expected


def test_composition_type():
    assert Composition.parse("3,1,5,2").cumsum == (3, 4, 9, 11)
    assert Composition((-2, 1)) == (-2, 1)
    with pytest.raises(ParamOutOfRange):
        Composition((1, 0))
    assert Composition.parse("") == ()


def test_enumerate_examples():
    assert list(enumerate_sequences((2, 1))) == [(0, 1, 2), (0, 1, 3), (0, 2, 3)]
    assert list(enumerate_sequences((3,))) == [(0, 1), (0, 2), (0, 3)]
    assert list(enumerate_sequences((0, 2))) == []
    assert list(enumerate_sequences((-1,))) == []
    assert list(enumerate_sequences(())) == [(0,)]


def test_contains_examples():
    assert contains((3, 1, 5, 2), (0, 1, 2, 7, 9))
    # every inequality of the definition holds: 0<1<2<3<9 with bounds 3,4,9,11
    assert contains((3, 1, 5, 2), (0, 1, 2, 3, 9))
    assert not contains((3, 1, 5, 2), (0, 1, 2, 10, 11))
    assert contains((), (0,))
    assert not contains((1,), (0,))


def test_count_examples():
    assert count_brute((2, 1)) == count_det((2, 1)) == 3
    assert count_brute((6, 2)) == count_det((6, 2)) == 27
    assert count_brute(()) == count_det(()) == 1
    assert ladder_matrix((6, 2)) == [[6, 15], [1, 7]]
    assert ladder_matrix((5, 4)) == [[5, 10], [1, 8]]
    assert count_det((5, 4)) == 30
    assert count_det((3,)) == 3


def test_worked_cyclic_sums():
    first = (3, 1, 5, 2, 4)
    second = (2, 1, 7, 3, 2)
    assert [count_det(t) for t in cyclic_terms(first, 3, -3)] == [27, 30, 52, 21, 35]
    assert [count_det(t) for t in cyclic_terms(second, 3, -3)] == [42, 44, 54, 10, 15]
    assert cyclic_sum(first, 3, -3) == cyclic_sum(second, 3, -3) == 165
    assert cyclic_sum(first, 3, -3, count=count_brute) == 165
    # the printed 2x2 determinants of the second example
    mats = [ladder_matrix(t) for t in cyclic_terms(second, 3, -3)]
    assert mats == [[[7, 21], [1, 9]], [[8, 28], [1, 9]], [[9, 36], [1, 10]], [[4, 6], [1, 4]], [[2, 1], [1, 8]]]


def test_cyclic_sum_param_checks():
    with pytest.raises(ParamOutOfRange):
        cyclic_sum((1, 2, 3), 3, 0)
    with pytest.raises(ParamOutOfRange):
        cyclic_sum((1, 2, 3), 0, 0)


def test_count_det_equals_brute_exhaustive():
    for c in compositions_up_to(9):
        assert count_det(c) == count_brute(c) == restricted_count_brute(c)


@pytest.mark.parametrize("first", [-3, -1, 0])
def test_nonpositive_first_part_is_empty(first):
    for rest in [(), (1,), (2, 3)]:
        c = (first,) + rest
        assert count_det(c) == count_brute(c) == 0


def test_lemma_examples():
    # second identity at (2,1): 5 = 3 + 2 ; third: 1 = 3 - 2
    assert lemma_identities((2, 1)) == (None, True, True)
    # first identity at (1,2), i = 1: |<2,1>| = |<1,2>| + |<>| |<1>|
    assert lemma_identities((1, 2), i=1) == (True, True, None)
    assert count_det((2, 2)) == 5 and count_det((1, 1)) == 1


def test_lemma_side_conditions():
    with pytest.raises(SideConditionViolated):
        lemma_identities((2, 1), i=1)  # l_2 = 1
    with pytest.raises(SideConditionViolated):
        lemma_identities((2, 3), i=2)  # i must be < k
    with pytest.raises(SideConditionViolated):
        lemma_identities(())


def test_lemma_random_seeded():
    rng = random.Random(20240917)
    for _ in range(200):
        c = random_composition(rng)
        candidates = [i for i in range(1, len(c)) if c[i] > 1]
        i = rng.choice(candidates) if candidates else None
        flags = lemma_identities(c, i)
        assert all(f is not False for f in flags)
        assert flags[1] is True


@settings(deadline=None, max_examples=60)
@given(parts_st)
def test_lemma_every_index(c):
    for i in range(1, len(c)):
        if c[i] > 1:
            assert lemma_identities(c, i, count=count_brute)[0] is True


@pytest.mark.parametrize("n", range(3, 11))
def test_cyclic_sum_invariance_exhaustive(n):
    for k in range(2, min(4, n - 1) + 1):
        for r, t in [(1, 0), (2, -2), (3, -3)]:
            if r >= k:
                continue
            values = {cyclic_sum(c, r, t) for c in compositions(n, k)}
            assert len(values) == 1, (n, k, r, t, values)


def test_cyclic_sum_invariance_random_n15():
    rng = random.Random(15)

    def random_comp():
        cuts = sorted(rng.sample(range(1, 15), 4))
        return tuple(b - a for a, b in zip([0] + cuts, cuts + [15]))

    for r, t in [(1, 0), (2, -2), (3, -3), (4, -4), (3, 0)]:
        values = {cyclic_sum(random_comp(), r, t) for _ in range(40)}
        assert len(values) == 1


def test_compositions_generator():
    assert list(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
    assert sum(1 for _ in compositions_up_to(9)) == 2**9


# ---------------------------------------------------------------- coimages


def test_coimage_count_examples():
    assert count_pf_coimage(op("{1,2}|{3}")) == 2
    assert count_pf_coimage(op("{1,2,3,4}")) == 1
    assert count_pf_coimage(op("{1}|{2}|{3}|{4}")) == 1
    assert count_pf_run_coimage(op("{1,2}|{3}"), 1) == 1
    assert count_pf_run_coimage(op("{1,2}|{3}"), 2) == 1
    assert count_pf_run_coimage(op("{1}|{2}|{3}"), 3) == 1
    assert count_pf_run_coimage(op("{1}|{2}|{3}"), 4) == 0
    assert count_rw_coimage(op("{2,3}|{1}")) == 1
    assert count_rw_coimage(op("{1,2,3}")) == 1


def test_type_count_examples():
    assert type_count_pf(3, 2) == 3
    assert type_count_run(3, 2, 1) == 1
    assert type_count_run(3, 2, 2) == 2
    assert type_count_run(3, 3, 3) == 3
    with pytest.raises(ParamOutOfRange):
        type_count_pf(3, 4)


def _census(n):
    pf, pfr, rw, rwr = Counter(), Counter(), Counter(), Counter()
    for w in all_words(n):
        c = coimage(w)
        if is_parking(w):
            pf[c] += 1
            pfr[c, run(w)] += 1
        if is_rook(w):
            rw[c] += 1
            rwr[c, run(w)] += 1
    return pf, pfr, rw, rwr


@pytest.mark.parametrize("n", range(1, 6))
def test_coimage_formulas_exhaustive(n):
    pf, pfr, rw, rwr = _census(n)
    total = 0
    for p in ordered_partitions(n):
        assert count_pf_coimage(p) == pf[p]
        assert count_rw_coimage(p) == rw[p]
        for r in range(1, n + 1):
            assert count_pf_run_coimage(p, r) == pfr[p, r]
        total += count_pf_coimage(p)
    assert total == (n + 1) ** (n - 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_type_formulas_exhaustive(n):
    pf, pfr, rw, rwr = _census(n)
    for p in ordered_partitions(n):
        if 1 not in p.blocks[0]:
            continue
        rots = p.rotations()
        assert sum(count_pf_coimage(q) for q in rots) == type_count_pf(n, p.k) == sum(count_rw_coimage(q) for q in rots)
        for r in range(1, n + 1):
            assert sum(count_pf_run_coimage(q, r) for q in rots) == type_count_run(n, p.k, r)
            assert sum(rwr[q, r] for q in rots) == type_count_run(n, p.k, r)


def test_n3_type_class_by_hand():
    pfs = [w for w in all_words(3) if is_parking(w) and coimage(w) in op("{3}|{1,2}").rotations()]
    assert sorted(map(str, pfs)) == ["1,1,2", "1,1,3", "2,2,1"]
    assert sorted(run(w) for w in pfs) == [1, 2, 2]


def test_rook_count_first_block():
    # position 1 in block 2 forces rim to start (0, 1)
    assert [str(w) for w in all_words(3) if is_rook(w) and coimage(w) == op("{2,3}|{1}")] == ["2,1,1"]
    assert count_rw_coimage(op("{2,3}|{1}")) == 1
    assert Word.parse("211") in [w for w in all_words(3) if is_rook(w)]
