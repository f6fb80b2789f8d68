from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import dfs_prefix_before_backtrack
from parkstat.errors import InvalidTree, ResourceCap
from parkstat.trees import RootedTree, all_trees, leg, leg_path, prufer_decode, prufer_encode

# tree of the worked burning example, edges away from 0
EXAMPLE_TREE = RootedTree.from_edges(
    9, [(0, 8), (8, 4), (4, 3), (3, 9), (9, 6), (6, 7), (9, 1), (1, 2), (3, 5)]
)


@st.composite
def trees(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    code = draw(st.lists(st.integers(0, n), min_size=n - 1, max_size=n - 1))
    return prufer_decode(code, n)


def test_tree_validation():
    with pytest.raises(InvalidTree):
        RootedTree([2, 1])  # 1 <-> 2 cycle
    with pytest.raises(InvalidTree):
        RootedTree([1])  # self loop
    with pytest.raises(InvalidTree):
        RootedTree([5, 0])
    assert RootedTree.parse("3,0,2").edges() == [(0, 2), (2, 3), (3, 1)]


def test_leg_path_examples():
    assert leg_path(RootedTree.from_edges(3, [(0, 2), (2, 3), (3, 1)])) == (2, 3, 1)
    for n in range(1, 6):
        assert leg_path(RootedTree([0] * n)) == (n,)
    assert leg_path(EXAMPLE_TREE) == (8, 4, 3, 9, 6, 7)


def test_leg_examples():
    assert leg(RootedTree([0, 0, 0])) == 1
    assert leg(RootedTree.from_edges(3, [(0, 3), (3, 2), (2, 1)])) == 3


def test_table_census_n3():
    assert Counter(leg(t) for t in all_trees(3)) == {1: 4, 2: 6, 3: 6}


@pytest.mark.parametrize("n, count", [(1, 1), (2, 3), (3, 16), (4, 125), (5, 1296)])
def test_all_trees_counts(n, count):
    ts = list(all_trees(n))
    assert len(ts) == count == len(set(ts))


def test_all_trees_n1():
    assert list(all_trees(1)) == [RootedTree([0])]


@pytest.mark.parametrize("n", range(1, 7))
def test_prufer_roundtrip(n):
    codes = set()
    for t in all_trees(n):
        code = prufer_encode(t)
        assert prufer_decode(code, n) == t
        codes.add(code)
    assert len(codes) == (n + 1) ** (n - 1)


def test_cap():
    with pytest.raises(ResourceCap):
        next(all_trees(12))


@pytest.mark.parametrize("n", range(1, 6))
def test_leg_path_matches_generic_dfs(n):
    for t in all_trees(n):
        assert leg_path(t) == dfs_prefix_before_backtrack(n, t.edges())


@pytest.mark.parametrize("n", range(1, 6))
def test_leg_mass(n):
    hist = Counter(leg(t) for t in all_trees(n))
    assert sum(hist.values()) == (n + 1) ** (n - 1)
    assert min(hist) >= 1 and max(hist) <= n


@given(trees())
def test_leg_path_is_a_walk_from_root(t):
    path = leg_path(t)
    adj = t.adjacency()
    assert len(set(path)) == len(path)
    assert path[0] in adj[0]
    for u, v in zip(path, path[1:]):
        assert v in adj[u]
    assert 1 <= leg(t) <= t.n


@given(trees())
def test_leg_n_iff_hamiltonian_path_from_root(t):
    is_path_from_root = all(len(t.children(v)) <= 1 for v in range(t.n + 1))
    assert (leg(t) == t.n) == is_path_from_root


@given(trees())
def test_dot_export(t):
    dot = t.to_dot()
    assert dot.startswith("digraph")
    assert dot.count("->") == t.n
    for p, v in t.edges():
        assert f"  {p} -> {v};" in dot
