"""Rooted labeled trees on {0, ..., n} and the DFS leg statistic."""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from ._caps import check_n
from .errors import InvalidTree, ParseError


class RootedTree:
    """Spanning tree of the complete graph on ``{0..n}``, rooted at 0.

    Stored as a parent list: ``parent[v - 1]`` is the parent of vertex ``v``.
    """

    __slots__ = ("parent", "_children")

    def __init__(self, parent: Iterable[int]):
        parent = tuple(parent)
        n = len(parent)
        if n == 0:
            raise InvalidTree("a tree needs at least one non-root vertex")
        for v, p in enumerate(parent, 1):
            if not isinstance(p, int) or not 0 <= p <= n or p == v:
                raise InvalidTree(f"vertex {v} has invalid parent {p!r}")
        # every vertex must reach the root without revisiting anything
        reaches_root = [False] * (n + 1)
        reaches_root[0] = True
        for v in range(1, n + 1):
            path = []
            u = v
            while not reaches_root[u]:
                if u in path:
                    raise InvalidTree(f"parent list has a cycle through {u}")
                path.append(u)
                u = parent[u - 1]
            for u in path:
                reaches_root[u] = True
        self.parent = parent
        self._children = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "RootedTree":
        """Build from undirected edges, orienting them away from 0."""
        adj: dict[int, list[int]] = {v: [] for v in range(n + 1)}
        count = 0
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
            count += 1
        if count != n:
            raise InvalidTree(f"expected {n} edges, got {count}")
        parent = [None] * (n + 1)
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    parent[v] = u
                    stack.append(v)
        if len(seen) != n + 1:
            raise InvalidTree("edges do not connect every vertex to 0")
        return cls(parent[1:])

    @classmethod
    def parse(cls, text: str) -> "RootedTree":
        try:
            return cls(int(tok) for tok in text.strip().split(","))
        except ValueError:
            raise ParseError(f"cannot parse parent list {text!r}") from None

    @property
    def n(self) -> int:
        return len(self.parent)

    def children(self, v: int) -> list[int]:
        if self._children is None:
            ch: list[list[int]] = [[] for _ in range(self.n + 1)]
            for u, p in enumerate(self.parent, 1):
                ch[p].append(u)
            self._children = ch
        return self._children[v]

    def edges(self) -> list[tuple[int, int]]:
        """Directed ``(parent, child)`` pairs, sorted."""
        return sorted((p, v) for v, p in enumerate(self.parent, 1))

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(self.n + 1)}
        for p, v in self.edges():
            adj[p].add(v)
            adj[v].add(p)
        return adj

    def to_dot(self, name: str = "T") -> str:
        lines = [f"digraph {name} {{"]
        lines.append("  0 [shape=doublecircle];")
        for v in range(1, self.n + 1):
            lines.append(f"  {v};")
        for p, v in self.edges():
            lines.append(f"  {p} -> {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        return isinstance(other, RootedTree) and self.parent == other.parent

    def __hash__(self):
        return hash(self.parent)

    def __str__(self) -> str:
        return ",".join(map(str, self.parent))

    def __repr__(self) -> str:
        return f"RootedTree({str(self)})"


def leg_path(t: RootedTree) -> tuple[int, ...]:
    """Vertices visited by highest-label-first DFS from 0 before it first backtracks.

    Away from the root, the unvisited neighbours of a vertex on the walk are
    exactly its children, so the walk follows the largest child until a leaf.
    """
    path = []
    v = 0
    while True:
        ch = t.children(v)
        if not ch:
            return tuple(path)
        v = max(ch)
        path.append(v)


def leg(t: RootedTree) -> int:
    return len(leg_path(t))


# ---------------------------------------------------------------- Prufer codes
# Convention: repeatedly delete the largest leaf other than 0 and record its
# neighbour.  Vertex 0 is never deleted, so codes have length n - 1 over {0..n}.


def prufer_encode(t: RootedTree) -> tuple[int, ...]:
    n = t.n
    adj = t.adjacency()
    degree = {v: len(adj[v]) for v in adj}
    code = []
    for _ in range(n - 1):
        leaf = max(v for v in range(1, n + 1) if degree[v] == 1)
        (nb,) = adj[leaf]
        code.append(nb)
        adj[nb].discard(leaf)
        adj[leaf].clear()
        degree[leaf] = 0
        degree[nb] -= 1
    return tuple(code)


def prufer_decode(code: Sequence[int], n: int) -> RootedTree:
    if len(code) != n - 1 or any(not 0 <= c <= n for c in code):
        raise InvalidTree(f"invalid Prufer code {tuple(code)} for n={n}")
    degree = [1] * (n + 1)
    for c in code:
        degree[c] += 1
    edges = []
    for c in code:
        leaf = max(v for v in range(1, n + 1) if degree[v] == 1)
        edges.append((leaf, c))
        degree[leaf] = 0
        degree[c] -= 1
    (last,) = [v for v in range(1, n + 1) if degree[v] == 1]
    edges.append((last, 0))
    return RootedTree.from_edges(n, edges)


def all_trees(n: int, prefix: Sequence[int] = (), cap=None) -> Iterator[RootedTree]:
    """All (n+1)^(n-1) trees, in lexicographic order of their Prufer codes."""
    check_n(n, cap)
    prefix = tuple(prefix)
    if len(prefix) > max(n - 1, 0):
        raise InvalidTree(f"prefix {prefix} too long for n={n}")
    for tail in itertools.product(range(n + 1), repeat=n - 1 - len(prefix)):
        yield prufer_decode(prefix + tail, n)
