"""Bijections between trees, parking functions and rook words.

* ``dfs_burn`` / ``unburn``: the DFS-burning algorithm on the complete graph
  (parking function -> tree), and its inverse.
* ``t_code`` / ``t_decode``: permutations of [k] <-> [1] x [2] x ... x [k].
* ``phi`` / ``psi``: mutually inverse maps on [n]^n trading center for run.
* ``cyclic_to_rook``: the cyclic shift taking a parking function to a rook
  word of the same type.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CodeOutOfRange, NotParking
from .trees import RootedTree
from .words import Word, center, is_parking, is_rook, run_set


@dataclass(frozen=True)
class BurnTrace:
    tree: RootedTree
    burnt_order: tuple[int, ...]
    dampened_edges: tuple[tuple[int, int], ...]
    tree_edges: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {
            "tree": str(self.tree),
            "burnt_order": list(self.burnt_order),
            "dampened_edges": [list(e) for e in self.dampened_edges],
        }


def _sweep(n, on_unburnt):
    """Run the DFS sweep of the burning algorithm.

    ``on_unburnt(i, j)`` is called whenever ``dfs_from(i)`` meets an unburnt
    vertex ``j`` and returns True to burn it.  The recursion is kept on an
    explicit stack of ``(vertex, next neighbour to look at)`` frames.
    """
    burnt = [False] * (n + 1)
    burnt[0] = True
    order = [0]
    tree_edges = []
    stack = [[0, n]]
    while stack:
        frame = stack[-1]
        i, j = frame
        # neighbours of i in the complete graph, largest first
        while j >= 1 and (j == i or burnt[j]):
            j -= 1
        if j < 1:
            stack.pop()
            continue
        frame[1] = j - 1
        if on_unburnt(i, j):
            burnt[j] = True
            order.append(j)
            tree_edges.append((i, j))
            stack.append([j, n])
    return order, tree_edges


def dfs_burn(w: Sequence[int]) -> BurnTrace:
    """Run the DFS-burning algorithm with potential ``a_j - 1`` on each vertex."""
    n = len(w)
    potential = [0] + [a - 1 for a in w]
    dampened = []

    def burn_or_dampen(i, j):
        if potential[j] == 0:
            return True
        potential[j] -= 1
        dampened.append((i, j))
        return False

    order, tree_edges = _sweep(n, burn_or_dampen)
    if len(order) != n + 1:
        unburnt = sorted(set(range(n + 1)) - set(order))
        raise NotParking(f"{Word(w)} is not a parking function; vertices {unburnt} never burn")
    parent = [0] * n
    for i, j in tree_edges:
        parent[j - 1] = i
    return BurnTrace(RootedTree(parent), tuple(order), tuple(dampened), tuple(tree_edges))


def unburn(t: RootedTree) -> Word:
    """The parking function whose burning produces ``t``.

    Re-runs the sweep with the tree deciding each burn: vertex ``j`` burns when
    reached from its parent, and every earlier encounter is one dampening.
    """
    n = t.n
    hits = [0] * (n + 1)

    def follow_tree(i, j):
        if t.parent[j - 1] == i:
            return True
        hits[j] += 1
        return False

    order, _ = _sweep(n, follow_tree)
    assert len(order) == n + 1
    return Word._trusted(tuple(h + 1 for h in hits[1:]))


# ---------------------------------------------------------------- t-code


def t_code(p: Sequence[int]) -> tuple[int, ...]:
    """``f_v`` = number of entries ``<= v`` up to and including the position of ``v``."""
    k = len(p)
    if sorted(p) != list(range(1, k + 1)):
        raise ValueError(f"{tuple(p)} is not a permutation of [1..{k}]")
    f = [0] * (k + 1)
    for i, v in enumerate(p):
        f[v] = sum(1 for u in p[: i + 1] if u <= v)
    return tuple(f[1:])


def t_decode(c: Sequence[int]) -> tuple[int, ...]:
    # insert 1, 2, ..., k in turn; when j arrives only smaller values are
    # present, and exactly c_j - 1 of them must stay in front of it
    for j, cj in enumerate(c, 1):
        if not isinstance(cj, int) or not 1 <= cj <= j:
            raise CodeOutOfRange(f"code entry {j} is {cj!r}, must lie in [1, {j}]")
    out: list[int] = []
    for j, cj in enumerate(c, 1):
        out.insert(cj - 1, j)
    return tuple(out)


# ---------------------------------------------------------------- phi and psi


def _apply(perm: dict[int, int], a: int) -> int:
    try:
        return perm[a]
    except KeyError:
        raise RuntimeError(f"relabelling applied outside its domain at {a}") from None


def phi(w: Sequence[int]) -> Word:
    """Map sending the center of ``w`` to the run set of the image."""
    n = len(w)
    Z = center(w)
    if not Z:
        return Word._trusted(tuple(w))
    k = len(Z)
    b = t_decode([w[i - 1] for i in Z])
    # sigma: 1 -> k+1, j -> b_{j-1} for 2 <= j <= k+1, identity above.
    # Only letters outside Z are relabelled, and those are never 1 when k = n.
    sigma = {j: j for j in range(k + 2, n + 1)}
    for j in range(2, min(k + 1, n) + 1):
        sigma[j] = b[j - 2]
    if k + 1 <= n:
        sigma[1] = k + 1
    out = [0] * n
    pos = {i: ell for ell, i in enumerate(Z)}
    for j in range(1, n + 1):
        if j in pos:
            out[j - 1] = b[pos[j]]
        else:
            out[j - 1] = _apply(sigma, w[j - 1])
    return Word._trusted(out)


def psi(w: Sequence[int]) -> Word:
    """Inverse of :func:`phi`: sends the run set of ``w`` to the center of the image."""
    n = len(w)
    R = run_set(w)
    if not R:
        return Word._trusted(tuple(w))
    k = len(R)
    vals = [w[i - 1] for i in R]
    c = t_code(vals)
    # tau: a_{i_l} -> l+1, k+1 -> 1, identity above
    tau = {j: j for j in range(k + 2, n + 1)}
    for ell, v in enumerate(vals, 1):
        if ell + 1 <= n:
            tau[v] = ell + 1
    if k + 1 <= n:
        tau[k + 1] = 1
    out = [0] * n
    pos = {i: ell for ell, i in enumerate(R)}
    for j in range(1, n + 1):
        if j in pos:
            out[j - 1] = c[pos[j]]
        else:
            out[j - 1] = _apply(tau, w[j - 1])
    return Word._trusted(out)


# ---------------------------------------------------------------- cyclic shift


def cyclic_to_rook(w: Sequence[int]) -> Word:
    """Shift a parking function cyclically onto a rook word of the same type.

    With ``m`` the largest missing value not exceeding ``a_1``, every letter is
    shifted down by ``m`` modulo ``n + 1``.  Since ``m`` never occurs, no letter
    lands on 0, and the shift rotates the coimage.  Reducing modulo ``n``
    instead would collide (311 and 122 would both go to 122).
    """
    if not is_parking(w):
        raise NotParking(f"{Word(w)} is not a parking function")
    if is_rook(w):
        return Word._trusted(tuple(w))
    n = len(w)
    image = set(w)
    m = max(v for v in range(1, w[0] + 1) if v not in image)
    return Word._trusted(tuple((a - m) % (n + 1) for a in w))
