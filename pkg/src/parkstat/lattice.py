"""Restricted increasing sequences under a ladder boundary.

For parts ``(l_1, ..., l_k)`` with partial sums ``L_i``, the set ``<l_1..l_k>``
holds the chains ``0 = x_0 < x_1 < ... < x_k`` with ``x_i <= L_i``.  These are
lattice paths below a staircase, so their number is a determinant of
binomials.  The coimage counts for parking functions and rook words reduce
to such counts.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Iterator, Sequence

from .errors import ParamOutOfRange, ParseError, ResourceCap, SideConditionViolated
from .words import OrderedPartition

DEFAULT_LIMIT = 10**7


class Composition(tuple):
    """Parts ``(l_1, ..., l_k)``; every part after the first must be positive.

    The first part may be any integer because shifted first parts show up in
    cyclic sums; a nonpositive first part gives the empty set.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for i, p in enumerate(parts):
            if not isinstance(p, int):
                raise ParamOutOfRange(f"part {i + 1} is not an integer: {p!r}")
            if i > 0 and p < 1:
                raise ParamOutOfRange(f"part {i + 1} = {p} must be positive")
        return tuple.__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Composition":
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(int(tok) for tok in text.split(","))
        except ValueError:
            raise ParseError(f"cannot parse composition {text!r}") from None

    @property
    def k(self) -> int:
        return len(self)

    @property
    def cumsum(self) -> tuple[int, ...]:
        return tuple(itertools.accumulate(self))

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Composition({str(self)})"


def binom(m: int, j: int) -> int:
    """Subset-counting binomial: ``binom(m, 0) = 1`` for every integer ``m``,
    zero for ``j < 0`` and for ``j > 0`` with ``m < j``."""
    if j < 0:
        return 0
    if j == 0:
        return 1
    if m < j:
        return 0
    num = 1
    for i in range(j):
        num = num * (m - i) // (i + 1)
    return num


def det(matrix: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for p in range(n - 1):
        if a[p][p] == 0:
            swap = next((r for r in range(p + 1, n) if a[r][p] != 0), None)
            if swap is None:
                return 0
            a[p], a[swap] = a[swap], a[p]
            sign = -sign
        for i in range(p + 1, n):
            for j in range(p + 1, n):
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) // prev
        prev = a[p][p]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------- the sets


def enumerate_sequences(c: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All ``(0, x_1, ..., x_k)`` in ``<c>``, lexicographically."""
    c = Composition(c)
    L = c.cumsum
    k = len(c)
    seq = [0]

    def rec(i):
        if i == k:
            yield tuple(seq)
            return
        for x in range(seq[-1] + 1, L[i] + 1):
            seq.append(x)
            yield from rec(i + 1)
            seq.pop()

    yield from rec(0)


def contains(c: Sequence[int], s: Sequence[int]) -> bool:
    c = Composition(c)
    L = c.cumsum
    if len(s) != len(c) + 1 or s[0] != 0:
        return False
    return all(s[i - 1] < s[i] <= L[i - 1] for i in range(1, len(s)))


def count_brute(c: Sequence[int], limit: int | None = DEFAULT_LIMIT) -> int:
    count = 0
    for _ in enumerate_sequences(c):
        count += 1
        if limit is not None and count > limit:
            raise ResourceCap(f"more than {limit} sequences in <{Composition(c)}>")
    return count


def ladder_matrix(c: Sequence[int]) -> list[list[int]]:
    """Entries ``binom(L_i - i + 1, j - i + 1)`` for ``1 <= i, j <= k``."""
    L = Composition(c).cumsum
    k = len(L)
    return [[binom(L[i - 1] - i + 1, j - i + 1) for j in range(1, k + 1)] for i in range(1, k + 1)]


def count_det(c: Sequence[int]) -> int:
    return det(ladder_matrix(c))


# ---------------------------------------------------------------- identities


def lemma_identities(c: Sequence[int], i: int | None = None, count=count_det):
    """Check the three recurrences for ``|<c>|``.

    Returns a triple of flags, ``None`` where an identity does not apply:

    1. (needs ``i``; ``1 <= i < k`` and ``l_{i+1} > 1``)
       ``|<.., l_i + 1, l_{i+1} - 1, ..>| = |<c>| + |<l_1..l_{i-1}>| |<l_{i+1} - 1, l_{i+2}..l_k>|``
    2. ``|<l_1..l_{k-1}, l_k + 1>| = |<c>| + |<l_1..l_{k-1}>|``
    3. (``l_1 > 1``) ``|<l_1 - 1, l_2..>| = |<c>| - |<l_1 + l_2 - 1, l_3..l_k>|``

    For ``k = 1`` the last term of (3) is the empty composition.
    """
    c = list(Composition(c))
    k = len(c)
    if k == 0 or any(p < 1 for p in c):
        raise SideConditionViolated("the identities need a nonempty composition of positive parts")
    base = count(c)

    first = None
    if i is not None:
        if not (1 <= i < k and c[i] > 1):
            raise SideConditionViolated(f"first identity needs 1 <= i < k and l_(i+1) > 1 (i={i}, c={c})")
        moved = c[: i - 1] + [c[i - 1] + 1, c[i] - 1] + c[i + 1 :]
        first = count(moved) == base + count(c[: i - 1]) * count([c[i] - 1] + c[i + 1 :])

    second = count(c[:-1] + [c[-1] + 1]) == base + count(c[:-1])

    third = None
    if c[0] > 1:
        merged = [c[0] + c[1] - 1] + c[2:] if k >= 2 else []
        third = count([c[0] - 1] + c[1:]) == base - count(merged)

    return first, second, third


def random_composition(rng: random.Random, max_part: int = 6, max_k: int = 5) -> tuple[int, ...]:
    k = rng.randint(1, max_k)
    return tuple(rng.randint(1, max_part) for _ in range(k))


# ---------------------------------------------------------------- cyclic sums


def cyclic_terms(c: Sequence[int], r: int, t: int) -> list[tuple[int, ...]]:
    """The k shifted compositions ``(l_{i+1} + .. + l_{i+r} + t, l_{i+r+1}, .., l_{i+k-1})``."""
    c = tuple(c)
    k = len(c)
    if any(p < 1 for p in c):
        raise ParamOutOfRange(f"cyclic sums need positive parts, got {c}")
    if not 0 < r < k:
        raise ParamOutOfRange(f"need 0 < r < k, got r={r}, k={k}")
    terms = []
    for i in range(k):
        head = sum(c[(i + j - 1) % k] for j in range(1, r + 1)) + t
        tail = tuple(c[(i + m - 1) % k] for m in range(r + 1, k))
        terms.append((head,) + tail)
    return terms


def cyclic_sum(c: Sequence[int], r: int, t: int, count=count_det) -> int:
    return sum(count(term) for term in cyclic_terms(c, r, t))


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Compositions of n into exactly k positive parts, lexicographically."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(1, n - k + 2):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def compositions_up_to(total: int) -> Iterator[tuple[int, ...]]:
    """Every composition (including the empty one) with sum at most ``total``."""
    yield ()
    for n in range(1, total + 1):
        for k in range(1, n + 1):
            yield from compositions(n, k)


# ---------------------------------------------------------------- coimage counts


def count_pf_coimage(p: OrderedPartition) -> int:
    """Number of parking functions whose coimage is exactly ``p``."""
    return count_det(p.length_vector)


def count_pf_run_coimage(p: OrderedPartition, r: int) -> int:
    """Number of parking functions with run ``r`` and coimage ``p``.

    Determinant of ``binom(L_i - i, j - i + 1)`` over ``r <= i, j <= k - 1``.
    """
    if r < 1:
        raise ParamOutOfRange(f"run must be positive, got {r}")
    k = p.k
    if r > k:
        return 0
    L = list(itertools.accumulate(p.sizes))
    idx = range(r, k)
    return det([[binom(L[i - 1] - i, j - i + 1) for j in idx] for i in idx])


def count_rw_coimage(p: OrderedPartition) -> int:
    """Number of rook words with coimage ``p``: ``binom(n - 1 - i, k - 1 - i)``
    where block ``i + 1`` holds position 1."""
    i = p.block_of(1)
    return binom(p.n - 1 - i, p.k - 1 - i)


def type_count_pf(n: int, k: int) -> int:
    """Parking functions (equally, rook words) in one k-block type class."""
    if not 1 <= k <= n:
        raise ParamOutOfRange(f"need 1 <= k <= n, got k={k}, n={n}")
    return binom(n, k - 1)


def type_count_run(n: int, k: int, r: int) -> int:
    """Run-r parking functions (equally, rook words) in one k-block type class."""
    if not 1 <= k <= n or not 1 <= r <= n:
        raise ParamOutOfRange(f"need 1 <= k, r <= n, got k={k}, r={r}, n={n}")
    return r * binom(n - r - 1, k - r)
