"""Words in [n]^n and their statistics.

A word ``a = a_1 ... a_n`` has 1-based positions and 1-based values.  The
statistics here are the ones needed to compare trees, parking functions and
rook words:

* ``center``: the largest index set ``x_1 < ... < x_l`` with ``a_{x_i} <= i``;
* ``run``: the largest ``i`` such that ``1, ..., i`` all occur in the word;
* ``run_set``: the positions of the last occurrences of ``1, ..., run``;
* ``reduced_image`` and ``coimage``, which split a word into its set of values
  and the ordered partition of positions into fibers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from ._caps import check_n
from .errors import InvalidPartition, InvalidWord, ParseError


class Word(tuple):
    """Validated word in [n]^n, stored as a tuple of ints."""

    __slots__ = ()

    def __new__(cls, values: Iterable[int]):
        values = tuple(values)
        n = len(values)
        if n == 0:
            raise InvalidWord("a word needs at least one letter")
        for i, a in enumerate(values, 1):
            if not isinstance(a, int) or isinstance(a, bool):
                raise InvalidWord(f"entry {i} is not an integer: {a!r}")
            if not 1 <= a <= n:
                raise InvalidWord(f"entry {i} = {a} is outside [1, {n}]")
        return tuple.__new__(cls, values)

    @classmethod
    def _trusted(cls, values) -> "Word":
        return tuple.__new__(cls, values)

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse ``"3,4,1,1"``; a run of single digits like ``"3411"`` is also accepted."""
        text = text.strip()
        if not text:
            raise ParseError("empty word")
        try:
            if "," in text:
                values = [int(tok) for tok in text.split(",")]
            elif text.isdigit():
                values = [int(ch) for ch in text]
            else:
                values = [int(text)]
        except ValueError:
            raise ParseError(f"cannot parse word {text!r}") from None
        return cls(values)

    @property
    def n(self) -> int:
        return len(self)

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Word({str(self)})"


@dataclass(frozen=True)
class OrderedPartition:
    """Ordered set partition ``(A_1, ..., A_k)`` of ``[n]``."""

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        blocks = tuple(frozenset(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks:
            raise InvalidPartition("an ordered partition needs at least one block")
        seen: set[int] = set()
        for b in blocks:
            if not b:
                raise InvalidPartition("blocks must be nonempty")
            if seen & b:
                raise InvalidPartition("blocks must be disjoint")
            seen |= b
        if seen != set(range(1, len(seen) + 1)):
            raise InvalidPartition(f"blocks do not cover [1..{len(seen)}]")

    @classmethod
    def parse(cls, text: str) -> "OrderedPartition":
        try:
            blocks = []
            for chunk in text.strip().split("|"):
                chunk = chunk.strip().removeprefix("{").removesuffix("}")
                blocks.append(frozenset(int(x) for x in chunk.split(",") if x.strip()))
        except ValueError:
            raise ParseError(f"cannot parse ordered partition {text!r}") from None
        return cls(tuple(blocks))

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @property
    def length_vector(self) -> tuple[int, ...]:
        """Sizes of the first ``k - 1`` blocks."""
        return self.sizes[:-1]

    def rotate(self, s: int) -> "OrderedPartition":
        s %= self.k
        return OrderedPartition(self.blocks[s:] + self.blocks[:s])

    def rotations(self) -> list["OrderedPartition"]:
        return [self.rotate(s) for s in range(self.k)]

    def canonical_rotation(self) -> "OrderedPartition":
        """The rotation whose first block contains 1; a key for the type class."""
        for s, b in enumerate(self.blocks):
            if 1 in b:
                return self.rotate(s)
        raise AssertionError("unreachable: 1 lies in some block")

    def block_of(self, x: int) -> int:
        """0-based index of the block containing ``x``."""
        for i, b in enumerate(self.blocks):
            if x in b:
                return i
        raise KeyError(x)

    def __str__(self) -> str:
        return "|".join("{" + ",".join(map(str, sorted(b))) + "}" for b in self.blocks)


# ---------------------------------------------------------------- statistics


def center(w: Sequence[int]) -> tuple[int, ...]:
    """Positions of the center, ascending.

    One greedy pass suffices: an index is taken as soon as its letter fits
    under the current count plus one, and taking it never hurts later indices.
    """
    out = []
    c = 0
    for i, a in enumerate(w, 1):
        if a <= c + 1:
            out.append(i)
            c += 1
    return tuple(out)


def z(w: Sequence[int]) -> int:
    c = 0
    for a in w:
        if a <= c + 1:
            c += 1
    return c


def run(w: Sequence[int]) -> int:
    image = set(w)
    i = 0
    while i + 1 in image:
        i += 1
    return i


def run_set(w: Sequence[int]) -> tuple[int, ...]:
    """Positions of the last occurrence of each value ``1..run(w)``, ascending."""
    r = run(w)
    last = {}
    for i, a in enumerate(w, 1):
        if a <= r:
            last[a] = i
    return tuple(sorted(last.values()))


def is_parking(w: Sequence[int]) -> bool:
    return all(a <= i for i, a in enumerate(sorted(w), 1))


def is_rook(w: Sequence[int]) -> bool:
    return w[0] <= run(w)


def reduced_image(w: Sequence[int]) -> tuple[int, ...]:
    return tuple(x - 1 for x in sorted(set(w)))


def coimage(w: Sequence[int]) -> OrderedPartition:
    fibers: dict[int, set[int]] = {}
    for i, a in enumerate(w, 1):
        fibers.setdefault(a, set()).add(i)
    return OrderedPartition(tuple(frozenset(fibers[v]) for v in sorted(fibers)))


def same_type(p: OrderedPartition, q: OrderedPartition) -> bool:
    """True iff ``q`` is a cyclic rotation of ``p``."""
    if p.n != q.n or p.k != q.k:
        return False
    return any(p.rotate(s).blocks == q.blocks for s in range(p.k))


# ---------------------------------------------------------------- generators


def all_words(n: int, prefix: Sequence[int] = (), cap=None) -> Iterator[Word]:
    """All of [n]^n in lexicographic order, optionally restricted to a prefix."""
    check_n(n, cap)
    prefix = tuple(prefix)
    if len(prefix) > n or any(not 1 <= a <= n for a in prefix):
        raise InvalidWord(f"bad prefix {prefix} for n={n}")
    for tail in itertools.product(range(1, n + 1), repeat=n - len(prefix)):
        yield Word._trusted(prefix + tail)


def all_parking(n: int, prefix: Sequence[int] = (), cap=None) -> Iterator[Word]:
    """Parking functions of length n, lexicographic order.

    Branches are pruned as soon as the prefix can no longer be completed: for
    each threshold ``v`` the word needs at least ``v`` letters ``<= v``.
    """
    check_n(n, cap)
    prefix = list(prefix)
    if len(prefix) > n or any(not 1 <= a <= n for a in prefix):
        raise InvalidWord(f"bad prefix {tuple(prefix)} for n={n}")
    # cnt[v] = number of letters <= v placed so far
    cnt = [0] * (n + 1)
    for a in prefix:
        for v in range(a, n + 1):
            cnt[v] += 1
    word = prefix

    def feasible(remaining):
        return all(cnt[v] + remaining >= v for v in range(1, n + 1))

    def rec():
        remaining = n - len(word)
        if remaining == 0:
            yield Word._trusted(word)
            return
        for a in range(1, n + 1):
            for v in range(a, n + 1):
                cnt[v] += 1
            word.append(a)
            if feasible(remaining - 1):
                yield from rec()
            word.pop()
            for v in range(a, n + 1):
                cnt[v] -= 1

    if feasible(n - len(word)):
        yield from rec()


def all_rook(n: int, prefix: Sequence[int] = (), cap=None) -> Iterator[Word]:
    for w in all_words(n, prefix, cap):
        if is_rook(w):
            yield w


def ordered_partitions(n: int) -> Iterator[OrderedPartition]:
    """Every ordered set partition of [n] (Fubini many), grouped by number of blocks."""
    for k in range(1, n + 1):
        # surjections [n] -> [k] are exactly the coimages with k blocks
        for f in itertools.product(range(k), repeat=n):
            if len(set(f)) == k:
                blocks = [set() for _ in range(k)]
                for i, b in enumerate(f, 1):
                    blocks[b].add(i)
                yield OrderedPartition(tuple(frozenset(b) for b in blocks))
