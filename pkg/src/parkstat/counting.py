"""Enumerator polynomials and the closed forms for their coefficients.

Four polynomials are compared, all of which turn out to be equal:

======  =================================  ==============
name    objects                            statistic
======  =================================  ==============
``lt``  rooted labeled trees on {0..n}     leg
``zp``  parking functions of length n      center size
``rp``  parking functions of length n      run
``rr``  rook words of length n             run
======  =================================  ==============

Brute-force evaluation can be sharded over generator prefixes and run in a
process pool; shard results are merged by coefficientwise addition.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ._caps import check_n
from .errors import ParamOutOfRange
from .trees import all_trees, leg
from .words import all_parking, all_words, is_rook, run, z

KINDS = ("lt", "zp", "rp", "rr")


@dataclass(frozen=True)
class Enumerator:
    """Polynomial ``sum_r coeffs[r] t^r`` with exact integer coefficients, ``0 <= r <= n``."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.n + 1:
            raise ValueError(f"need {self.n + 1} coefficients, got {len(self.coeffs)}")

    def __getitem__(self, r: int) -> int:
        return self.coeffs[r] if 0 <= r <= self.n else 0

    @property
    def total(self) -> int:
        return sum(self.coeffs)

    def to_dict(self) -> dict:
        return {"n": self.n, "coeffs": {str(r): str(c) for r, c in enumerate(self.coeffs) if c}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "Enumerator":
        n = int(d["n"])
        coeffs = [0] * (n + 1)
        for r, c in d["coeffs"].items():
            coeffs[int(r)] = int(c)
        return cls(n, tuple(coeffs))

    @classmethod
    def from_json(cls, text: str) -> "Enumerator":
        return cls.from_dict(json.loads(text))

    def csv_rows(self) -> list[tuple[int, int, int]]:
        return [(self.n, r, c) for r, c in enumerate(self.coeffs)]

    def __str__(self) -> str:
        terms = []
        for r, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if r == 0 else ("t" if r == 1 else f"t^{r}")
            coef = str(c) if (c != 1 or r == 0) else ""
            terms.append(coef + mono)
        return "+".join(terms) or "0"


# ---------------------------------------------------------------- brute force


def _shards(kind, n):
    if kind == "lt":
        return [()] if n == 1 else [(c,) for c in range(n + 1)]
    return [(a,) for a in range(1, n + 1)]


def _count_shard(args):
    """Histograms of every statistic a single pass over one shard can produce."""
    kind, n, prefix = args
    if kind == "lt":
        h = [0] * (n + 1)
        for t in all_trees(n, prefix, cap=False):
            h[leg(t)] += 1
        return {"lt": h}
    if kind == "pf":
        hz = [0] * (n + 1)
        hr = [0] * (n + 1)
        for w in all_parking(n, prefix, cap=False):
            hz[z(w)] += 1
            hr[run(w)] += 1
        return {"zp": hz, "rp": hr}
    if kind == "rr":
        h = [0] * (n + 1)
        for w in all_words(n, prefix, cap=False):
            if is_rook(w):
                h[run(w)] += 1
        return {"rr": h}
    raise ValueError(kind)


def _histograms(kind, n, workers=1):
    jobs = [(kind, n, p) for p in _shards(kind, n)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_count_shard, jobs))
    else:
        parts = [_count_shard(j) for j in jobs]
    merged: dict[str, list[int]] = {}
    for part in parts:
        for name, h in part.items():
            acc = merged.setdefault(name, [0] * (n + 1))
            for r, c in enumerate(h):
                acc[r] += c
    return {name: Enumerator(n, tuple(h)) for name, h in merged.items()}


def lt(n: int, workers: int = 1, cap=None) -> Enumerator:
    check_n(n, cap)
    return _histograms("lt", n, workers)["lt"]


def zp(n: int, workers: int = 1, cap=None) -> Enumerator:
    check_n(n, cap)
    return _histograms("pf", n, workers)["zp"]


def rp(n: int, workers: int = 1, cap=None) -> Enumerator:
    check_n(n, cap)
    return _histograms("pf", n, workers)["rp"]


def rr(n: int, workers: int = 1, cap=None) -> Enumerator:
    check_n(n, cap)
    return _histograms("rr", n, workers)["rr"]


def brute_enumerators(n: int, workers: int = 1, cap=None) -> dict[str, Enumerator]:
    """All four enumerators from one pass over trees, parking functions and words."""
    check_n(n, cap)
    out = {}
    for kind in ("lt", "pf", "rr"):
        out.update(_histograms(kind, n, workers))
    return {name: out[name] for name in KINDS}


# ---------------------------------------------------------------- closed forms


def _check_nr(n, r):
    if not 1 <= r <= n:
        raise ParamOutOfRange(f"need 1 <= r <= n, got r={r}, n={n}")


def coeff_composition_sum(n: int, r: int) -> int:
    """``r! * sum over e_1+..+e_r = n-r of (n-1)^e_1 ... (n-r)^e_r``.

    The sum is the complete homogeneous polynomial ``h_{n-r}(n-1, .., n-r)``;
    each base is folded in with a running prefix recurrence.
    """
    _check_nr(n, r)
    d = n - r
    h = [1] + [0] * d
    for i in range(1, r + 1):
        x = n - i
        for s in range(1, d + 1):
            h[s] += x * h[s - 1]
    return math.factorial(r) * h[d]


def coeff_inclusion_exclusion(n: int, r: int) -> int:
    """``r * sum_j (-1)^j binom(r-1, j) (n-1-j)^(n-1)``."""
    _check_nr(n, r)
    total = sum((-1) ** j * math.comb(r - 1, j) * (n - 1 - j) ** (n - 1) for j in range(r))
    return r * total


def closed_form(n: int, method: str = "inclusion_exclusion") -> Enumerator:
    f = {"inclusion_exclusion": coeff_inclusion_exclusion, "composition_sum": coeff_composition_sum}[method]
    return Enumerator(n, (0,) + tuple(f(n, r) for r in range(1, n + 1)))


# ---------------------------------------------------------------- verification


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    n: int
    enumerators: dict[str, Enumerator]
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "passed": self.passed,
            "enumerators": {k: e.to_dict()["coeffs"] for k, e in self.enumerators.items()},
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }


def verify_theorems(n: int, workers: int = 1, cap=None) -> VerificationReport:
    """Compare the four brute-force enumerators with each other and the closed forms."""
    e = brute_enumerators(n, workers, cap)
    report = VerificationReport(n, e)
    add = report.checks.append
    add(Check("leg/center (LT = ZP)", e["lt"] == e["zp"], f"{e['lt']} vs {e['zp']}"))
    add(Check("center/run (ZP = RP)", e["zp"] == e["rp"], f"{e['zp']} vs {e['rp']}"))
    add(Check("parking/rook run (RP = RR)", e["rp"] == e["rr"], f"{e['rp']} vs {e['rr']}"))
    cs = closed_form(n, "composition_sum")
    ie = closed_form(n, "inclusion_exclusion")
    add(Check("composition-sum closed form", cs == e["lt"], str(cs)))
    add(Check("inclusion-exclusion closed form", ie == e["lt"], str(ie)))
    add(Check("total mass (n+1)^(n-1)", e["lt"].total == (n + 1) ** (n - 1), str(e["lt"].total)))
    return report
