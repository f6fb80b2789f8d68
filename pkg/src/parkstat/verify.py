"""Theorem-level verification suite used by ``parkstat verify`` and the scripts."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from .counting import Check, VerificationReport, verify_theorems
from .lattice import (
    compositions,
    count_pf_coimage,
    count_pf_run_coimage,
    count_rw_coimage,
    cyclic_sum,
    lemma_identities,
    random_composition,
    type_count_pf,
    type_count_run,
)
from .maps import cyclic_to_rook, dfs_burn, phi, psi, unburn
from .trees import leg, leg_path
from .words import all_parking, all_words, center, coimage, is_parking, is_rook, ordered_partitions, run, run_set, z

CYCLIC_PARAMS = ((1, 0), (2, -2), (3, -3))


@dataclass
class SuiteResult:
    reports: list[VerificationReport] = field(default_factory=list)
    extra: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports) and all(c.passed for c in self.extra)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "theorems": [r.to_dict() for r in self.reports],
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.extra],
        }


def check_bijections(n: int) -> list[Check]:
    """Burning, phi/psi and cyclic-shift checks over every word of length n."""
    burn_ok = True
    trees = set()
    for w in all_parking(n, cap=False):
        trace = dfs_burn(w)
        path = leg_path(trace.tree)
        if leg(trace.tree) != z(w) or set(path) != set(center(w)) or unburn(trace.tree) != w:
            burn_ok = False
        trees.add(trace.tree)
    burn_ok = burn_ok and len(trees) == (n + 1) ** (n - 1)

    phipsi_ok = True
    phi_pf = set()
    pf_by_type: dict = {}
    rw_by_type: dict = {}
    for w in all_words(n, cap=False):
        p, q = phi(w), psi(w)
        if psi(p) != w or phi(q) != w:
            phipsi_ok = False
        if run_set(p) != center(w) or center(q) != run_set(w):
            phipsi_ok = False
        parking = is_parking(w)
        if parking:
            phi_pf.add(p)
            if not is_parking(p):
                phipsi_ok = False
        key = coimage(w).canonical_rotation()
        if parking:
            pf_by_type.setdefault(key, []).append(w)
        if is_rook(w):
            rw_by_type.setdefault(key, set()).add(w)

    shift_ok = True
    for key, pfs in pf_by_type.items():
        images = [cyclic_to_rook(w) for w in pfs]
        if len(set(images)) != len(pfs) or set(images) != rw_by_type.get(key, set()):
            shift_ok = False
    shift_ok = shift_ok and set(rw_by_type) <= set(pf_by_type)

    return [
        Check(f"burning bijection n={n}", burn_ok, f"{len(trees)} trees"),
        Check(f"phi/psi inverse, center<->run n={n}", phipsi_ok and len(phi_pf) == (n + 1) ** (n - 1)),
        Check(f"cyclic shift per type n={n}", shift_ok, f"{len(pf_by_type)} type classes"),
    ]


def check_coimage_formulas(n: int) -> Check:
    pf = Counter()
    pfr = Counter()
    rw = Counter()
    rwr = Counter()
    for w in all_words(n, cap=False):
        c = coimage(w)
        if is_parking(w):
            pf[c] += 1
            pfr[c, run(w)] += 1
        if is_rook(w):
            rw[c] += 1
            rwr[c, run(w)] += 1
    bad = 0
    for p in ordered_partitions(n):
        if count_pf_coimage(p) != pf[p] or count_rw_coimage(p) != rw[p]:
            bad += 1
        for r in range(1, n + 1):
            if count_pf_run_coimage(p, r) != pfr[p, r]:
                bad += 1
        if 1 not in p.blocks[0]:
            continue
        rots = p.rotations()
        want = type_count_pf(n, p.k)
        if sum(pf[q] for q in rots) != want or sum(rw[q] for q in rots) != want:
            bad += 1
        for r in range(1, n + 1):
            want = type_count_run(n, p.k, r)
            if not sum(pfr[q, r] for q in rots) == sum(rwr[q, r] for q in rots) == want:
                bad += 1
    return Check(f"coimage and type formulas n={n}", bad == 0, f"{bad} mismatches")


def check_cyclic_invariance(n: int, max_k: int = 4) -> Check:
    bad = []
    for k in range(2, min(max_k, n - 1) + 1):
        for r, t in CYCLIC_PARAMS:
            if r >= k:
                continue
            values = {cyclic_sum(c, r, t) for c in compositions(n, k)}
            if len(values) != 1:
                bad.append((k, r, t))
    return Check(f"cyclic sum invariance n={n}", not bad, f"failures {bad}" if bad else "")


def check_lemma_random(seed: int, count: int = 200) -> Check:
    rng = random.Random(seed)
    failures = 0
    for _ in range(count):
        c = random_composition(rng)
        candidates = [i for i in range(1, len(c)) if c[i] > 1]
        i = rng.choice(candidates) if candidates else None
        if any(flag is False for flag in lemma_identities(c, i)):
            failures += 1
    return Check(f"lattice recurrences on {count} random compositions (seed {seed})", failures == 0, f"{failures} failures")


def run_suite(ns, seed: int = 0, workers: int = 1, cap=None, exhaustive_max_n: int = 5) -> SuiteResult:
    result = SuiteResult()
    for n in ns:
        result.reports.append(verify_theorems(n, workers, cap))
        if n <= exhaustive_max_n:
            result.extra.extend(check_bijections(n))
            result.extra.append(check_coimage_formulas(n))
        result.extra.append(check_cyclic_invariance(n))
    result.extra.append(check_lemma_random(seed))
    return result
