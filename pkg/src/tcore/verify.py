"""Exhaustive property sweeps shared by ``tcore verify-all`` and the test-suite."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, gcd
from typing import Callable

from .cyclotomic import counterexample_family, lemma14_decide, uniqueness_predicted
from .gbg import gbg_direct, gbg_formula, gbg_mod2, gbg_shifted, mod2_bounds, nu, nu_bound
from .littlewood import decompose, gbg_injectivity_check, olsson_check, recompose, st_cores
from .partition_core import (
    NVector,
    conjugate,
    conjugate_nvec,
    core_to_nvec,
    diagonal_split,
    durfee,
    is_t_core,
    iter_partitions,
    iter_t_cores,
    norm_from_nvec,
    nvec_to_core,
    r_vector,
    t_core_of,
)


@dataclass
class SweepResult:
    name: str
    ok: bool
    checked: int
    failures: list

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "checked": self.checked,
                "failures": [str(f) for f in self.failures[:5]]}


def _sweep(name: str, cases, pred: Callable) -> SweepResult:
    failures, n = [], 0
    for case in cases:
        n += 1
        if not pred(case):
            failures.append(case)
    return SweepResult(name, not failures, n, failures)


def coprime_pairs(lo: int, hi: int) -> list[tuple[int, int]]:
    return [(s, t) for s in range(lo, hi + 1) for t in range(lo, hi + 1) if gcd(s, t) == 1]


def nvec_round_trip(radius: int = 3, ts=(2, 3, 4, 5)) -> SweepResult:
    def cases():
        for t in ts:
            for head in itertools.product(range(-radius, radius + 1), repeat=t - 1):
                last = -sum(head)
                if abs(last) <= radius:
                    yield NVector(t, head + (last,))

    def ok(n: NVector) -> bool:
        core = nvec_to_core(n)
        return (is_t_core(core, n.t) and core_to_nvec(core, n.t) == n
                and core.norm == norm_from_nvec(n))

    return _sweep("nvec-round-trip+norm", cases(), ok)


def durfee_identity(max_norm: int = 30, ts=(2, 3, 4, 5)) -> SweepResult:
    def ok(case) -> bool:
        n, core = case
        pos = sum(c for c in n if c > 0)
        neg = -sum(c for c in n if c < 0)
        return pos == neg == durfee(core)

    return _sweep("durfee-identity", ((n, c) for t in ts for n, c in iter_t_cores(t, max_norm)), ok)


def conjugation_rule(max_norm: int = 30, ts=(2, 3, 4, 5)) -> SweepResult:
    def ok(case) -> bool:
        n, core = case
        return nvec_to_core(conjugate_nvec(n)) == conjugate(core)

    return _sweep("nvec-conjugation", ((n, c) for t in ts for n, c in iter_t_cores(t, max_norm)), ok)


def gbg_conjugation(max_norm: int = 20, ss=(2, 3, 4, 5, 6)) -> SweepResult:
    cases = ((p, s) for n in range(max_norm + 1) for p in iter_partitions(n) for s in ss)
    return _sweep("gbg-conjugation", cases,
                  lambda c: gbg_direct(conjugate(c[0]), c[1]) == gbg_direct(c[0], c[1]).conjugate())


def diagonal_additivity(max_norm: int = 20, ss=(2, 3, 4, 5, 6)) -> SweepResult:
    def ok(case) -> bool:
        p, s = case
        split = diagonal_split(p)
        g1 = gbg_shifted(split.pi1.parts, s)
        g2 = gbg_shifted(split.pi2.parts, s, below=True)
        return (gbg_direct(p, s) == g1 + g2 - split.d
                and p.norm == split.pi1.norm + split.pi2.norm - split.d)

    cases = ((p, s) for n in range(max_norm + 1) for p in iter_partitions(n) for s in ss)
    return _sweep("diagonal-additivity", cases, ok)


def r_vector_conjugation(max_norm: int = 15, ss=(2, 3, 4, 5)) -> SweepResult:
    def ok(case) -> bool:
        p, s = case
        r, rc = r_vector(p, s).counts, r_vector(conjugate(p), s).counts
        return sum(r) == p.norm and all(rc[i] == r[(s - i) % s] for i in range(s))

    cases = ((p, s) for n in range(max_norm + 1) for p in iter_partitions(n) for s in ss)
    return _sweep("r-vector-conjugation", cases, ok)


def formula_vs_direct(max_norm: int = 25, pairs=None) -> SweepResult:
    pairs = pairs or coprime_pairs(2, 5)

    def cases():
        for s, t in pairs:
            for n, core in iter_t_cores(t, max_norm):
                yield s, n, core

    return _sweep("gbg-formula-vs-direct", cases(),
                  lambda c: gbg_formula(c[1], c[0]) == gbg_direct(c[2], c[0]))


def mod2_bounds_sweep(ts=(3, 5, 7, 9), radius: int = 4, samples: int = 4000, seed: int = 0) -> SweepResult:
    import random

    rng = random.Random(seed)

    def cases():
        for t in ts:
            for _ in range(samples):
                head = [rng.randint(-radius, radius) for _ in range(t - 1)]
                yield NVector.of(tuple(head) + (-sum(head),))

    def ok(n: NVector) -> bool:
        lo, hi = mod2_bounds(n.t)
        v = gbg_mod2(n)
        return lo <= v <= hi and v == int(gbg_formula(n, 2))

    return _sweep("mod2-bounds", cases(), ok)


def census(pairs=None) -> SweepResult:
    pairs = pairs or coprime_pairs(2, 6)

    def ok(case) -> bool:
        s, t = case
        c = nu(s, t).count
        bound = nu_bound(s, t)
        return c <= bound and (c == bound) == uniqueness_predicted(s, t)

    return _sweep("value-census", pairs, ok)


def core_quotient_round_trip(max_norm: int = 12, ts=(2, 3, 4, 5)) -> SweepResult:
    def ok(case) -> bool:
        p, t = case
        d = decompose(p, t)
        return (recompose(d) == p and d.core == t_core_of(p, t)
                and p.norm == d.core.norm + t * sum(q.norm for q in d.quotient))

    cases = ((p, t) for n in range(max_norm + 1) for p in iter_partitions(n) for t in ts)
    return _sweep("core-quotient-round-trip", cases, ok)


def s_core_invariance(max_norm: int = 15, ss=(2, 3, 4, 5)) -> SweepResult:
    cases = ((p, s) for n in range(max_norm + 1) for p in iter_partitions(n) for s in ss)
    return _sweep("gbg-s-core-invariance", cases,
                  lambda c: gbg_direct(c[0], c[1]) == gbg_direct(t_core_of(c[0], c[1]), c[1]))


def s_core_of_t_core(max_norm: int = 40) -> SweepResult:
    return _sweep("s-core-of-t-core", coprime_pairs(2, 5), lambda c: olsson_check(c[0], c[1], max_norm)[0])


def st_core_count(max_sum: int = 11) -> SweepResult:
    pairs = [(s, t) for s in range(2, max_sum) for t in range(2, max_sum)
             if s + t <= max_sum and gcd(s, t) == 1]
    return _sweep("st-core-count", pairs,
                  lambda c: st_cores(*c).size == comb(c[0] + c[1], c[0]) // (c[0] + c[1]))


def injectivity() -> SweepResult:
    def ok(case) -> bool:
        s, t = case
        rep = gbg_injectivity_check(s, t)
        return rep.injective == rep.predicted or not rep.predicted

    return _sweep("gbg-injectivity", [(3, 4), (2, 3), (5, 4), (4, 3), (4, 7), (3, 5)], ok)


def coincidence_families() -> SweepResult:
    cases = [(4, 5), (4, 7), (6, 5), (6, 7), (9, 7), (10, 7), (15, 7), (25, 12)]

    def ok(case) -> bool:
        j, jt = counterexample_family(*case)
        res = lemma14_decide(j, jt)
        return res.conditions_hold and not res.equal_forced and not res.uniqueness_predicted

    return _sweep("coincidence-families", cases, ok)


SWEEPS: dict[str, Callable[[], SweepResult]] = {
    "nvec-round-trip+norm": nvec_round_trip,
    "durfee-identity": durfee_identity,
    "nvec-conjugation": conjugation_rule,
    "gbg-conjugation": gbg_conjugation,
    "diagonal-additivity": diagonal_additivity,
    "r-vector-conjugation": r_vector_conjugation,
    "gbg-formula-vs-direct": formula_vs_direct,
    "mod2-bounds": mod2_bounds_sweep,
    "value-census": census,
    "core-quotient-round-trip": core_quotient_round_trip,
    "gbg-s-core-invariance": s_core_invariance,
    "s-core-of-t-core": s_core_of_t_core,
    "st-core-count": st_core_count,
    "gbg-injectivity": injectivity,
    "coincidence-families": coincidence_families,
}


def run_sweep(name: str) -> SweepResult:
    return SWEEPS[name]()
