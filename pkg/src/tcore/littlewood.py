"""Core/quotient decomposition and simultaneous (s, t)-cores."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd

from .cyclotomic import CycInt, uniqueness_predicted
from .gbg import gbg_direct
from .partition_core import (
    EMPTY,
    Partition,
    PartitionError,
    beta_set,
    from_beta_set,
    is_t_core,
    iter_t_cores,
    t_core_of,
)


class LittlewoodError(ValueError):
    pass


def _check_coprime(s: int, t: int) -> None:
    if s < 2 or t < 2:
        raise LittlewoodError("s and t must be >= 2")
    if gcd(s, t) != 1:
        raise LittlewoodError(f"gcd(s, t) must be 1, got gcd({s}, {t}) = {gcd(s, t)}")


@dataclass(frozen=True)
class LittlewoodDecomposition:
    core: Partition
    quotient: tuple[Partition, ...]
    t: int

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "core": list(self.core.parts),
            "quotient": [list(q.parts) for q in self.quotient],
        }


def decompose(p: Partition, t: int) -> LittlewoodDecomposition:
    """Split the beta-set (bead count a multiple of t) into t runners.

    Runner i holds the beads congruent to i mod t; bead i + t*m becomes
    position m on that runner, and the positions form the beta-set of the
    i-th quotient partition.
    """
    if t < 2:
        raise PartitionError(f"t must be >= 2, got {t}")
    k = -(-len(p) // t) * t
    runners: list[list[int]] = [[] for _ in range(t)]
    for b in beta_set(p, k):
        runners[b % t].append(b // t)
    quotient = tuple(from_beta_set(r) for r in runners)
    return LittlewoodDecomposition(t_core_of(p, t), quotient, t)


def recompose(d: LittlewoodDecomposition) -> Partition:
    t = d.t
    if not is_t_core(d.core, t):
        raise LittlewoodError(f"{d.core} is not a {t}-core")
    if len(d.quotient) != t:
        raise LittlewoodError(f"need {t} quotient partitions, got {len(d.quotient)}")
    k = -(-len(d.core) // t) * t
    while True:
        counts = [0] * t
        for b in beta_set(d.core, k):
            counts[b % t] += 1
        if all(counts[i] >= len(q) for i, q in enumerate(d.quotient)):
            break
        k += t
    beads = []
    for i, q in enumerate(d.quotient):
        for m in beta_set(q, counts[i]):
            beads.append(i + t * m)
    return from_beta_set(beads)


def s_core_gbg_invariance_check(p: Partition, s: int) -> bool:
    """GBG-rank mod s is unchanged by removing s-rim-hooks."""
    return gbg_direct(p, s) == gbg_direct(t_core_of(p, s), s)


def olsson_check(s: int, t: int, max_norm: int) -> tuple[bool, list[Partition]]:
    """The s-core of every t-core of norm < max_norm is again a t-core.

    Returns (holds, counterexamples).
    """
    _check_coprime(s, t)
    bad = [p for _, p in iter_t_cores(t, max_norm - 1) if not is_t_core(t_core_of(p, s), t)]
    return not bad, bad


@dataclass(frozen=True)
class StCoreSet:
    s: int
    t: int
    cores: tuple[Partition, ...]

    @property
    def size(self) -> int:
        return len(self.cores)


def st_norm_bound(s: int, t: int) -> int:
    return (s * s - 1) * (t * t - 1) // 24


def st_cores(s: int, t: int) -> StCoreSet:
    """Partitions that are both s-cores and t-cores, sorted by norm then parts."""
    _check_coprime(s, t)
    cores = [p for _, p in iter_t_cores(t, st_norm_bound(s, t)) if is_t_core(p, s)]
    cores.sort(key=lambda p: (p.norm, p.parts))
    expected = comb(s + t, s) // (s + t)
    if len(cores) != expected:
        raise AssertionError(f"found {len(cores)} ({s},{t})-cores, expected {expected}")
    return StCoreSet(s, t, tuple(cores))


@dataclass(frozen=True)
class InjectivityReport:
    injective: bool
    predicted: bool
    values: tuple[tuple[Partition, CycInt], ...]
    collisions: tuple[tuple[Partition, Partition], ...]


def gbg_injectivity_check(s: int, t: int) -> InjectivityReport:
    """Is GBG-rank mod s injective on the (s, t)-cores?"""
    cores = st_cores(s, t).cores
    values = tuple((p, gbg_direct(p, s)) for p in cores)
    seen: dict[CycInt, Partition] = {}
    collisions = []
    for p, v in values:
        if v in seen:
            collisions.append((seen[v], p))
        else:
            seen[v] = p
    return InjectivityReport(not collisions, uniqueness_predicted(s, t), values, tuple(collisions))


def counterexample_partition(s: int, t: int) -> Partition:
    """(1 + s/2, 2, 1^(s/2 - 1)): an (s, t)-core sharing GBG-rank 0 with the empty partition."""
    if s % 2 or s <= 2:
        raise LittlewoodError(f"s must be even and > 2, got {s}")
    if not t > 1 + s // 2:
        raise LittlewoodError(f"need t > 1 + s/2 = {1 + s // 2}, got {t}")
    if t == s + 1:
        raise LittlewoodError("t = s + 1 is excluded")
    _check_coprime(s, t)
    p = Partition((1 + s // 2, 2) + (1,) * (s // 2 - 1))
    if not (is_t_core(p, s) and is_t_core(p, t)):
        raise AssertionError(f"{p} is not an ({s},{t})-core")
    if gbg_direct(p, s) != gbg_direct(EMPTY, s):
        raise AssertionError(f"GBG({p}, {s}) is not 0")
    return p
