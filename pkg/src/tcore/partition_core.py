"""Partitions, residue statistics, t-cores and the n-vector bijection.

Cells are indexed (i, j) with rows and columns starting at 1; cell (i, j)
carries the label (j - i) mod s in the s-residue diagram.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterator, Sequence


class PartitionError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise PartitionError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f"parts must be nonincreasing: {parts}")

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> Partition:
        """Sort and drop zeros."""
        return cls(tuple(sorted((p for p in parts if p), reverse=True)))

    @property
    def norm(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def to_json(self) -> dict:
        return {"parts": list(self.parts)}

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, lam in enumerate(self.parts, start=1):
            for j in range(1, lam + 1):
                yield i, j


EMPTY = Partition()

_SEP = re.compile(r"[\s,]+")


def parse_partition(text: str) -> Partition:
    """Parse ``"4,2"``, ``"4 2"`` or ``""``; parts are sorted nonincreasing."""
    tokens = [tok for tok in _SEP.split(text.strip()) if tok]
    parts = []
    for tok in tokens:
        try:
            value = int(tok)
        except ValueError:
            raise PartitionError(f"not an integer: {tok!r}") from None
        if value <= 0:
            raise PartitionError(f"parts must be positive, got {value}")
        parts.append(value)
    return Partition(tuple(sorted(parts, reverse=True)))


def conjugate(p: Partition) -> Partition:
    if not p.parts:
        return EMPTY
    return Partition(tuple(sum(1 for lam in p.parts if lam >= i) for i in range(1, p.parts[0] + 1)))


def hook_lengths(p: Partition) -> list[list[int]]:
    conj = conjugate(p)
    return [
        [lam - j + conj.parts[j - 1] - i + 1 for j in range(1, lam + 1)]
        for i, lam in enumerate(p.parts, start=1)
    ]


def durfee(p: Partition) -> int:
    return sum(1 for i, lam in enumerate(p.parts, start=1) if lam >= i)


# ---------------------------------------------------------------------------
# residue vectors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RVector:
    s: int
    counts: tuple[int, ...]


@dataclass(frozen=True)
class NVector:
    t: int
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != self.t:
            raise PartitionError(f"n-vector must have length {self.t}, got {len(coords)}")
        if sum(coords) != 0:
            raise PartitionError(f"n-vector must sum to zero: {coords}")

    @classmethod
    def of(cls, coords: Sequence[int]) -> NVector:
        return cls(len(coords), tuple(coords))

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]


def _check_modulus(s: int) -> None:
    if s < 2:
        raise PartitionError(f"modulus must be >= 2, got {s}")


def r_vector(p: Partition, s: int) -> RVector:
    _check_modulus(s)
    counts = [0] * s
    for i, lam in enumerate(p.parts, start=1):
        # labels (j - i) mod s for j = 1..lam: full cycles plus a remainder
        full, rest = divmod(lam, s)
        if full:
            for k in range(s):
                counts[k] += full
        for j in range(1, rest + 1):
            counts[(j - i) % s] += 1
    return RVector(s, tuple(counts))


def n_vector_from_r(r: RVector) -> NVector:
    c = r.counts
    s = r.s
    return NVector(s, tuple(c[i] - c[(i + 1) % s] for i in range(s)))


# ---------------------------------------------------------------------------
# beta-numbers and cores
# ---------------------------------------------------------------------------

def beta_set(p: Partition, k: int | None = None) -> list[int]:
    """First-column hook lengths with ``k`` beads (default: number of parts)."""
    if k is None:
        k = len(p)
    if k < len(p):
        raise PartitionError(f"need at least {len(p)} beads, got {k}")
    padded = list(p.parts) + [0] * (k - len(p))
    return [lam + k - i for i, lam in enumerate(padded, start=1)]


def from_beta_set(beta: Sequence[int]) -> Partition:
    b = sorted(beta, reverse=True)
    k = len(b)
    if len(set(b)) != k or (b and b[-1] < 0):
        raise PartitionError(f"invalid beta-set: {beta}")
    return Partition(tuple(x - (k - i) for i, x in enumerate(b, start=1) if x - (k - i) > 0))


def is_t_core(p: Partition, t: int) -> bool:
    """No hook length divisible by t, tested on the beta-set.

    A bead at b with an empty position b - t >= 0 is exactly a t-hook.
    """
    _check_modulus(t)
    beta = set(beta_set(p))
    return all(b - t < 0 or b - t in beta for b in beta)


def t_core_of(p: Partition, t: int) -> Partition:
    """Slide every bead up its runner on the t-abacus."""
    _check_modulus(t)
    runners = [0] * t
    for b in beta_set(p):
        runners[b % t] += 1
    return from_beta_set([r + t * m for r in range(t) for m in range(runners[r])])


# ---------------------------------------------------------------------------
# exposed-cell words and the n-vector bijection
# ---------------------------------------------------------------------------

def contents_window(p: Partition, lo: int) -> set[int]:
    """Contents lambda_i - i of row ends (all rows i >= 1, including empty
    rows of the extended diagram) that are >= lo."""
    out = {lam - i for i, lam in enumerate(p.parts, start=1) if lam - i >= lo}
    out.update(range(lo, -len(p)))
    return out


def word_window(p: Partition, t: int, region_lo: int, region_hi: int) -> list[str]:
    """Letters of W_0..W_{t-1} for regions region_lo..region_hi.

    Letter r of W_i is ``E`` when content t(r-1)+i is a row end.
    """
    _check_modulus(t)
    if region_lo > region_hi:
        raise PartitionError("region_lo must not exceed region_hi")
    ends = contents_window(p, t * (region_lo - 1))
    return [
        "".join("E" if t * (r - 1) + i in ends else "N" for r in range(region_lo, region_hi + 1))
        for i in range(t)
    ]


def core_to_nvec(p: Partition, t: int) -> NVector:
    if not is_t_core(p, t):
        raise PartitionError(f"{p} is not a {t}-core")
    return n_vector_from_r(r_vector(p, t))


def nvec_to_core(n: NVector | Sequence[int]) -> Partition:
    """Runner i carries row ends at contents t(r-1)+i for every region r <= n_i."""
    if not isinstance(n, NVector):
        n = NVector.of(tuple(n))
    t = n.t
    floor = t * (min(n.coords) - 1)
    ends = sorted(
        (c for i, ni in enumerate(n.coords) for c in range(t * (ni - 1) + i, floor - 1, -t)),
        reverse=True,
    )
    # contents below `floor` are all present, so the tail rows are empty
    parts = [c + k for k, c in enumerate(ends, start=1)]
    if parts and parts[-1] != 0:
        raise PartitionError(f"inconsistent n-vector {n.coords}")
    return Partition(tuple(x for x in parts if x > 0))


def norm_from_nvec(n: NVector | Sequence[int]) -> int:
    coords = n.coords if isinstance(n, NVector) else tuple(n)
    if sum(coords) != 0:
        raise PartitionError(f"n-vector must sum to zero: {coords}")
    t = len(coords)
    twice = t * sum(c * c for c in coords) + 2 * sum(i * c for i, c in enumerate(coords))
    assert twice % 2 == 0 and twice >= 0
    return twice // 2


def conjugate_nvec(n: NVector) -> NVector:
    return NVector(n.t, tuple(-c for c in reversed(n.coords)))


def iter_nvecs(t: int, max_norm: int) -> Iterator[tuple[int, ...]]:
    """Zero-sum integer vectors of length t with norm_from_nvec <= max_norm."""
    _check_modulus(t)
    bnorm = math.sqrt(sum(i * i for i in range(t)))
    radius = int((bnorm + math.sqrt(bnorm * bnorm + 2 * t * max_norm)) / t) + 1
    # minimum over real x of (t/2) x^2 + i x is -i^2/(2t)
    slack = [sum(i * i for i in range(k, t)) / (2 * t) for k in range(t + 1)]
    prefix: list[int] = []

    def rec(k: int, partial2: int, total: int):
        if k == t - 1:
            last = -total
            val2 = partial2 + t * last * last + 2 * k * last
            if val2 <= 2 * max_norm:
                yield tuple(prefix) + (last,)
            return
        for x in range(-radius, radius + 1):
            v2 = partial2 + t * x * x + 2 * k * x
            if v2 / 2 - slack[k + 1] - 1e-9 > max_norm:
                continue
            prefix.append(x)
            yield from rec(k + 1, v2, total + x)
            prefix.pop()

    yield from rec(0, 0, 0)


def iter_t_cores(t: int, max_norm: int) -> Iterator[tuple[NVector, Partition]]:
    for coords in iter_nvecs(t, max_norm):
        n = NVector(t, coords)
        yield n, nvec_to_core(n)


# ---------------------------------------------------------------------------
# diagonal split
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiagonalSplit:
    """Cells on/above and on/below the main diagonal.

    ``pi1`` lists, for rows 1..d, the number of cells (i, j) with j >= i;
    ``pi2`` lists, for columns 1..d, the number of cells (i, j) with i >= j.
    Both are strict partitions; the d diagonal cells appear in each.
    """

    pi1: Partition
    pi2: Partition
    d: int


def diagonal_split(p: Partition) -> DiagonalSplit:
    d = durfee(p)
    conj = conjugate(p)
    pi1 = Partition(tuple(p.parts[i - 1] - i + 1 for i in range(1, d + 1)))
    pi2 = Partition(tuple(conj.parts[j - 1] - j + 1 for j in range(1, d + 1)))
    return DiagonalSplit(pi1, pi2, d)


def iter_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, parts in nonincreasing order."""
    if max_part is None:
        max_part = n

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(n, max_part):
        yield Partition(parts)
