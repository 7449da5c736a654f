"""The GBG-rank statistic and the census of its values on t-cores."""
from __future__ import annotations

import itertools
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb, gcd
from typing import Sequence

from .cyclotomic import CycInt, CyclotomicError, poly_divmod, root_power
from .partition_core import (
    NVector,
    Partition,
    PartitionError,
    r_vector,
)


class GbgError(ValueError):
    pass


DEFAULT_BUDGET = 10**7


def gbg_direct(p: Partition, s: int) -> CycInt:
    """sum_i r_i(p, s) w_s^i."""
    r = r_vector(p, s)
    return CycInt.from_exponents(s, dict(enumerate(r.counts)))


def gbg_shifted(rows: Sequence[int], s: int, *, below: bool = False) -> CycInt:
    """GBG of a shifted diagram hanging off the main diagonal.

    Row k (or column k when ``below``) of length L carries labels
    0, 1, ..., L-1 (or 0, -1, ..., -(L-1)).
    """
    sign = -1 if below else 1
    terms: dict[int, int] = defaultdict(int)
    for length in rows:
        for m in range(length):
            terms[sign * m] += 1
    return CycInt.from_exponents(s, terms)


def _coords(n: NVector | Sequence[int]) -> tuple[int, ...]:
    coords = n.coords if isinstance(n, NVector) else tuple(n)
    if sum(coords) != 0:
        raise GbgError(f"n-vector must sum to zero: {coords}")
    return coords


def gbg_formula(n: NVector | Sequence[int], s: int) -> CycInt:
    """Closed form of the GBG-rank of the t-core with n-vector ``n``.

        sum_i w^(i+1) (w^(t n_i) - 1) / ((1 - w)(1 - w^t))

    The numerator is divided exactly as a Laurent polynomial in x before
    reducing modulo Phi_s.
    """
    coords = _coords(n)
    t = len(coords)
    if s < 2:
        raise GbgError(f"s must be >= 2, got {s}")
    if gcd(s, t) != 1:
        raise GbgError(f"gcd(s, t) must be 1, got gcd({s}, {t}) = {gcd(s, t)}")
    lo = min(0, min(t * c for c in coords))
    # numerator * x^(-lo) as an ordinary polynomial
    num = defaultdict(int)
    for i, c in enumerate(coords):
        num[i + 1 + t * c - lo] += 1
        num[i + 1 - lo] -= 1
    dense = [0] * (max(num) + 1)
    for k, v in num.items():
        dense[k] += v
    denom = [1, -1] + [0] * (t - 2) + [-1, 1]  # (1 - x)(1 - x^t)
    if t == 1:
        denom = [1, -2, 1]
    try:
        quot, rem = poly_divmod(dense, denom)
    except CyclotomicError as exc:
        raise AssertionError(f"numerator not divisible for n={coords}") from exc
    if rem:
        raise AssertionError(f"numerator not divisible for n={coords}")
    return CycInt.from_exponents(s, {k + lo: c for k, c in enumerate(quot) if c})


def gbg_mod2(n: NVector | Sequence[int]) -> int:
    """(1 - sum_i (-1)^(i + n_i)) / 4 for odd t."""
    coords = _coords(n)
    t = len(coords)
    if t % 2 == 0:
        raise GbgError(f"t must be odd, got {t}")
    num = 1 - sum((-1) ** ((i + c) % 2) for i, c in enumerate(coords))
    if num % 4:
        raise AssertionError(f"non-integral value for n={coords}")
    return num // 4


def mod2_bounds(t: int) -> tuple[int, int]:
    return -((t - 1) // 4), (t + 1) // 4


# ---------------------------------------------------------------------------
# value census
# ---------------------------------------------------------------------------

def nu_bound(s: int, t: int) -> int:
    if gcd(s, t) != 1:
        raise GbgError(f"gcd(s, t) must be 1, got gcd({s}, {t}) = {gcd(s, t)}")
    q, r = divmod(comb(s + t, s), s + t)
    assert r == 0
    return q


@dataclass
class ValueCensus:
    s: int
    t: int
    values: set[CycInt] = field(default_factory=set)
    bound: int = 0

    @property
    def count(self) -> int:
        return len(self.values)

    def sorted_values(self) -> list[CycInt]:
        return sorted(self.values, key=lambda v: v.coeffs)


def lift_residues(m: Sequence[int], s: int) -> tuple[int, ...]:
    """A zero-sum integer vector congruent to ``m`` mod s (needs sum(m) = 0 mod s)."""
    if sum(m) % s:
        raise GbgError("residue vector must sum to 0 mod s")
    return tuple(m[:-1]) + (-sum(m[:-1]),)


def _census_chunk(args: tuple[int, int, int]) -> set[CycInt]:
    s, t, first = args
    out = set()
    for rest in itertools.product(range(s), repeat=max(t - 2, 0)):
        head = (first,) + rest
        last = (-sum(head)) % s
        out.add(gbg_formula(lift_residues(head + (last,), s), s))
    return out


def nu(s: int, t: int, *, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> ValueCensus:
    """All distinct GBG values of t-cores mod s.

    The closed form only sees n_i mod s, so the s^(t-1) residue vectors
    with zero sum mod s cover every t-core.
    """
    if gcd(s, t) != 1:
        raise GbgError(f"gcd(s, t) must be 1, got gcd({s}, {t}) = {gcd(s, t)}")
    if s < 2 or t < 2:
        raise GbgError("s and t must be >= 2")
    if s ** (t - 1) > budget:
        raise GbgError(f"enumeration of {s ** (t - 1)} candidates exceeds budget {budget}")
    tasks = [(s, t, first) for first in range(s)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_census_chunk, tasks))
    else:
        parts = [_census_chunk(task) for task in tasks]
    values: set[CycInt] = set().union(*parts)
    return ValueCensus(s, t, values, nu_bound(s, t))


def a_r_census(s: int, t: int) -> list[int]:
    """a_r for r = 0..s-1: nondecreasing j in [0, s-1]^t by sum mod s."""
    if s < 1 or t < 1:
        raise GbgError("s and t must be >= 1")
    out = [0] * s
    for j in itertools.combinations_with_replacement(range(s), t):
        out[sum(j) % s] += 1
    return out


def a_r(s: int, t: int, r: int) -> int:
    return a_r_census(s, t)[r % s]


# ---------------------------------------------------------------------------
# the 27 residue classes of 4-cores mod 3
# ---------------------------------------------------------------------------

W3 = root_power(3, 1)

TABLE1_VALUES: dict[str, CycInt] = {
    "-1": CycInt.integer(3, -1),
    "0": CycInt.integer(3, 0),
    "1": CycInt.integer(3, 1),
    "-w": -W3,
    "-w^2": -root_power(3, 2),
}

# (row index, representative n, GBG label) exactly as tabulated
TABLE1: list[tuple[int, tuple[int, int, int, int], str]] = [
    (1, (0, -1, 1, 0), "-1"),
    (2, (0, 0, 0, 0), "0"),
    (3, (1, 1, -2, 0), "0"),
    (4, (-1, -1, 1, 1), "0"),
    (5, (0, -1, -1, 2), "0"),
    (6, (1, -1, 0, 0), "0"),
    (7, (0, 1, -2, 1), "0"),
    (8, (2, -1, -1, 0), "0"),
    (9, (0, 0, 1, -1), "0"),
    (10, (0, 1, -1, 0), "0"),
    (11, (-1, 0, 1, 0), "0"),
    (12, (1, -1, 1, -1), "0"),
    (13, (0, -1, 0, 1), "0"),
    (14, (1, 1, 0, -2), "1"),
    (15, (-1, 1, -1, 1), "1"),
    (16, (2, 0, -1, -1), "1"),
    (17, (1, 0, 0, -1), "1"),
    (18, (1, 1, -1, -1), "1"),
    (19, (-1, 0, 0, 1), "1"),
    (20, (1, 0, -1, 0), "-w"),
    (21, (1, 0, -2, 1), "-w"),
    (22, (1, -1, -1, 1), "-w"),
    (23, (0, 0, -1, 1), "-w"),
    (24, (-1, 1, 0, 0), "-w^2"),
    (25, (-1, 1, 1, -1), "-w^2"),
    (26, (-1, 2, 0, -1), "-w^2"),
    (27, (0, 1, 0, -1), "-w^2"),
]


def table1_row(n: Sequence[int]) -> int:
    """Row index (1..27) of the residue class of a 4-vector mod 3."""
    key = tuple(c % 3 for c in n)
    return _TABLE1_BY_RESIDUE[key]


_TABLE1_BY_RESIDUE = {tuple(c % 3 for c in rep): idx for idx, rep, _ in TABLE1}


def label_of(value: CycInt) -> str:
    for label, v in TABLE1_VALUES.items():
        if v == value:
            return label
    raise GbgError(f"{value} is not a GBG value of a 4-core mod 3")


@dataclass(frozen=True)
class Table1Row:
    index: int
    representative: tuple[int, ...]
    residue: tuple[int, ...]
    value: CycInt
    label: str
    expected_label: str


def table1() -> list[Table1Row]:
    """Classify every m in Z_3^4 with zero digit sum mod 3 by GBG-rank mod 3."""
    rows = []
    for m in itertools.product(range(3), repeat=4):
        if sum(m) % 3:
            continue
        value = gbg_formula(lift_residues(m, 3), 3)
        idx = _TABLE1_BY_RESIDUE[m]
        _, rep, expected_label = TABLE1[idx - 1]
        rows.append(Table1Row(idx, rep, m, value, label_of(value), expected_label))
    rows.sort(key=lambda r: r.index)
    return rows


def table1_groups() -> dict[str, list[int]]:
    groups: dict[str, list[int]] = {label: [] for label in TABLE1_VALUES}
    for row in table1():
        groups[row.label].append(row.index)
    return groups


__all__ = [
    "GbgError",
    "gbg_direct",
    "gbg_shifted",
    "gbg_formula",
    "gbg_mod2",
    "mod2_bounds",
    "nu",
    "nu_bound",
    "ValueCensus",
    "a_r",
    "a_r_census",
    "table1",
    "table1_groups",
    "table1_row",
    "TABLE1",
    "TABLE1_VALUES",
    "PartitionError",
]
