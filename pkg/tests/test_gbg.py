from __future__ import annotations

import itertools
from collections import Counter
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import cyc_value, gbg_numeric, partitions
from tcore.cyclotomic import CycInt, root_power
from tcore.gbg import (
    TABLE1,
    GbgError,
    a_r,
    a_r_census,
    gbg_direct,
    gbg_formula,
    gbg_mod2,
    gbg_shifted,
    mod2_bounds,
    nu,
    nu_bound,
    table1,
    table1_groups,
    table1_row,
)
from tcore.partition_core import EMPTY, NVector, Partition, conjugate, diagonal_split, iter_t_cores, nvec_to_core

w3 = root_power(3, 1)


def test_gbg_direct_examples():
    assert gbg_direct(EMPTY, 5) == 0
    assert gbg_direct(Partition((4, 2)), 3) == 1 - w3
    assert gbg_direct(Partition((4, 2)), 3) == 3 + w3 + 2 * w3 * w3
    assert gbg_direct(nvec_to_core((0, -1, 1, 0)), 3) == -1


def test_gbg_direct_matches_numeric():
    for n in range(10):
        for parts in partitions(n):
            for s in (2, 3, 4, 5, 6):
                assert abs(cyc_value(gbg_direct(Partition(parts), s)) - gbg_numeric(parts, s)) < 1e-9


def test_gbg_formula_examples():
    assert gbg_formula((0, -1, 1, 0), 3) == -1
    assert gbg_formula((1, 0, -1, 0), 3) == -w3
    for t in (2, 3, 4, 5):
        for s in (2, 3, 5, 7):
            if s % t and t % s:
                assert gbg_formula((0,) * t, s) == 0


def test_gbg_formula_errors():
    with pytest.raises(GbgError):
        gbg_formula((0, 0, 0, 0), 2)
    with pytest.raises(GbgError):
        gbg_formula((1, 0, 0), 2)


def test_formula_times_denominator_is_numerator():
    # independent route: multiply back instead of dividing
    for s, t in ((3, 4), (5, 3), (4, 5), (7, 2)):
        w = root_power(s, 1)
        den = (1 - w) * (1 - root_power(s, t))
        for n, _ in iter_t_cores(t, 20):
            num = sum((root_power(s, i + 1) * (root_power(s, t * c) - 1) for i, c in enumerate(n)), CycInt(s))
            assert gbg_formula(n, s) * den == num
            assert num.exact_div(den) == gbg_formula(n, s)


def test_formula_vs_direct():
    for s, t in ((2, 3), (3, 2), (3, 4), (4, 3), (5, 4), (2, 5), (5, 2)):
        for n, core in iter_t_cores(t, 20):
            assert gbg_formula(n, s) == gbg_direct(core, s)


def test_gbg_conjugation_rule():
    for n in range(11):
        for parts in partitions(n):
            p = Partition(parts)
            for s in (2, 3, 4, 5):
                assert gbg_direct(conjugate(p), s) == gbg_direct(p, s).conjugate()


def test_diagonal_additivity():
    for n in range(11):
        for parts in partitions(n):
            p = Partition(parts)
            d = diagonal_split(p)
            for s in (2, 3, 4, 5):
                total = gbg_shifted(d.pi1.parts, s) + gbg_shifted(d.pi2.parts, s, below=True) - d.d
                assert total == gbg_direct(p, s)


def test_gbg_mod2_examples():
    assert gbg_mod2((2, -1, -1)) == 0
    assert int(gbg_direct(Partition((4, 2)), 2)) == 0
    assert gbg_mod2((0, 0, 0)) == 0
    lo, hi = mod2_bounds(5)
    assert lo <= gbg_mod2((1, 0, 0, 0, -1)) <= hi
    with pytest.raises(GbgError):
        gbg_mod2((1, -1))


def test_mod2_bounds_are_attained():
    for t in (3, 5, 7):
        vals = {gbg_mod2(n) for n, _ in iter_t_cores(t, 40)}
        assert vals == set(range(mod2_bounds(t)[0], mod2_bounds(t)[1] + 1))


@given(st.sampled_from([3, 5, 7, 9]), st.data())
def test_mod2_matches_formula(t, data):
    head = data.draw(st.lists(st.integers(-4, 4), min_size=t - 1, max_size=t - 1))
    n = NVector.of(tuple(head) + (-sum(head),))
    lo, hi = mod2_bounds(t)
    assert lo <= gbg_mod2(n) <= hi
    assert gbg_mod2(n) == int(gbg_formula(n, 2))


def test_nu_examples():
    c = nu(3, 4)
    assert c.count == 5
    assert set(c.values) == {CycInt.integer(3, -1), CycInt(3), CycInt.integer(3, 1), -w3, -w3 * w3}
    assert nu(2, 3).count == 2
    assert nu(4, 5).count < 14


def test_nu_agrees_with_enumeration_of_cores():
    # the residue reduction misses nothing: direct enumeration finds the same set
    for s, t in ((3, 4), (2, 3), (4, 3), (5, 3)):
        direct = {gbg_direct(c, s) for _, c in iter_t_cores(t, 60)}
        assert direct == nu(s, t).values


def test_nu_errors_and_jobs():
    with pytest.raises(GbgError):
        nu(4, 6)
    with pytest.raises(GbgError):
        nu(5, 6, budget=10)
    assert nu(5, 4, jobs=2).values == nu(5, 4).values


def test_nu_bound():
    assert nu_bound(3, 4) == 5
    assert nu_bound(2, 3) == 2
    assert nu_bound(5, 6) == 42
    with pytest.raises(GbgError):
        nu_bound(2, 4)


def test_a_r_census():
    assert a_r_census(3, 2) == [2, 2, 2]
    assert sum(a_r_census(3, 2)) == comb(4, 2)
    assert a_r_census(5, 1) == [1] * 5
    c = a_r_census(4, 2)
    assert sum(c) == comb(5, 2) and len(set(c)) > 1
    assert a_r(3, 4, 0) == nu_bound(3, 4)


def test_a_r_equidistributed_when_coprime():
    for s, t in ((3, 4), (5, 3), (4, 5), (7, 2)):
        c = a_r_census(s, t)
        assert len(set(c)) == 1 and c[0] == comb(s + t - 1, t) // s


def test_table1_examples():
    rows = {r.index: r for r in table1()}
    assert rows[1].label == "-1"
    assert rows[14].label == "1"
    assert rows[24].label == "-w^2"
    assert rows[24].value == -w3 * w3


def test_table1_matches_printed_table():
    rows = table1()
    assert len(rows) == 27
    assert all(r.label == r.expected_label for r in rows)
    sizes = {k: len(v) for k, v in table1_groups().items()}
    assert sizes == {"-1": 1, "0": 12, "1": 6, "-w": 4, "-w^2": 4}


def test_table1_representatives_are_zero_sum_and_distinct():
    residues = Counter(tuple(c % 3 for c in rep) for _, rep, _ in TABLE1)
    assert len(residues) == 27
    for idx, rep, _ in TABLE1:
        assert sum(rep) == 0
        assert table1_row(rep) == idx


def test_table1_residue_classes_cover_all():
    ms = [m for m in itertools.product(range(3), repeat=4) if sum(m) % 3 == 0]
    assert sorted(r.residue for r in table1()) == sorted(ms)
