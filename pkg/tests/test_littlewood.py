from __future__ import annotations

from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import is_core, partition_numbers, partitions
from tcore.gbg import gbg_direct
from tcore.littlewood import (
    LittlewoodDecomposition,
    LittlewoodError,
    counterexample_partition,
    decompose,
    gbg_injectivity_check,
    olsson_check,
    recompose,
    s_core_gbg_invariance_check,
    st_cores,
)
from tcore.partition_core import EMPTY, Partition, iter_partitions, iter_t_cores, t_core_of
from tcore.qseries import G_t_eta, euler, euler_dilated

P = Partition


def test_decompose_core_input():
    d = decompose(P((4, 2)), 3)
    assert d.core == P((4, 2))
    assert d.quotient == (EMPTY,) * 3


def test_decompose_example_and_json():
    d = decompose(P((3, 2)), 4)
    assert d.core == P((1,))
    assert sum(q.norm for q in d.quotient) == 1
    assert recompose(d) == P((3, 2))
    assert d.to_json()["core"] == [1]


def test_decomposition_is_a_bijection():
    # distinct partitions of n give distinct (core, quotient) pairs, and every
    # pair with |core| + t * |quotient| = n is reached
    for t in (2, 3):
        for n in range(11):
            seen = {decompose(p, t) for p in iter_partitions(n)}
            assert len(seen) == partition_numbers(n + 1)[n]
            for d in seen:
                assert d.core.norm + t * sum(q.norm for q in d.quotient) == n


def test_generating_function_factorizes():
    # sum over partitions = G_t(q) * (1/E(q^t))^t
    N = 30
    for t in (2, 3, 4):
        lhs = euler(N).invert()
        rhs = G_t_eta(t, N) * euler_dilated(t, N).invert() ** t
        assert lhs == rhs


@given(st.lists(st.integers(1, 8), max_size=7).map(Partition.from_parts), st.integers(2, 5))
def test_round_trip_property(p, t):
    d = decompose(p, t)
    assert recompose(d) == p
    assert d.core == t_core_of(p, t)


def test_recompose_rejects_bad_input():
    with pytest.raises(LittlewoodError):
        recompose(LittlewoodDecomposition(P((3, 2)), (EMPTY,) * 4, 4))
    with pytest.raises(LittlewoodError):
        recompose(LittlewoodDecomposition(EMPTY, (EMPTY,) * 2, 3))


def test_s_core_invariance():
    assert s_core_gbg_invariance_check(P((5,)), 4)
    assert s_core_gbg_invariance_check(P((4, 2)), 3)
    for n in range(13):
        for p in iter_partitions(n):
            for s in (2, 3, 4, 5):
                assert gbg_direct(p, s) == gbg_direct(t_core_of(p, s), s)


def test_s_core_of_t_core_examples():
    assert olsson_check(3, 4, 40)[0]
    assert olsson_check(2, 3, 40)[0]
    for c in st_cores(3, 4).cores:
        assert t_core_of(c, 3) == c
    with pytest.raises(LittlewoodError):
        olsson_check(2, 4, 10)


def test_st_cores_examples():
    assert st_cores(2, 3).cores == (EMPTY, P((1,)))
    assert st_cores(3, 4).size == 5
    assert st_cores(4, 5).size == 14
    with pytest.raises(LittlewoodError):
        st_cores(3, 6)


def test_st_cores_against_brute_force():
    for s, t in ((2, 3), (3, 4), (3, 5), (2, 5)):
        bound = (s * s - 1) * (t * t - 1) // 24
        oracle = sorted((p for n in range(bound + 1) for p in partitions(n) if is_core(p, s) and is_core(p, t)),
                        key=lambda p: (sum(p), p))
        assert [c.parts for c in st_cores(s, t).cores] == oracle
        assert len(oracle) == comb(s + t, s) // (s + t)


def test_injectivity():
    assert gbg_injectivity_check(3, 4).injective
    assert {v for _, v in gbg_injectivity_check(3, 4).values} == {gbg_direct(c, 3) for _, c in iter_t_cores(4, 30)}
    assert gbg_injectivity_check(2, 3).injective
    assert gbg_injectivity_check(5, 4).injective
    rep = gbg_injectivity_check(4, 7)
    assert not rep.injective and not rep.predicted
    assert (EMPTY, P((3, 2, 1))) in rep.collisions


def test_counterexample_partition():
    p = counterexample_partition(4, 7)
    assert p == P((3, 2, 1))
    assert gbg_direct(p, 4) == 0 == gbg_direct(EMPTY, 4)
    p = counterexample_partition(6, 5)
    assert p == P((4, 2, 1, 1))
    assert is_core(p.parts, 6) and is_core(p.parts, 5) and gbg_direct(p, 6) == 0
    for s, t in ((3, 7), (4, 3), (4, 5), (6, 9)):
        with pytest.raises(LittlewoodError):
            counterexample_partition(s, t)
