from __future__ import annotations

import itertools
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import cyc_value, omega
from tcore.cyclotomic import (
    CycInt,
    CyclotomicError,
    ExponentVector,
    counterexample_family,
    cyclotomic_polynomial,
    elementary_symmetric,
    elementary_symmetric_all,
    euler_phi,
    lemma14_decide,
    newton_identities_check,
    poly_mul,
    power_sum,
    root_power,
    sigma_star_relation_check,
    smallest_prime_factor,
    uniqueness_predicted,
)

EV = ExponentVector


def test_cyclotomic_examples():
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(7) == (1,) * 7
    assert cyclotomic_polynomial(9) == (1, 0, 0, 1, 0, 0, 1)
    assert cyclotomic_polynomial(1) == (-1, 1)


def test_divisor_product_is_x_to_s_minus_one():
    for s in range(1, 65):
        prod = [1]
        for d in range(1, s + 1):
            if s % d == 0:
                prod = poly_mul(prod, list(cyclotomic_polynomial(d)))
        assert prod == [-1] + [0] * (s - 1) + [1]
        assert len(cyclotomic_polynomial(s)) - 1 == euler_phi(s)


def test_primitive_root_is_a_zero():
    for s in range(2, 40):
        phi = cyclotomic_polynomial(s)
        assert sum((c * root_power(s, k) for k, c in enumerate(phi)), CycInt(s)) == 0
        assert abs(sum(c * omega(s) ** k for k, c in enumerate(phi))) < 1e-9


def test_ring_examples():
    w = root_power(3, 1)
    assert 1 + w + w * w == 0
    assert root_power(4, 1) ** 2 == -1
    assert (1 - w) * (1 - root_power(3, 2)) == 3
    assert (1 - w).pretty() == "1 - w"
    assert root_power(6, 6) == 1
    assert root_power(5, -1) == root_power(5, 4)


def test_modulus_mismatch():
    with pytest.raises(CyclotomicError):
        root_power(3, 1) + root_power(4, 1)


def test_canonical_form_is_unique():
    # distinct integer combinations of w^0..w^(phi-1) are distinct complex numbers
    for s in (5, 8, 12):
        vals = [CycInt(s, c) for c in itertools.product(range(-1, 2), repeat=euler_phi(s))]
        assert len(set(vals)) == len(vals)


cyc = st.tuples(st.sampled_from([3, 4, 5, 6, 7, 8, 9, 12]), st.lists(st.integers(-5, 5), max_size=14))


@given(cyc, st.lists(st.integers(-5, 5), max_size=14))
def test_arithmetic_matches_complex_values(a, b):
    s, ca = a
    x, y = CycInt.from_exponents(s, ca), CycInt.from_exponents(s, b)
    for got, want in ((x + y, cyc_value(x) + cyc_value(y)), (x * y, cyc_value(x) * cyc_value(y)),
                      (x - y, cyc_value(x) - cyc_value(y)), (x.conjugate(), cyc_value(x).conjugate())):
        assert abs(cyc_value(got) - want) < 1e-6


@given(cyc, st.lists(st.integers(-3, 3), min_size=1, max_size=6))
def test_exact_div_inverts_multiplication(a, b):
    s, ca = a
    x, y = CycInt.from_exponents(s, ca), CycInt(s, b)
    if y:
        assert (x * y).exact_div(y) == x


def test_exact_div_rejects_non_divisible():
    with pytest.raises(CyclotomicError):
        CycInt.integer(3, 1).exact_div(1 - root_power(3, 1))
    with pytest.raises((CyclotomicError, ZeroDivisionError)):
        CycInt.integer(3, 1).exact_div(0)


def test_galois():
    w = root_power(7, 1)
    assert w.galois(3) == root_power(7, 3)
    assert (w + w**2).galois(6) == (w + w**2).conjugate()


def test_power_sums_and_sigmas():
    j, jt = EV(4, (1, 1, 3, 3)), EV(4, (0, 0, 2, 2))
    assert power_sum(j, 1) == 0
    assert power_sum(jt, 1) == 0
    assert power_sum(j, 0) == 4
    assert elementary_symmetric(j, 4) == 1
    assert elementary_symmetric(j, 0) == 1
    with pytest.raises(CyclotomicError):
        elementary_symmetric(j, 5)


@given(st.sampled_from([3, 4, 5, 6, 7]), st.lists(st.integers(0, 6), min_size=1, max_size=5))
def test_sigmas_match_complex_expansion(s, exps):
    v = EV.sorted_from(s, exps)
    sig = elementary_symmetric_all(v)
    roots = [omega(s, j) for j in v.exps]
    for k in range(v.t + 1):
        want = sum(_prod(c) for c in itertools.combinations(roots, k))
        assert abs(cyc_value(sig[k]) - want) < 1e-6


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def test_newton_examples():
    assert newton_identities_check(EV(4, (1, 1, 3, 3)), EV(4, (0, 0, 2, 2)), 1).holds
    v = EV(5, (0, 1, 1, 3))
    assert all(newton_identities_check(v, v, k).holds for k in range(1, 5))
    rep = newton_identities_check(EV(6, (1, 1, 4, 4)), EV(6, (0, 2, 3, 5)), 1)
    assert rep.holds and rep.power_sums_equal


def test_newton_exhaustive_small():
    # equal h_1..h_k forces equal sigma_1..sigma_k
    for s, t in ((3, 3), (4, 3), (5, 3)):
        vecs = [EV(s, c) for c in itertools.combinations_with_replacement(range(s), t)]
        for v, w in itertools.product(vecs, repeat=2):
            assert newton_identities_check(v, w, t).holds


def test_newton_shape_mismatch():
    with pytest.raises(CyclotomicError):
        newton_identities_check(EV(4, (0, 1)), EV(4, (0, 1, 2)), 1)


def test_sigma_star_examples():
    assert sigma_star_relation_check(EV(3, (0, 1, 2)), 1)
    assert sigma_star_relation_check(EV(4, (1, 1, 3, 3)), 2)
    with pytest.raises(CyclotomicError):
        sigma_star_relation_check(EV(3, (0, 1, 2)), 3)


def test_sigma_star_exhaustive():
    for s in range(2, 13):
        for t in range(2, 5):
            for c in itertools.combinations_with_replacement(range(s), t):
                v = EV(s, c)
                assert all(sigma_star_relation_check(v, k) for k in range(1, t))


@settings(max_examples=300)
@given(st.integers(2, 12), st.lists(st.integers(0, 11), min_size=5, max_size=6))
def test_sigma_star_sampled_larger_t(s, exps):
    v = EV.sorted_from(s, exps)
    assert all(sigma_star_relation_check(v, k) for k in range(1, v.t))


def test_lemma14_examples():
    r = lemma14_decide(EV(4, (0, 0, 2, 2)), EV(4, (1, 1, 3, 3)), require_coprime=False)
    assert r.conditions_hold and not r.equal_forced
    same = EV(5, (0, 1, 1))
    r = lemma14_decide(same, same)
    assert r.conditions_hold and r.equal_forced
    r = lemma14_decide(EV.sorted_from(9, (3, 3, 6, 6, 0, 0)), EV(9, (1, 2, 4, 5, 7, 8)), require_coprime=False)
    assert r.conditions_hold and not r.equal_forced
    with pytest.raises(CyclotomicError):
        lemma14_decide(EV(4, (0, 0, 2, 2)), EV(4, (1, 1, 3, 3)))


def _coincidences(s, t):
    seen, hits = {}, 0
    for c in itertools.combinations_with_replacement(range(s), t):
        key = (power_sum(EV(s, c), 1), sum(c) % s)
        hits += key in seen
        seen[key] = c
    return hits


@pytest.mark.parametrize("s,t", [(3, 4), (3, 5), (5, 3), (5, 4), (5, 6), (7, 3), (7, 4), (4, 3), (9, 4), (9, 5)])
def test_uniqueness_when_predicted(s, t):
    # equal sum and product force equal vectors
    assert uniqueness_predicted(s, t)
    assert _coincidences(s, t) == 0


@pytest.mark.parametrize("s,t", [(4, 5), (6, 5), (6, 7), (9, 7)])
def test_coincidences_when_not_predicted(s, t):
    assert not uniqueness_predicted(s, t)
    assert _coincidences(s, t) > 0


def test_counterexample_families():
    j, jt = counterexample_family(4, 5)
    assert j.exps == (0, 1, 1, 3, 3) and jt.exps == (0, 0, 0, 2, 2)
    j, jt = counterexample_family(6, 5)
    assert j.exps == (0, 1, 1, 4, 4) and jt.exps == (0, 0, 2, 3, 5)
    j, jt = counterexample_family(9, 7)
    assert lemma14_decide(j, jt).conditions_hold
    j, jt = counterexample_family(10, 4, require_coprime=False)
    assert j != jt and lemma14_decide(j, jt, require_coprime=False).conditions_hold


def test_general_family_exact_sum_and_product():
    for s in (8, 10, 12, 14, 15, 16, 20, 21, 25, 27, 35):
        p = smallest_prime_factor(s)
        for t in range(2 * p, 2 * p + 4):
            if gcd(s, t) != 1:
                continue
            j, jt = counterexample_family(s, t)
            assert j != jt
            assert abs(sum(omega(s, x) for x in j.exps) - sum(omega(s, x) for x in jt.exps)) < 1e-9
            assert (sum(j.exps) - sum(jt.exps)) % s == 0


@pytest.mark.parametrize("s,t", [(7, 6), (4, 3), (9, 5), (6, 6)])
def test_counterexample_family_rejects(s, t):
    with pytest.raises(CyclotomicError):
        counterexample_family(s, t)
