from fractions import Fraction
from math import sqrt

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import brute_pair_count, brute_rep
from sidonkit.counting import (
    discrepancy,
    identity_check,
    intersection_report,
    pair_count,
    productset,
    rep_function,
    sumset,
    sumset_codes,
    theta_report,
    translation_lemma_check,
)
from sidonkit.errors import DomainError, EmptySetError
from sidonkit.ff_core import field_create, group_create
from sidonkit.sidon import construct_golomb, construct_parabolic, construct_welch, explicit_set


def _sets(rng, G, n):
    return np.sort(rng.choice(G.order, size=min(n, G.order), replace=False))


def test_rep_function_against_brute_force(rng):
    f = field_create(3, 2)
    G = group_create([4, f])
    for _ in range(20):
        a, b = _sets(rng, G, 7), _sets(rng, G, 5)
        r = rep_function(a, b, G)
        assert {k.code: v for k, v in r.counts.items()} == brute_rep(G, a, b)
        assert r.total() == a.size * b.size


def test_identities_hold(rng):
    for moduli in ([12], [3, 4], [5, 5, 2]):
        G = group_create(moduli)
        for _ in range(10):
            assert identity_check(_sets(rng, G, 6), _sets(rng, G, 9), G)


def test_pair_count_strategies_and_brute_force(rng):
    f = field_create(7)
    for A in (construct_welch(f), construct_golomb(f), construct_parabolic(f, [0, 1], [0, 0, 1])):
        G = A.group
        for _ in range(15):
            b, bp = _sets(rng, G, int(rng.integers(0, 12))), _sets(rng, G, int(rng.integers(0, 12)))
            expect = brute_pair_count(A, b, bp)
            assert pair_count(A, b, bp, "pairs") == expect
            assert pair_count(A, b, bp, "rep") == expect
            assert pair_count(A, b, bp) == expect


def test_theta_zero_for_whole_group():
    f = field_create(5)
    A = construct_parabolic(f, [0, 1], [0, 0, 1])
    all_codes = np.arange(A.group.order)
    rep = theta_report(A, all_codes, all_codes)
    assert rep.S == 125 and rep.main_term == 125 and rep.theta == 0.0


def test_theta_bound_value():
    f = field_create(11)
    A = construct_golomb(f)
    b = np.arange(30)
    rep = theta_report(A, b, b)
    assert rep.theta_bound == pytest.approx(1 + 30 / 100 * 1.0)
    assert rep.main_term == Fraction(9 * 30 * 30, 100)
    assert rep.within_bound


def test_theta_on_adapted_sets(rng):
    # B a piece of A - t, B' = {t}: every pair lands in A
    f = field_create(13)
    A = construct_welch(f)
    G = A.group
    t = 17
    B = np.unique(G.sub_codes(A.array[:6], t))
    rep = theta_report(A, B, [t])
    assert rep.S == 6
    assert rep.within_bound


def test_intersection_bound_example():
    f = field_create(11)
    A = construct_welch(f)
    rep = intersection_report(A, A.array, [0])
    assert rep.intersection == len(A)
    assert rep.sumset_size == len(A)
    assert rep.within
    with pytest.raises(EmptySetError):
        intersection_report(A, A.array, [])


def test_sumset_and_productset():
    G = group_create([10])
    s = sumset([(1,), (2,)], [(0,), (5,)], G)
    assert sorted(e.plain()[0] for e in s) == [1, 2, 6, 7]
    f = field_create(7)
    assert sorted(x.value for x in productset([2, 3], [1, 2], f)) == [2, 3, 4, 6]


def test_discrepancy_exact():
    f = field_create(7)
    A = construct_golomb(f)
    rep = discrepancy(A, A.array)
    assert rep.intersection == 5
    assert rep.E == 5 - Fraction(25, 36)


def test_translation_lemma_subgroup_case():
    f = field_create(13)
    A = construct_golomb(f)
    G = A.group
    H = G.subgroup_codes([G(2, 3).code])
    rep = translation_lemma_check(A, H, H)
    assert rep.holds
    assert rep.lhs ** 2 <= 4 * f.q
    # witness: any c in the subgroup leaves B invariant
    assert rep.E_minus == 0 and rep.E_plus == 0


def test_translation_lemma_whole_group(rng):
    f = field_create(11)
    A = construct_welch(f)
    G = A.group
    for _ in range(10):
        b = _sets(rng, G, 25)
        rep = translation_lemma_check(A, b, np.arange(G.order))
        assert rep.holds and rep.witness_c is not None


def test_translation_needs_field():
    G = group_create([7])
    A = explicit_set(G, [(0,), (1,), (3,)])
    with pytest.raises(DomainError):
        translation_lemma_check(A, [(0,)], [(0,)])


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([5, 7, 8, 9, 11]), st.data())
def test_theta_bound_property(q, data):
    f = field_create(2, 3) if q == 8 else field_create(3, 2) if q == 9 else field_create(q)
    builders = [construct_welch, construct_golomb]
    if f.p != 2:
        builders.append(lambda f: construct_parabolic(f, [0, 1], [0, 0, 1]))
    A = data.draw(st.sampled_from(builders))(f)
    n = A.group.order
    B = data.draw(st.lists(st.integers(0, n - 1), max_size=30, unique=True))
    Bp = data.draw(st.lists(st.integers(0, n - 1), min_size=1, max_size=30, unique=True))
    rep = theta_report(A, np.array(B, dtype=np.int64), np.array(Bp, dtype=np.int64))
    assert rep.within_bound
    assert intersection_report(A, np.array(B, dtype=np.int64), np.array(Bp, dtype=np.int64)).within


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(2, 8), min_size=1, max_size=3), st.data())
def test_identity_property(moduli, data):
    G = group_create(moduli)
    A = data.draw(st.lists(st.integers(0, G.order - 1), max_size=12, unique=True))
    B = data.draw(st.lists(st.integers(0, G.order - 1), max_size=12, unique=True))
    assert identity_check(np.array(A, dtype=np.int64), np.array(B, dtype=np.int64), G)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([[101], [10, 10], [4, 5, 6], [2, 2, 2, 3]]), st.data())
def test_sumset_routes_agree(moduli, data):
    f = field_create(3, 2)
    G = group_create(moduli + [f]) if data.draw(st.booleans()) else group_create(moduli)
    b = np.array(sorted(data.draw(st.sets(st.integers(0, G.order - 1), max_size=60))), dtype=np.int64)
    bp = np.array(sorted(data.draw(st.sets(st.integers(0, G.order - 1), max_size=60))), dtype=np.int64)
    assert np.array_equal(sumset_codes(G, b, bp, "direct"), sumset_codes(G, b, bp, "fft"))
