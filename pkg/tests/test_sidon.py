import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import brute_is_sidon
from sidonkit.errors import (
    DegenerateFamilyError,
    DegreeError,
    EvenCharacteristicError,
    LambdaZeroError,
    NotGeneratorError,
)
from sidonkit.ff_core import Polynomial, field_create, group_create, primes_between
from sidonkit.sidon import (
    Explicit,
    construct_golomb,
    construct_parabolic,
    construct_welch,
    explicit_set,
    sidon_delta,
    verify_sidon,
)


def test_small_parabolic_set_listed():
    f = field_create(5)
    A = construct_parabolic(f, [0, 1], [0, 0, 1])
    assert [e.plain() for e in A.elements] == [(0, 0), (1, 1), (2, 4), (3, 4), (4, 1)]
    assert A.delta == 0.0


def test_small_welch_set_listed():
    f = field_create(5)
    A = construct_welch(f, 2)
    assert [e.plain() for e in A.elements] == [(0, 1), (1, 2), (2, 4), (3, 3)]


def test_small_golomb_set_listed():
    # 2^x + 2^y = 1 in F_5: x=1,y=2 (2+4=6) ; x=2,y=1 ; x=3,y=3 (3+3=6)
    A = construct_golomb(field_create(5), 2, 2, 1, "+")
    assert [e.plain() for e in A.elements] == [(1, 2), (2, 1), (3, 3)]


@pytest.mark.parametrize("q", [(3, 1), (7, 1), (13, 1), (3, 2), (5, 2), (3, 3)])
def test_parabolic_sidon_by_brute_force(q):
    f = field_create(*q)
    for pp, rp in ([[0, 1], [0, 0, 1]], [[0, 0, 1], [0, 1]], [[1, 2, 1], [0, 1, 2]]):
        try:
            A = construct_parabolic(f, pp, rp)
        except DegenerateFamilyError:
            continue
        assert len(A) == f.q
        assert brute_is_sidon(A)
        assert verify_sidon(A).is_sidon


@pytest.mark.parametrize("q", [(2, 2), (2, 3), (5, 1), (11, 1), (3, 2), (2, 4)])
def test_welch_and_golomb_by_brute_force(q):
    f = field_create(*q)
    W = construct_welch(f)
    assert len(W) == f.q - 1 and brute_is_sidon(W)
    for sign in "+-":
        for lam in (1, f.q - 1):
            Gm = construct_golomb(f, lam=lam, sign=sign)
            assert len(Gm) == f.q - 2
            assert brute_is_sidon(Gm)


def test_golomb_with_two_generators():
    f = field_create(13)
    gens = [g for g in range(2, 13) if f.is_generator(g)]
    for g1 in gens:
        for g2 in gens:
            A = construct_golomb(f, g1, g2, 5, "-")
            assert len(A) == 11 and verify_sidon(A).is_sidon


def test_delta_values():
    f = field_create(11)
    assert construct_parabolic(f, [0, 1], [0, 0, 1]).delta == 0.0
    assert construct_golomb(f).delta == 1.0
    w = construct_welch(f).delta
    assert 0.4 < w < 0.5
    assert construct_welch(f).delta_sign == 1


def test_char_two_parabolic_refused_and_not_sidon():
    f = field_create(2, 3)
    with pytest.raises(EvenCharacteristicError):
        construct_parabolic(f, [0, 1], [0, 0, 1])
    A = construct_parabolic(f, [0, 1], [0, 0, 1], allow_even=True)
    v = verify_sidon(A)
    assert not v.is_sidon
    a, b, c, d = v.witness
    assert a - b == c - d and not (a - b).is_zero()
    assert (a, b) != (c, d)


def test_construction_errors():
    f = field_create(7)
    with pytest.raises(DegreeError):
        construct_parabolic(f, [0, 0, 0, 1], [0, 1])
    with pytest.raises(DegenerateFamilyError):
        construct_parabolic(f, [0, 1], [0, 2])  # p - 4r is constant
    with pytest.raises(NotGeneratorError):
        construct_welch(f, 2)  # 2 has order 3 mod 7
    with pytest.raises(LambdaZeroError):
        construct_golomb(f, lam=0)


def test_polynomial_input_accepted():
    f = field_create(7)
    A = construct_parabolic(f, Polynomial([0, 1], 7), Polynomial([0, 0, 1], 7))
    B = construct_parabolic(f, [0, 1], [0, 0, 1])
    assert A.codes == B.codes


def test_verify_witness_on_explicit_set():
    G = group_create([7])
    v = verify_sidon(explicit_set(G, [(0,), (1,), (2,)]))
    assert not v.is_sidon
    a, b, c, d = v.witness
    assert (a - b) == (c - d)
    assert verify_sidon(explicit_set(G, [(0,), (1,), (3,)])).is_sidon


def test_translation_keeps_sidon():
    f = field_create(11)
    A = construct_golomb(f)
    T = A.translate(A.group(3, 4))
    assert isinstance(T.construction, Explicit)
    assert verify_sidon(T).is_sidon and len(T) == len(A)


def test_explicit_delta_non_square_order():
    G = group_create([10])
    A = explicit_set(G, [(0,), (1,), (3,)])
    assert sidon_delta(A) == pytest.approx(10 ** 0.5 - 3)


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 40), st.lists(st.integers(0, 39), max_size=8, unique=True))
def test_verify_agrees_with_brute_force(m, elems):
    G = group_create([m])
    A = explicit_set(G, [(x % m,) for x in set(x % m for x in elems)])
    v = verify_sidon(A)
    assert v.is_sidon == brute_is_sidon(A)
    if not v.is_sidon:
        a, b, c, d = v.witness
        assert a - b == c - d and (a, b) != (c, d) and a != b


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(primes_between(3, 60)), st.integers(0, 10 ** 6))
def test_translates_of_constructions_stay_sidon(p, t):
    f = field_create(p)
    for A in (construct_welch(f), construct_golomb(f), construct_parabolic(f, [0, 1], [0, 0, 1])):
        assert verify_sidon(A.translate(t % A.group.order)).is_sidon
