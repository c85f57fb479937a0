"""Sum-product inequalities, each checked twice.

Every check evaluates the scalar inequality

    |A1| <= X Y / q + sqrt(q X Y / (|A2| |A3|))

(X, Y the relevant sumset/productset sizes) and, independently, the
intersection bound it comes from, applied to the Sidon set and rectangles
B, B' that encode the problem.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from ..counting import field_sumset_codes, intersection_report, productset_codes
from ..errors import DomainError, EmptySetError, ZeroElementError
from ..ff_core import FieldSpec, log_table
from ..sidon import construct_golomb, construct_parabolic, construct_welch, eval_field_poly


@dataclass
class SumProductRecord:
    variant: str
    sizes: tuple[int, int, int]  # |A1|, |A2|, |A3|
    first: int  # |A1A2|, |(A1+1)A2| or |p(A1)+A2|
    second: int  # |A1+A3|, |A1A3| or |r(A1)+A3|
    bound: float
    inequality_holds: bool
    intersection: int
    sumset_size: int
    lemma_bound: float
    lemma_holds: bool
    injective: bool = True


def _codes(f: FieldSpec, X) -> np.ndarray:
    if isinstance(X, np.ndarray):
        return np.unique(X.astype(np.int64))
    return np.unique(np.array([f(x).value for x in X], dtype=np.int64))


def _scalar_bound(q: int, n2: int, n3: int, X: int, Y: int) -> float:
    return X * Y / q + sqrt(q * X * Y / (n2 * n3))


def _record(variant, f, n1, n2, n3, X, Y, A, B, Bp, injective=True) -> SumProductRecord:
    bound = _scalar_bound(f.q, n2, n3, X, Y)
    rep = intersection_report(A, B, Bp)
    assert rep.sumset_size == X * Y
    return SumProductRecord(variant, (n1, n2, n3), X, Y, bound, n1 <= bound,
                            rep.intersection, rep.sumset_size, rep.bound, rep.within, injective)


def _rectangle(G, first: np.ndarray, second: np.ndarray) -> np.ndarray:
    return G.join([first[:, None], second[None, :]]).ravel()


def sum_product_check(A1, A2, A3, f: FieldSpec) -> SumProductRecord:
    """max(|A1A2|, |A1+A3|) through the Welch set, B = log A1 x A1, B' = log A2 x A3."""
    a1, a2, a3 = _codes(f, A1), _codes(f, A2), _codes(f, A3)
    if not (a1.size and a2.size and a3.size):
        raise EmptySetError("A1, A2 and A3 must be nonempty")
    if a1[0] == 0 or a2[0] == 0:
        raise ZeroElementError("A1 and A2 must avoid 0")
    X = productset_codes(f, a1, a2).size
    Y = field_sumset_codes(f, a1, a3).size
    A = construct_welch(f)
    logs = log_table(f, A.construction.g)
    B = _rectangle(A.group, logs[a1], a1)
    Bp = _rectangle(A.group, logs[a2], a3)
    return _record("garaev", f, a1.size, a2.size, a3.size, X, Y, A, B, Bp)


def shifted_product_check(A1, A2, A3, f: FieldSpec) -> SumProductRecord:
    """max(|(A1+1)A2|, |A1A3|) through {g^x - g^y = 1}, B = log(A1+1) x log A1."""
    a1, a2, a3 = _codes(f, A1), _codes(f, A2), _codes(f, A3)
    if not (a1.size and a2.size and a3.size):
        raise EmptySetError("A1, A2 and A3 must be nonempty")
    if a1[0] == 0 or a2[0] == 0 or a3[0] == 0:
        raise ZeroElementError("A1, A2 and A3 must avoid 0")
    shifted = f.vadd(a1, 1)
    if np.any(shifted == 0):
        raise DomainError("A1 must avoid -1 so that A1 + 1 has a logarithm")
    X = productset_codes(f, shifted, a2).size
    Y = productset_codes(f, a1, a3).size
    A = construct_golomb(f, lam=1, sign="-")
    logs = log_table(f, A.construction.g1)
    B = _rectangle(A.group, logs[shifted], logs[a1])
    Bp = _rectangle(A.group, logs[a2], logs[a3])
    return _record("garaev-shen", f, a1.size, a2.size, a3.size, X, Y, A, B, Bp)


def polynomial_sum_check(f: FieldSpec, p_poly, r_poly, A1, A2, A3) -> SumProductRecord:
    """max(|p(A1)+A2|, |r(A1)+A3|) through the parabolic set, B = p(A1) x r(A1)."""
    a1, a2, a3 = _codes(f, A1), _codes(f, A2), _codes(f, A3)
    if not (a1.size and a2.size and a3.size):
        raise EmptySetError("A1, A2 and A3 must be nonempty")
    A = construct_parabolic(f, p_poly, r_poly)
    pc, rc = A.construction.p_poly, A.construction.r_poly
    pa, ra = eval_field_poly(f, pc, a1), eval_field_poly(f, rc, a1)
    injective = np.unique(A.group.join([pa, ra])).size == a1.size
    pa, ra = np.unique(pa), np.unique(ra)
    X = field_sumset_codes(f, pa, a2).size
    Y = field_sumset_codes(f, ra, a3).size
    B = _rectangle(A.group, pa, ra)
    Bp = _rectangle(A.group, a2, a3)
    return _record("polynomial", f, a1.size, a2.size, a3.size, X, Y, A, B, Bp, injective)
