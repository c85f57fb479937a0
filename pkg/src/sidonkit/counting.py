"""Exact counting statistics around a Sidon set A in a finite abelian group G.

All counts are exact integers; main terms and discrepancies are Fractions.
Floating point enters only in the final normalisation of theta and in
square-root bounds.

Sets may be passed as SidonSets, numpy arrays of group codes, or iterables
of GroupElements / coordinate tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import sqrt
from typing import Any, Optional

import numpy as np

from .errors import DomainError, EmptySetError
from .ff_core import AmbientGroup, FieldSpec, GroupElement
from .sidon import SidonSet, sidon_delta

_CHUNK = 1 << 22


def as_codes(G: AmbientGroup, X) -> np.ndarray:
    """Sorted distinct codes of X."""
    if isinstance(X, SidonSet):
        if X.group != G:
            raise DomainError("set lives in a different group")
        return X.array
    if isinstance(X, np.ndarray):
        arr = np.unique(X.astype(np.int64, copy=False))
        if arr.size and (arr[0] < 0 or arr[-1] >= G.order):
            raise ValueError("code outside the group")
        return arr
    return G.codes(X if X is not None else ())


def _mask(G: AmbientGroup, codes: np.ndarray) -> np.ndarray:
    G.check_capacity(G.order, "membership table")
    m = np.zeros(G.order, dtype=bool)
    m[codes] = True
    return m


# -- representation functions -----------------------------------------------------

@dataclass(frozen=True)
class RepFunction:
    domain: AmbientGroup
    table: np.ndarray = dc_field(repr=False)

    def __getitem__(self, x) -> int:
        code = x.code if isinstance(x, GroupElement) else int(x)
        return int(self.table[code])

    @property
    def counts(self) -> dict[GroupElement, int]:
        nz = np.nonzero(self.table)[0]
        return {self.domain.from_code(int(c)): int(self.table[c]) for c in nz}

    def total(self) -> int:
        return int(self.table.sum())


def _rep_table(G: AmbientGroup, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    G.check_capacity(a.size * b.size, "representation tally")
    G.check_capacity(G.order, "representation table")
    if a.size == 0 or b.size == 0:
        return np.zeros(G.order, dtype=np.int64)
    diffs = G.sub_codes(a[:, None], b[None, :]).ravel()
    return np.bincount(diffs, minlength=G.order).astype(np.int64)


def rep_function(A, B, G: AmbientGroup) -> RepFunction:
    """r_{A-B}(x) = #{(a, b) in A x B : a - b = x}."""
    a, b = as_codes(G, A), as_codes(G, B)
    table = _rep_table(G, a, b)
    assert int(table.sum()) == a.size * b.size
    table.setflags(write=False)
    return RepFunction(G, table)


def identity_check(A, B, G: AmbientGroup) -> bool:
    """sum r_{A-B} = |A||B|  and  sum r_{A-B}^2 = sum r_{A-A} r_{B-B}."""
    a, b = as_codes(G, A), as_codes(G, B)
    rab = _rep_table(G, a, b)
    raa = _rep_table(G, a, a)
    rbb = _rep_table(G, b, b)
    first = int(rab.sum()) == a.size * b.size
    # python ints: the squared tallies can exceed int64 only far beyond the ceiling
    second = sum(int(v) ** 2 for v in rab[rab > 0]) == int(np.dot(raa, rbb))
    return first and second


# -- the pair count and its theta report ---------------------------------------------

def _pair_count_pairs(A: SidonSet, b: np.ndarray, bp: np.ndarray) -> int:
    G = A.group
    G.check_capacity(b.size * bp.size, "pair scan")
    if b.size == 0 or bp.size == 0:
        return 0
    total = 0
    step = max(1, _CHUNK // bp.size)
    for i in range(0, b.size, step):
        sums = G.add_codes(b[i:i + step, None], bp[None, :])
        total += int(np.count_nonzero(A.mask[sums]))
    return total


def _pair_count_rep(A: SidonSet, b: np.ndarray, bp: np.ndarray) -> int:
    if b.size == 0 or bp.size == 0:
        return 0
    r = _rep_table(A.group, A.array, b)
    return int(r[bp].sum())


def pair_count(A: SidonSet, B, Bp, strategy: str = "auto") -> int:
    """S = #{(b, b') in B x B' : b + b' in A}.

    ``strategy`` is "pairs" (scan B x B'), "rep" (tally r_{A-B} and sum it
    over B') or "auto" (whichever touches fewer pairs).
    """
    G = A.group
    b, bp = as_codes(G, B), as_codes(G, Bp)
    if strategy == "auto":
        strategy = "pairs" if b.size * bp.size <= len(A) * b.size + bp.size else "rep"
    if strategy == "pairs":
        return _pair_count_pairs(A, b, bp)
    if strategy == "rep":
        return _pair_count_rep(A, b, bp)
    raise ValueError(f"unknown strategy {strategy!r}")


@dataclass
class CountReport:
    S: int
    main_term: Fraction
    theta: float
    theta_bound: float
    within_bound: bool
    sizes: Optional[tuple] = None  # (|A|, |B|, |B'|, |G|, delta)
    details: dict[str, Any] = dc_field(default_factory=dict)


def normalized_error(S: int, main: Fraction, scale: float) -> float:
    if scale == 0:
        return 0.0
    return float(Fraction(S) - main) / scale


def theta_report(A: SidonSet, B, Bp, strategy: str = "auto") -> CountReport:
    """S with its main term |A||B||B'|/|G| and theta against 1 + (|B|/|G|) max(0, delta)."""
    G = A.group
    b, bp = as_codes(G, B), as_codes(G, Bp)
    S = pair_count(A, b, bp, strategy)
    nA, nB, nBp, nG = len(A), b.size, bp.size, G.order
    delta = sidon_delta(A)
    main = Fraction(nA * nB * nBp, nG)
    theta = normalized_error(S, main, sqrt(nB * nBp) * nG ** 0.25)
    bound = 1 + nB / nG * max(0.0, delta)
    return CountReport(S, main, theta, bound, abs(theta) < bound, (nA, nB, nBp, nG, delta))


# -- intersections, sumsets, discrepancy ----------------------------------------------

def sumset_codes(G: AmbientGroup, b: np.ndarray, bp: np.ndarray, method: str = "auto") -> np.ndarray:
    """Sorted codes of B + B'.

    "direct" sorts all |B||B'| sums; "fft" convolves the two indicator
    functions over the group (shaped by its radices) and keeps the entries
    above 1/2.  The convolution values are integers below 2^53 with float
    error far under 1/2 at any size the ceiling allows, so both are exact.
    """
    if b.size == 0 or bp.size == 0:
        return np.zeros(0, dtype=np.int64)
    if method == "auto":
        method = "direct" if b.size * bp.size <= 8 * G.order else "fft"
    if method == "direct":
        G.check_capacity(b.size * bp.size, "sumset")
        return np.unique(G.add_codes(b[:, None], bp[None, :]))
    if method != "fft":
        raise ValueError(f"unknown method {method!r}")
    G.check_capacity(G.order, "sumset convolution")
    shape = G._radices
    x = np.zeros(G.order)
    y = np.zeros(G.order)
    x[b] = 1.0
    y[bp] = 1.0
    axes = tuple(range(len(shape)))
    conv = np.fft.irfftn(np.fft.rfftn(x.reshape(shape)) * np.fft.rfftn(y.reshape(shape)), s=shape, axes=axes)
    return np.nonzero(conv.ravel() > 0.5)[0].astype(np.int64)


def sumset(B, Bp, G: AmbientGroup) -> list[GroupElement]:
    return G.elements(sumset_codes(G, as_codes(G, B), as_codes(G, Bp)))


def productset_codes(f: FieldSpec, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    x = np.unique(np.asarray(x, dtype=np.int64))
    y = np.unique(np.asarray(y, dtype=np.int64))
    if x.size == 0 or y.size == 0:
        return np.zeros(0, dtype=np.int64)
    return np.unique(f.vmul(x[:, None], y[None, :]))


def productset(X, Y, f: FieldSpec) -> list:
    xs = [f(v).value for v in X]
    ys = [f(v).value for v in Y]
    return [f(int(v)) for v in productset_codes(f, np.array(xs, dtype=np.int64), np.array(ys, dtype=np.int64))]


def field_sumset_codes(f: FieldSpec, x, y) -> np.ndarray:
    x = np.unique(np.asarray(x, dtype=np.int64))
    y = np.unique(np.asarray(y, dtype=np.int64))
    if x.size == 0 or y.size == 0:
        return np.zeros(0, dtype=np.int64)
    return np.unique(f.vadd(x[:, None], y[None, :]))


@dataclass
class IntersectionReport:
    intersection: int
    sumset_size: int
    bound: float
    theta_max: float
    within: bool


def intersection_report(A: SidonSet, B, Bp) -> IntersectionReport:
    """|A n B| <= |B+B'||A|/|G| + theta (|B+B'|/|B'|)^(1/2) |G|^(1/4),
    theta at its largest permitted value 1 + max(0, delta)|B'|/|G|."""
    G = A.group
    b, bp = as_codes(G, B), as_codes(G, Bp)
    if bp.size == 0:
        raise EmptySetError("B' must be nonempty")
    inter = int(np.count_nonzero(A.mask[b])) if b.size else 0
    ss = sumset_codes(G, b, bp).size
    nG = G.order
    theta_max = 1 + max(0.0, sidon_delta(A)) * bp.size / nG
    bound = ss * len(A) / nG + theta_max * sqrt(ss / bp.size) * nG ** 0.25
    return IntersectionReport(inter, ss, bound, theta_max, inter <= bound)


@dataclass
class DiscrepancyReport:
    E: Fraction
    intersection: int
    sizes: Optional[tuple] = None  # (|A|, |B|, |G|)
    details: dict[str, Any] = dc_field(default_factory=dict)


def discrepancy(A: SidonSet, B) -> DiscrepancyReport:
    """E_A(B) = |A n B| - |B||A|/|G|."""
    G = A.group
    b = as_codes(G, B)
    inter = int(np.count_nonzero(A.mask[b])) if b.size else 0
    E = inter - Fraction(b.size * len(A), G.order)
    return DiscrepancyReport(E, inter, (len(A), b.size, G.order))


@dataclass
class TranslationReport:
    holds: bool
    witness_c: Optional[GroupElement]
    lhs: Fraction
    rhs: float
    E_minus: Fraction = Fraction(0)  # E_A(B \ (B + c))
    E_plus: Fraction = Fraction(0)  # E_A((B + c) \ B)


def _q_of(A: SidonSet) -> int:
    if A.field is None:
        raise DomainError("the translation bound needs the field size of the construction")
    return A.field.q


def translation_lemma_check(A: SidonSet, B, C) -> TranslationReport:
    """Find the first c in C with
    |E_A(B)| <= 2 (q|B|/|C|)^(1/2) + |E_A(B \\ (B+c))| + |E_A((B+c) \\ B)|."""
    G = A.group
    q = _q_of(A)
    b, c = as_codes(G, B), as_codes(G, C)
    if c.size == 0:
        raise EmptySetError("C must be nonempty")
    nA, nB, nC, nG = len(A), b.size, c.size, G.order
    inA = A.mask
    inB = _mask(G, b)
    in_AB = int(np.count_nonzero(inA[b]))
    density = Fraction(nA, nG)
    E_B = in_AB - nB * density
    lhs = abs(E_B)
    radius_sq = Fraction(4 * q * nB, nC)
    radius = sqrt(radius_sq)
    if nB == 0:
        return TranslationReport(True, G.from_code(int(c[0])), lhs, radius)

    step = max(1, _CHUNK // nB)
    for start in range(0, nC, step):
        cs = c[start:start + step]
        # the search usually stops early, so charge the ceiling for work actually done
        G.check_capacity((start + cs.size) * nB, "translation search")
        shifted = G.add_codes(cs[:, None], b[None, :])
        overlap = np.count_nonzero(inB[shifted], axis=1)
        a_shift = np.count_nonzero(inA[shifted], axis=1)
        a_both = np.count_nonzero(inA[shifted] & inB[shifted], axis=1)
        moved = nB - overlap
        e_minus = (in_AB - a_both) - moved * (nA / nG)
        e_plus = (a_shift - a_both) - moved * (nA / nG)
        slack = radius + np.abs(e_minus) + np.abs(e_plus) - float(lhs)
        for i in np.nonzero(slack >= -1e-9)[0]:
            em = (in_AB - int(a_both[i])) - int(moved[i]) * density
            ep = (int(a_shift[i]) - int(a_both[i])) - int(moved[i]) * density
            gap = lhs - abs(em) - abs(ep)
            if gap <= 0 or gap * gap <= radius_sq:
                return TranslationReport(True, G.from_code(int(cs[i])), lhs,
                                         radius + float(abs(em) + abs(ep)), em, ep)
    return TranslationReport(False, None, lhs, radius)
