"""Solution counts for the fibered equations and their named corollaries.

Three fibered kinds, with x' in X(x) and y' in Y(y):

    square:     x' + y' = (x + y)^2
    product:    x' + y' = x y          (x, y nonzero)
    hyperbola:  x y - x' y' = 1        (x, y, x', y' nonzero)

Each count is done by direct field evaluation and again as a pair count
against the Sidon set that encodes the equation; the two must agree.  The
error is normalised as S = T/q + theta sqrt(q T).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import sqrt
from typing import Mapping

import numpy as np

from ..counting import CountReport, normalized_error, pair_count
from ..errors import DomainError, EvenCharacteristicError
from ..ff_core import FieldSpec, log_table
from ..sidon import SidonSet, construct_golomb, construct_parabolic, construct_welch, sidon_delta

KINDS = ("square", "product", "hyperbola")
NAMED = ("square_sum", "product_sum", "bilinear", "shkredov")


@dataclass(frozen=True)
class FiberedFamily:
    """x -> X(x), stored by field code; empty fibers are dropped."""

    base: FieldSpec
    fibers: Mapping[int, frozenset] = dc_field(default_factory=dict)

    def __post_init__(self):
        f = self.base
        clean = {}
        for x, values in self.fibers.items():
            vs = frozenset(f(v).value for v in values)
            if vs:
                clean[f(x).value] = vs
        object.__setattr__(self, "fibers", clean)

    @property
    def mass(self) -> int:
        return sum(len(v) for v in self.fibers.values())

    def pairs(self) -> np.ndarray:
        """(x, x') rows in canonical order, shape (mass, 2)."""
        rows = [(x, v) for x in sorted(self.fibers) for v in sorted(self.fibers[x])]
        return np.array(rows, dtype=np.int64).reshape(-1, 2)


def _check_domain(kind: str, fam: FiberedFamily) -> None:
    if kind in ("product", "hyperbola") and 0 in fam.fibers:
        raise DomainError(f"{kind} fibers are indexed by nonzero elements")
    if kind == "hyperbola" and any(0 in v for v in fam.fibers.values()):
        raise DomainError("hyperbola fiber values must be nonzero")


def explicit_bound(A: SidonSet, nB: int, nBp: int, q: int) -> float:
    """Largest |theta| allowed in S = T/q + theta sqrt(qT), T = |B||B'|, from the
    pair-count theorem: the theorem's own theta cap (using the smaller of B, B',
    the count being symmetric) rescaled by |G|^(1/4)/sqrt(q), plus the shift
    between the density |A|/|G| and 1/q."""
    nG = A.group.order
    T = nB * nBp
    theta_max = 1 + max(0.0, sidon_delta(A)) * min(nB, nBp) / nG
    scale = (nG / (q * q)) ** 0.25
    shift = abs(Fraction(len(A), nG) - Fraction(1, q))
    return theta_max * scale + float(shift) * sqrt(T) / sqrt(q)


def _direct_count(kind: str, f: FieldSpec, b: np.ndarray, bp: np.ndarray) -> int:
    if b.size == 0 or bp.size == 0:
        return 0
    x, xv = b[:, 0][:, None], b[:, 1][:, None]
    y, yv = bp[:, 0][None, :], bp[:, 1][None, :]
    if kind == "square":
        s = f.vadd(x, y)
        hit = f.vadd(xv, yv) == f.vmul(s, s)
    elif kind == "product":
        hit = f.vadd(xv, yv) == f.vmul(x, y)
    else:
        hit = f.vsub(f.vmul(x, y), f.vmul(xv, yv)) == 1
    return int(np.count_nonzero(hit))


def _encode(kind: str, f: FieldSpec, b: np.ndarray, bp: np.ndarray):
    if kind == "square":
        A = construct_parabolic(f, [0, 1], [0, 0, 1])
        enc = lambda rows: A.group.join([rows[:, 0], rows[:, 1]])
    elif kind == "product":
        A = construct_welch(f)
        logs = log_table(f, A.construction.g)
        enc = lambda rows: A.group.join([logs[rows[:, 0]], rows[:, 1]])
    else:
        A = construct_golomb(f, lam=1, sign="-")
        logs = log_table(f, A.construction.g1)
        enc = lambda rows: A.group.join([logs[rows[:, 0]], logs[rows[:, 1]]])
    return A, enc(b), enc(bp)


def fibered_solution_count(kind: str, XF: FiberedFamily, YF: FiberedFamily) -> CountReport:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    f = XF.base
    if YF.base != f:
        raise DomainError("both families must live over the same field")
    if kind == "square" and f.p == 2:
        raise EvenCharacteristicError("x -> (x, x^2) is not Sidon in characteristic 2")
    _check_domain(kind, XF)
    _check_domain(kind, YF)
    b, bp = XF.pairs(), YF.pairs()
    A, B, Bp = _encode(kind, f, b, bp)
    A.group.check_capacity(len(b) * len(bp), "fibered scan")
    S = _direct_count(kind, f, b, bp)
    S_sidon = pair_count(A, B, Bp)
    q = f.q
    T = len(b) * len(bp)
    main = Fraction(T, q)
    theta = normalized_error(S, main, sqrt(q * T))
    bound = explicit_bound(A, len(b), len(bp), q)
    return CountReport(
        S, main, theta, bound, abs(theta) < bound,
        (len(A), len(b), len(bp), A.group.order, sidon_delta(A)),
        {"kind": kind, "T": T, "sidon_S": S_sidon},
    )


# -- named corollaries ------------------------------------------------------------

def _codes(f: FieldSpec, X) -> np.ndarray:
    if isinstance(X, np.ndarray):
        return np.unique(X.astype(np.int64))
    return np.unique(np.array([f(x).value for x in X], dtype=np.int64))


def _tally(f: FieldSpec, values: np.ndarray) -> np.ndarray:
    return np.bincount(values.ravel(), minlength=f.q) if values.size else np.zeros(f.q, dtype=np.int64)


def _indicator(f, keys, values) -> FiberedFamily:
    return FiberedFamily(f, {int(k): values for k in keys})


def named_equation_count(eq: str, X1, X2, X3=(), X4=(), f: FieldSpec = None) -> CountReport:
    """Named equations over sets X1..X4 of F_q.

    square_sum:   x1 + x2 = (x3 + x4)^2
    product_sum:  x1 x2 = x3 + x4          (X1, X2 nonzero)
    bilinear:     x2 x3 - x1 x4 = 1        (X1, X2 nonzero)
    shkredov:     #{(x, y) : x + y in X1, xy in X2}   (odd q; X3, X4 unused)

    Every count is computed directly over the named sets and, except for
    shkredov, again through the fibered engine with indicator fibers.
    """
    if f is None:
        raise TypeError("a field is required")
    x1, x2, x3, x4 = (_codes(f, X) for X in (X1, X2, X3, X4))
    if eq == "shkredov":
        return _shkredov(f, x1, x2)
    if eq not in NAMED:
        raise ValueError(f"eq must be one of {NAMED}")
    if eq in ("product_sum", "bilinear") and ((x1.size and x1[0] == 0) or (x2.size and x2[0] == 0)):
        raise DomainError("X1 and X2 must avoid 0")

    if eq == "square_sum":
        r12 = _tally(f, f.vadd(x1[:, None], x2[None, :]))
        s = f.vadd(x3[:, None], x4[None, :])
        direct = int(r12[f.vmul(s, s)].sum()) if s.size else 0
        kind = "square"
        XF, YF = _indicator(f, x3, x1), _indicator(f, x4, x2)
    elif eq == "product_sum":
        r34 = _tally(f, f.vadd(x3[:, None], x4[None, :]))
        direct = int(r34[f.vmul(x1[:, None], x2[None, :])].sum()) if x1.size and x2.size else 0
        kind = "product"
        XF, YF = _indicator(f, x1, x3), _indicator(f, x2, x4)
    else:
        r23 = _tally(f, f.vmul(x2[:, None], x3[None, :]))
        direct = int(r23[f.vadd(f.vmul(x1[:, None], x4[None, :]), 1)].sum()) if x1.size and x4.size else 0
        kind = "product"
        XF = FiberedFamily(f, {int(u): f.vmul(u, x3).tolist() for u in f.vinv(x1)} if x1.size else {})
        YF = FiberedFamily(f, {int(u): f.vneg(f.vmul(u, x4)).tolist() for u in f.vinv(x2)} if x2.size else {})
    rep = fibered_solution_count(kind, XF, YF)
    rep.details.update({"equation": eq, "direct_S": direct,
                        "set_sizes": [int(x1.size), int(x2.size), int(x3.size), int(x4.size)]})
    return rep


def _shkredov(f: FieldSpec, x1: np.ndarray, x2: np.ndarray) -> CountReport:
    if f.p == 2:
        raise EvenCharacteristicError("the argument halves x1, so q must be odd")
    q = f.q
    xs = np.arange(q, dtype=np.int64)
    in1 = np.zeros(q, dtype=bool)
    in1[x1] = True
    in2 = np.zeros(q, dtype=bool)
    in2[x2] = True
    ok = in1[f.vadd(xs[:, None], xs[None, :])] & in2[f.vmul(xs[:, None], xs[None, :])]
    S = int(np.count_nonzero(ok))
    # (x1/2)^2 - x2 = z^2: count z for every (x1, x2)
    squares = _tally(f, f.vmul(xs, xs))
    half = f.inv_code(f(2).value)
    h = f.vmul(x1, half)
    via_squares = int(squares[f.vsub(f.vmul(h, h)[:, None], x2[None, :])].sum()) if x1.size and x2.size else 0
    n = int(x1.size * x2.size)
    main = Fraction(n)
    theta = normalized_error(S, main, sqrt(n * q))
    bound = sqrt(2)
    return CountReport(
        S, main, theta, bound, abs(theta) < bound or n == 0,
        None,
        {"equation": "shkredov", "via_squares_S": via_squares, "exists": S > 0,
         "hypothesis": n > 2 * q, "guaranteed": n > 2 * q,
         "set_sizes": [int(x1.size), int(x2.size)]},
    )
