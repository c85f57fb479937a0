"""How Sidon sets meet structured sets: subgroups (Fermat) and intervals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

import numpy as np

from ..counting import DiscrepancyReport, discrepancy
from ..errors import DomainError, LambdaZeroError
from ..ff_core import FieldSpec, log_table, power_table
from ..sidon import construct_golomb, construct_parabolic, construct_welch


@dataclass(frozen=True)
class IntervalSpec:
    """The cyclic interval {start, start+1, ..., start+length-1} mod modulus."""

    start: int
    length: int
    modulus: int

    def __post_init__(self):
        if not 1 <= self.length <= self.modulus:
            raise ValueError(f"interval length must be in [1, {self.modulus}]")
        object.__setattr__(self, "start", self.start % self.modulus)

    @classmethod
    def parse(cls, text: str, modulus: int) -> IntervalSpec:
        """'start:length'."""
        start, length = text.split(":")
        return cls(int(start), int(length), modulus)

    def members(self) -> np.ndarray:
        return (self.start + np.arange(self.length, dtype=np.int64)) % self.modulus

    def mask(self) -> np.ndarray:
        m = np.zeros(self.modulus, dtype=bool)
        m[self.members()] = True
        return m

    def __len__(self) -> int:
        return self.length


@dataclass
class FermatRecord:
    q: int
    r: int
    s: int
    Q: int
    Q_prime: int
    count: int
    direct_count: int
    main_term: Fraction  # |A||B|/|G| for the Golomb set and B = log Q x log Q'
    density_term: Fraction  # |Q||Q'|/q
    error_bound: float  # 2 sqrt(q)
    within: bool
    nontrivial: bool

    @property
    def dense(self) -> bool:
        return self.density_term > self.error_bound


def _power_subgroup(f: FieldSpec, e: int) -> np.ndarray:
    units = np.arange(1, f.q, dtype=np.int64)
    return np.unique(f.vpow(units, e))


def fermat_subgroup(f: FieldSpec, r: int, s: int) -> FermatRecord:
    """Pairs (x, y) in Q x Q' with x + y = 1, Q = {x^r}, Q' = {y^s}."""
    if r < 1 or s < 1:
        raise DomainError("exponents must be positive")
    q = f.q
    Q, Qp = _power_subgroup(f, r), _power_subgroup(f, s)
    A = construct_golomb(f, lam=1, sign="+")
    logs = log_table(f, A.construction.g1)
    B = A.group.join([logs[Q][:, None], logs[Qp][None, :]]).ravel()
    rep = discrepancy(A, B)
    inQp = np.zeros(q, dtype=bool)
    inQp[Qp] = True
    direct = int(np.count_nonzero(inQp[f.vsub(1, Q)]))
    main = Fraction(len(A) * B.size, A.group.order)
    bound = 2 * sqrt(q)
    err = abs(rep.E)
    within = err <= 0 or err * err <= 4 * q
    return FermatRecord(q, r, s, int(Q.size), int(Qp.size), rep.intersection, direct, main,
                        Fraction(int(Q.size * Qp.size), q), bound, within, rep.intersection > 0)


@dataclass
class IntervalRecord:
    count: int
    main_term: Fraction  # |I||J|/p
    bound: float
    within: bool
    r: int
    lam: int


def interval_bound(nI: int, nJ: int, p: int, r: int) -> float:
    return 4 ** r * ((nI * nJ / p ** 1.5) ** (1 / r) + 1) * sqrt(p)


def interval_distribution(f: FieldSpec, g, I: IntervalSpec, J: IntervalSpec, lam, r: int) -> IntervalRecord:
    """#{(x, y) in I x J : g^x - g^y = lam} against |I||J|/p with the 4^r error term."""
    if f.k != 1:
        raise DomainError("interval statements are over prime fields")
    p = f.p
    if r < 1:
        raise DomainError("r must be a positive integer")
    if I.modulus != p - 1 or J.modulus != p - 1:
        raise DomainError(f"intervals must live in Z_{p - 1}")
    g = f.generator.value if g is None else f(g).value
    lam = f(lam).value
    if lam == 0:
        raise LambdaZeroError("lambda must be nonzero")
    pw = power_table(f, g)
    logs = log_table(f, g)
    target = f.vsub(pw[I.members()], lam)  # g^y must equal g^x - lam
    ys = logs[target[target != 0]]
    count = int(np.count_nonzero(J.mask()[ys]))
    main = Fraction(len(I) * len(J), p)
    bound = interval_bound(len(I), len(J), p, r)
    return IntervalRecord(count, main, bound, abs(float(count - main)) <= bound, r, lam)


def interval_image_count(f: FieldSpec, kind: str, I: IntervalSpec, J: IntervalSpec, g=None) -> DiscrepancyReport:
    """{x in I : x^2 in J} (kind 'square') or {x in I : g^x in J} (kind 'exp') as |A n (I x J)|.

    For 'square', I and J are intervals of Z_p; for 'exp', I lies in
    Z_{p-1} and J in Z_p.
    """
    if f.k != 1:
        raise DomainError("interval statements are over prime fields")
    p = f.p
    if kind == "square":
        if I.modulus != p or J.modulus != p:
            raise DomainError(f"square intervals live in Z_{p}")
        A = construct_parabolic(f, [0, 1], [0, 0, 1])
        xs = I.members()
        direct = int(np.count_nonzero(J.mask()[xs * xs % p]))
    elif kind == "exp":
        if I.modulus != p - 1 or J.modulus != p:
            raise DomainError(f"exp intervals live in Z_{p - 1} x Z_{p}")
        A = construct_welch(f, g)
        direct = int(np.count_nonzero(J.mask()[power_table(f, A.construction.g)[I.members()]]))
    else:
        raise ValueError("kind must be 'square' or 'exp'")
    B = A.group.join([I.members()[:, None], J.members()[None, :]]).ravel()
    rep = discrepancy(A, B)
    rep.details.update({"kind": kind, "direct_count": direct})
    return rep
