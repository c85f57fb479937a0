"""The three dense Sidon set families and an exhaustive Sidon verifier.

* parabolic: {(p(x), r(x)) : x in F_q} in F_q x F_q, |A| = q
* Welch:     {(x, g^x) : x in Z_{q-1}} in Z_{q-1} x F_q, |A| = q - 1
* Golomb:    {(x, y) : g1^x +- g2^y = lam} in Z_{q-1} x Z_{q-1}, |A| = q - 2

A set A is Sidon when every nonzero x has at most one representation
x = a - a' with (a, a') an ordered pair from A.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from math import isqrt, sqrt
from typing import Optional, Sequence, Union

import numpy as np

from .errors import (
    DegenerateFamilyError,
    DegreeError,
    EvenCharacteristicError,
    LambdaZeroError,
    NotGeneratorError,
)
from .ff_core import (
    AmbientGroup,
    CyclicZ,
    FieldAdditive,
    FieldElement,
    FieldSpec,
    GroupElement,
    Polynomial,
    log_table,
    power_table,
)


# -- construction tags --------------------------------------------------------

@dataclass(frozen=True)
class Parabolic:
    p_poly: tuple[int, ...]  # coefficient codes in F_q, low degree first
    r_poly: tuple[int, ...]
    kind: str = dc_field(default="parabolic", init=False)


@dataclass(frozen=True)
class Welch:
    g: int
    kind: str = dc_field(default="welch", init=False)


@dataclass(frozen=True)
class Golomb:
    g1: int
    g2: int
    lam: int
    sign: str
    kind: str = dc_field(default="golomb", init=False)


@dataclass(frozen=True)
class Explicit:
    kind: str = dc_field(default="explicit", init=False)


Construction = Union[Parabolic, Welch, Golomb, Explicit]


@dataclass(frozen=True)
class SidonSet:
    """A candidate Sidon set: distinct group elements stored by sorted code."""

    group: AmbientGroup
    codes: tuple[int, ...]
    construction: Construction = Explicit()
    field: Optional[FieldSpec] = None

    def __post_init__(self):
        codes = tuple(sorted(int(c) for c in self.codes))
        if len(set(codes)) != len(codes):
            raise ValueError("Sidon set elements must be distinct")
        object.__setattr__(self, "codes", codes)

    def __len__(self) -> int:
        return len(self.codes)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.asarray(self.codes, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    @cached_property
    def mask(self) -> np.ndarray:
        """Boolean membership table indexed by group code."""
        self.group.check_capacity(self.group.order, "membership table")
        m = np.zeros(self.group.order, dtype=bool)
        m[self.array] = True
        m.setflags(write=False)
        return m

    @property
    def elements(self) -> list[GroupElement]:
        return self.group.elements(self.codes)

    def __contains__(self, x) -> bool:
        code = x.code if isinstance(x, GroupElement) else int(x)
        return 0 <= code < self.group.order and bool(self.mask[code])

    @property
    def delta(self) -> float:
        return sidon_delta(self)

    @property
    def delta_sign(self) -> int:
        """Exact sign of |G|^(1/2) - |A|."""
        d = self.group.order - len(self) ** 2
        return (d > 0) - (d < 0)

    def translate(self, t) -> SidonSet:
        t = t.code if isinstance(t, GroupElement) else int(t)
        shifted = self.group.add_codes(self.array, t)
        return SidonSet(self.group, tuple(shifted.tolist()), Explicit(), self.field)


@dataclass(frozen=True)
class SidonVerdict:
    is_sidon: bool
    witness: Optional[tuple[GroupElement, GroupElement, GroupElement, GroupElement]] = None


def explicit_set(group: AmbientGroup, elements, field: Optional[FieldSpec] = None) -> SidonSet:
    return SidonSet(group, tuple(group.codes(elements).tolist()), Explicit(), field)


# -- constructions --------------------------------------------------------------

def _coeff_codes(f: FieldSpec, poly) -> tuple[int, ...]:
    if isinstance(poly, Polynomial):
        if poly.p != f.p:
            raise ValueError("polynomial characteristic differs from the field's")
        coeffs = list(poly.coeffs)
    else:
        coeffs = [f(c).value for c in poly]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(int(c) for c in coeffs)


def eval_field_poly(f: FieldSpec, coeffs: Sequence[int], x) -> np.ndarray:
    """Evaluate a polynomial with F_q coefficient codes at an array of codes."""
    x = np.asarray(x, dtype=np.int64)
    acc = np.zeros(x.shape, dtype=np.int64)
    for c in reversed(coeffs):
        acc = f.vadd(f.vmul(acc, x), c)
    return acc


def construct_parabolic(f: FieldSpec, p_poly, r_poly, allow_even: bool = False) -> SidonSet:
    """{(p(x), r(x)) : x in F_q} for an admissible pair of polynomials of degree <= 2.

    Polynomials are given as Polynomial objects (prime fields) or as
    coefficient sequences over F_q, lowest degree first.

    In characteristic 2 every such map is additive up to a constant, so the
    image is a coset of a subgroup of order q and never a Sidon set; those
    fields are refused unless ``allow_even`` is set.
    """
    pc, rc = _coeff_codes(f, p_poly), _coeff_codes(f, r_poly)
    if len(pc) > 3 or len(rc) > 3:
        raise DegreeError("parabolic construction needs degree <= 2 polynomials")
    if f.p == 2 and not allow_even:
        raise EvenCharacteristicError("parabolic sets are never Sidon in characteristic 2")
    pc3 = pc + (0,) * (3 - len(pc))
    rc3 = rc + (0,) * (3 - len(rc))
    for mu in range(f.q):
        lin = f.sub_code(pc3[1], f.mul_code(mu, rc3[1]))
        quad = f.sub_code(pc3[2], f.mul_code(mu, rc3[2]))
        if lin == 0 and quad == 0:
            raise DegenerateFamilyError(f"p - mu*r is constant for mu = {mu}")
    xs = np.arange(f.q, dtype=np.int64)
    G = AmbientGroup((FieldAdditive(f), FieldAdditive(f)))
    codes = G.join([eval_field_poly(f, pc, xs), eval_field_poly(f, rc, xs)])
    if len(np.unique(codes)) != f.q:
        raise DegenerateFamilyError("x -> (p(x), r(x)) is not injective")
    return SidonSet(G, tuple(codes.tolist()), Parabolic(pc, rc), f)


def _require_generator(f: FieldSpec, g) -> int:
    g = f(g).value
    if not f.is_generator(g):
        raise NotGeneratorError(f"{g} does not generate F_{f.q}^*")
    return g


def construct_welch(f: FieldSpec, g=None) -> SidonSet:
    """{(x, g^x) : x in Z_{q-1}} inside Z_{q-1} x F_q."""
    g = f.generator.value if g is None else _require_generator(f, g)
    G = AmbientGroup((CyclicZ(f.q - 1), FieldAdditive(f)))
    xs = np.arange(f.q - 1, dtype=np.int64)
    codes = G.join([xs, power_table(f, g)])
    return SidonSet(G, tuple(codes.tolist()), Welch(g), f)


def construct_golomb(f: FieldSpec, g1=None, g2=None, lam=1, sign: str = "+") -> SidonSet:
    """{(x, y) : g1^x + g2^y = lam} (sign '+') or g1^x - g2^y = lam (sign '-')."""
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    g1 = f.generator.value if g1 is None else _require_generator(f, g1)
    g2 = f.generator.value if g2 is None else _require_generator(f, g2)
    lam = f(lam).value
    if lam == 0:
        raise LambdaZeroError("lambda must be nonzero")
    s = power_table(f, g1)
    # g2^y = lam - g1^x  or  g2^y = g1^x - lam; the '-' variant is the '+' one with g2^y negated
    v = f.vsub(lam, s)
    if sign == "-":
        v = f.vneg(v)
    keep = v != 0
    xs = np.arange(f.q - 1, dtype=np.int64)[keep]
    ys = log_table(f, g2)[v[keep]]
    G = AmbientGroup((CyclicZ(f.q - 1), CyclicZ(f.q - 1)))
    codes = G.join([xs, ys])
    return SidonSet(G, tuple(codes.tolist()), Golomb(g1, g2, lam, sign), f)


# -- verification -----------------------------------------------------------------

def difference_table(A: SidonSet) -> np.ndarray:
    """Codes of a - a' for all ordered pairs, shape (|A|, |A|)."""
    n = len(A)
    A.group.check_capacity(n * n, "difference tally")
    return A.group.sub_codes(A.array[:, None], A.array[None, :])


def verify_sidon(A: SidonSet) -> SidonVerdict:
    n = len(A)
    if n < 2:
        return SidonVerdict(True)
    diffs = difference_table(A)
    flat = diffs.ravel()
    values, counts = np.unique(flat, return_counts=True)
    bad = values[(counts > 1) & (values != 0)]
    if bad.size == 0:
        return SidonVerdict(True)
    d = bad[0]
    rows, cols = np.nonzero(diffs == d)
    (i, j), (k, l) = (rows[0], cols[0]), (rows[1], cols[1])
    els = A.group.elements(A.array[[i, j, k, l]])
    return SidonVerdict(False, tuple(els))


def sidon_delta(A: SidonSet) -> float:
    """|G|^(1/2) - |A|, exact whenever |G| is a perfect square."""
    order = A.group.order
    r = isqrt(order)
    if r * r == order:
        return float(r - len(A))
    return sqrt(order) - len(A)
