"""Dense polynomials over Z_p.

A polynomial a_0 + a_1 X + ... + a_n X^n is stored as the tuple
(a_0, a_1, ..., a_n) of residues in [0, p), lowest degree first, with a
nonzero leading coefficient.  The zero polynomial is the empty tuple and
has degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[int, ...]
    p: int

    def __init__(self, coeffs: Iterable[int], p: int):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", _trim([int(c) % p for c in coeffs]))

    @classmethod
    def zero(cls, p: int) -> Polynomial:
        return cls((), p)

    @classmethod
    def monomial(cls, degree: int, p: int, coeff: int = 1) -> Polynomial:
        return cls([0] * degree + [coeff], p)

    @classmethod
    def from_int(cls, n: int, p: int) -> Polynomial:
        """Inverse of ``int(poly)``: read the base-p digits of n as coefficients."""
        digits = []
        while n:
            n, d = divmod(n, p)
            digits.append(d)
        return cls(digits, p)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __int__(self) -> int:
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.p + c
        return n

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def _check(self, other) -> Polynomial:
        if isinstance(other, int):
            return Polynomial([other], self.p)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.p != self.p:
            raise ValueError(f"polynomials over Z_{self.p} and Z_{other.p} do not mix")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self[i] + other[i] for i in range(n)], self.p)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self.coeffs], self.p)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Polynomial.zero(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out, self.p)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        dd = other.degree
        inv_lead = pow(other.leading, -1, p)
        quot = [0] * max(len(rem) - dd, 0)
        for shift in range(len(rem) - 1 - dd, -1, -1):
            c = rem[shift + dd] * inv_lead % p
            if c:
                quot[shift] = c
                for j, b in enumerate(other.coeffs):
                    rem[shift + j] = (rem[shift + j] - c * b) % p
        return Polynomial(quot, p), Polynomial(rem[:dd] if dd > 0 else [], p)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        """Evaluate at a residue by Horner's rule (prime-field evaluation)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        inv = pow(self.leading, -1, self.p)
        return Polynomial([c * inv for c in self.coeffs], self.p)

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"Polynomial(0 over Z_{self.p})"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return f"Polynomial({' + '.join(terms)} over Z_{self.p})"


def monic_polynomials(degree: int, p: int) -> Iterator[Polynomial]:
    """All monic polynomials of the given degree, in increasing ``int`` order."""
    for rest in product(range(p), repeat=degree):
        # rest is (a_{d-1}, ..., a_0), most significant first
        yield Polynomial(list(reversed(rest)) + [1], p)


def is_irreducible(f: Polynomial) -> bool:
    """Exhaustive test: f has no monic factor of degree 1..deg(f)//2."""
    if f.degree < 1:
        return False
    for d in range(1, f.degree // 2 + 1):
        for h in monic_polynomials(d, f.p):
            if (f % h).is_zero():
                return False
    return True


def smallest_irreducible(degree: int, p: int) -> Polynomial:
    """The monic irreducible of the given degree with the smallest ``int`` encoding."""
    for f in monic_polynomials(degree, p):
        if is_irreducible(f):
            return f
    raise AssertionError("irreducible polynomials exist in every degree")
