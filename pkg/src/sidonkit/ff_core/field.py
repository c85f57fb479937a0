"""Finite fields F_q, q = p^k, with integer-encoded elements.

Every element has a canonical integer code in [0, q).  For k = 1 the code
is the residue itself.  For k > 1 the element is a polynomial
c_0 + c_1 x + ... + c_{k-1} x^{k-1} reduced modulo the field's modulus and
its code is c_0 + c_1 p + ... + c_{k-1} p^{k-1}.  The canonical enumeration
order of the field is increasing code order.

Scalar arithmetic goes through polynomial arithmetic and never touches the
power/log tables; the vectorised helpers (``vadd``, ``vmul``, ...) work on
numpy arrays of codes and use tables built from the scalar path.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property, lru_cache
from math import isqrt
from typing import Iterator, Optional, Union

import numpy as np

from ..errors import (
    FieldMismatchError,
    LogOfZeroError,
    ModulusError,
    NotGeneratorError,
    PrimalityError,
)
from .ntheory import is_prime, prime_factors
from .polynomial import Polynomial, is_irreducible, smallest_irreducible


@dataclass(frozen=True)
class FieldSpec:
    p: int
    k: int = 1
    modulus: Optional[Polynomial] = dc_field(default=None)

    @property
    def q(self) -> int:
        return self.p ** self.k

    @property
    def characteristic(self) -> int:
        return self.p

    def __repr__(self) -> str:
        if self.k == 1:
            return f"FieldSpec(Z_{self.p})"
        return f"FieldSpec(F_{self.q}, modulus={self.modulus!r})"

    # -- element construction -------------------------------------------

    def __call__(self, value: Union[int, Polynomial, list, tuple, "FieldElement"]) -> FieldElement:
        """Build an element from its code, a Polynomial, or a coefficient list."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"{value!r} does not belong to {self!r}")
            return value
        if isinstance(value, (Polynomial, list, tuple)):
            poly = value if isinstance(value, Polynomial) else Polynomial(value, self.p)
            if self.k > 1:
                poly = poly % self.modulus
            elif poly.degree > 0:
                raise ValueError("prime field elements are constants")
            return FieldElement(self, int(poly))
        return FieldElement(self, self._reduce_code(int(value)))

    def _reduce_code(self, n: int) -> int:
        if self.k == 1:
            return n % self.p
        if not 0 <= n < self.q:
            raise ValueError(f"code {n} outside [0, {self.q})")
        return n

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def elements(self) -> Iterator[FieldElement]:
        for v in range(self.q):
            yield FieldElement(self, v)

    def units(self) -> Iterator[FieldElement]:
        for v in range(1, self.q):
            yield FieldElement(self, v)

    # -- scalar arithmetic on codes ---------------------------------------

    def _poly(self, a: int) -> Polynomial:
        return Polynomial.from_int(a, self.p)

    def add_code(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return int(self._poly(a) + self._poly(b))

    def neg_code(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        return int(-self._poly(a))

    def sub_code(self, a: int, b: int) -> int:
        return self.add_code(a, self.neg_code(b))

    def mul_code(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        return int(self._poly(a) * self._poly(b) % self.modulus)

    def pow_code(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv_code(a), -n
        result = 1
        while n:
            if n & 1:
                result = self.mul_code(result, a)
            a = self.mul_code(a, a)
            n >>= 1
        return result

    def inv_code(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        if self.k == 1:
            return pow(a, -1, self.p)
        return self.pow_code(a, self.q - 2)

    def order_of(self, a: int) -> int:
        """Multiplicative order of a nonzero code."""
        if a == 0:
            raise ZeroDivisionError("0 is not a unit")
        n = self.q - 1
        for ell in prime_factors(n) if n > 1 else ():
            while n % ell == 0 and self.pow_code(a, n // ell) == 1:
                n //= ell
        return n

    def is_generator(self, a: int) -> bool:
        if a == 0:
            return False
        n = self.q - 1
        return all(self.pow_code(a, n // ell) != 1 for ell in prime_factors(n)) if n > 1 else a == 1

    @cached_property
    def generator(self) -> FieldElement:
        return find_generator(self)

    # -- vectorised arithmetic on code arrays -----------------------------

    @cached_property
    def _digit_weights(self) -> np.ndarray:
        return np.array([self.p ** i for i in range(self.k)], dtype=np.int64)

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return (a + b) % self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for w in self._digit_weights:
            out += ((a // w % self.p + b // w % self.p) % self.p) * w
        return out

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.k == 1:
            return -a % self.p
        out = np.zeros(a.shape, dtype=np.int64)
        for w in self._digit_weights:
            out += (-(a // w % self.p) % self.p) * w
        return out

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return a * b % self.p
        g = self.generator.value
        exp, log = power_table(self, g), log_table(self, g)
        zero = (a == 0) | (b == 0)
        out = exp[(log[a] + log[b]) % (self.q - 1)]
        return np.where(zero, 0, out)

    def vpow(self, a, n: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.k == 1 and n >= 0:
            out = np.ones(a.shape, dtype=np.int64)
            base, e = a % self.p, n
            while e:
                if e & 1:
                    out = out * base % self.p
                base = base * base % self.p
                e >>= 1
            return out
        g = self.generator.value
        exp, log = power_table(self, g), log_table(self, g)
        if n < 0 and np.any(a == 0):
            raise ZeroDivisionError("negative power of 0")
        out = exp[(log[np.where(a == 0, 1, a)] * n) % (self.q - 1)]
        if n > 0:
            out = np.where(a == 0, 0, out)
        return out

    def vinv(self, a) -> np.ndarray:
        return self.vpow(a, -1)


@lru_cache(maxsize=64)
def power_table(f: FieldSpec, g: int) -> np.ndarray:
    """Codes of g^0, g^1, ..., g^(q-2) (read-only)."""
    out = np.empty(f.q - 1, dtype=np.int64)
    cur = 1
    for i in range(f.q - 1):
        out[i] = cur
        cur = f.mul_code(cur, g)
    if cur != 1 or (f.q > 2 and len(set(out.tolist())) != f.q - 1):
        raise NotGeneratorError(f"{g} does not generate the unit group of {f!r}")
    out.setflags(write=False)
    return out


@lru_cache(maxsize=64)
def log_table(f: FieldSpec, g: int) -> np.ndarray:
    """Discrete logs base g indexed by code; entry 0 holds -1 (log 0 undefined)."""
    out = np.full(f.q, -1, dtype=np.int64)
    out[power_table(f, g)] = np.arange(f.q - 1, dtype=np.int64)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, order=False)
class FieldElement:
    field: FieldSpec
    value: int

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine elements of {self.field!r} and {other.field!r}")
            return other.value
        if isinstance(other, (int, np.integer)):
            # integers embed through the prime subfield
            return int(other) % self.field.p
        return NotImplemented

    def _wrap(self, v: int) -> FieldElement:
        return FieldElement(self.field, v)

    def __add__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add_code(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub_code(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub_code(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul_code(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.mul_code(self.value, self.field.inv_code(b)))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.mul_code(b, self.field.inv_code(self.value)))

    def __neg__(self) -> FieldElement:
        return self._wrap(self.field.neg_code(self.value))

    def __pow__(self, n: int) -> FieldElement:
        return self._wrap(self.field.pow_code(self.value, int(n)))

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.inv_code(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __lt__(self, other: FieldElement) -> bool:
        return self.value < self._coerce(other)

    @property
    def poly(self) -> Polynomial:
        return Polynomial.from_int(self.value, self.field.p)

    def order(self) -> int:
        return self.field.order_of(self.value)

    def __repr__(self) -> str:
        if self.field.k == 1:
            return f"{self.value} (mod {self.field.p})"
        return f"{self.poly!r} in F_{self.field.q}"


def field_create(p: int, k: int = 1, modulus: Optional[Polynomial] = None) -> FieldSpec:
    if not is_prime(p):
        raise PrimalityError(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if modulus is not None and not isinstance(modulus, Polynomial):
        modulus = Polynomial(modulus, p)
    if k == 1:
        if modulus is not None and modulus.degree != 1:
            raise ModulusError("a prime field takes no modulus (or a linear one)")
        return FieldSpec(p, 1, None)
    if modulus is None:
        return FieldSpec(p, k, smallest_irreducible(k, p))
    if modulus.p != p:
        raise ModulusError(f"modulus is over Z_{modulus.p}, not Z_{p}")
    if modulus.degree != k:
        raise ModulusError(f"modulus has degree {modulus.degree}, expected {k}")
    if not is_irreducible(modulus):
        raise ModulusError(f"{modulus!r} is reducible")
    return FieldSpec(p, k, modulus.monic())


def field_arith(a: FieldElement, b: Optional[FieldElement], op: str, n: Optional[int] = None) -> FieldElement:
    """Functional entry point: op in add, sub, mul, div, neg, inv, pow."""
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** n
    if not isinstance(b, FieldElement):
        raise TypeError(f"{op} needs a second field element")
    if a.field != b.field:
        raise FieldMismatchError(f"cannot combine elements of {a.field!r} and {b.field!r}")
    return {
        "add": a.__add__,
        "sub": a.__sub__,
        "mul": a.__mul__,
        "div": a.__truediv__,
    }[op](b)


def find_generator(f: FieldSpec) -> FieldElement:
    """Smallest code of multiplicative order q - 1."""
    if f.q == 2:
        return f.one
    for v in range(1, f.q):
        if f.is_generator(v):
            return FieldElement(f, v)
    raise AssertionError("the unit group of a finite field is cyclic")


def discrete_log(f: FieldSpec, g: FieldElement, a: FieldElement) -> int:
    """Baby-step giant-step: the unique e in [0, q-1) with g^e = a."""
    g, a = f(g), f(a)
    if a.value == 0:
        raise LogOfZeroError("log of 0 is undefined")
    if not f.is_generator(g.value):
        raise NotGeneratorError(f"{g!r} does not generate F_{f.q}^*")
    n = f.q - 1
    m = isqrt(n - 1) + 1 if n > 1 else 1
    baby = {}
    cur = 1
    for j in range(m):
        baby.setdefault(cur, j)
        cur = f.mul_code(cur, g.value)
    giant = f.pow_code(g.value, -m)
    cur = a.value
    for i in range(m + 1):
        j = baby.get(cur)
        if j is not None:
            return (i * m + j) % n
        cur = f.mul_code(cur, giant)
    raise AssertionError("generator reaches every unit")
