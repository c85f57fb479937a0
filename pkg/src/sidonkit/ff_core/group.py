"""Finite abelian product groups Z_m x ... x (F_q, +).

Elements carry a flat integer code: the mixed-radix number whose digits are
the component codes, first component most significant.  Increasing code
order is therefore the lexicographic order over the components' canonical
orders, which is the enumeration order of the group.

Internally each additive field component F_{p^k} splits into k radix-p
digits, so every group operation is digitwise modular arithmetic on codes.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from math import prod
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

from ..errors import CapacityError, GroupMismatchError
from .field import FieldElement, FieldSpec

DEFAULT_CEILING = 2 ** 26


@dataclass(frozen=True)
class CyclicZ:
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("Z_m needs m >= 1")

    @property
    def order(self) -> int:
        return self.m

    def __repr__(self) -> str:
        return f"Z_{self.m}"


@dataclass(frozen=True)
class FieldAdditive:
    field: FieldSpec

    @property
    def order(self) -> int:
        return self.field.q

    def __repr__(self) -> str:
        return f"F_{self.field.q}"


Component = Union[CyclicZ, FieldAdditive]


@dataclass(frozen=True)
class AmbientGroup:
    components: tuple[Component, ...]
    ceiling: int = dc_field(default=DEFAULT_CEILING, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise ValueError("a group needs at least one component")

    def __repr__(self) -> str:
        return " x ".join(map(repr, self.components))

    @cached_property
    def order(self) -> int:
        return prod(c.order for c in self.components)

    def __len__(self) -> int:
        return self.order

    @cached_property
    def _radices(self) -> tuple[int, ...]:
        out = []
        for c in self.components:
            if isinstance(c, FieldAdditive):
                out.extend([c.field.p] * c.field.k)
            else:
                out.append(c.m)
        return tuple(out)

    @cached_property
    def _weights(self) -> tuple[int, ...]:
        w, out = 1, []
        for r in reversed(self._radices):
            out.append(w)
            w *= r
        return tuple(reversed(out))

    @cached_property
    def _component_weights(self) -> tuple[int, ...]:
        w, out = 1, []
        for c in reversed(self.components):
            out.append(w)
            w *= c.order
        return tuple(reversed(out))

    def check_capacity(self, n: int, what: str = "enumeration") -> None:
        if n > self.ceiling:
            raise CapacityError(f"{what} needs {n} steps, ceiling is {self.ceiling}")

    # -- element construction ---------------------------------------------

    def __call__(self, *coords) -> GroupElement:
        if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
            coords = tuple(coords[0])
        if len(coords) != len(self.components):
            raise ValueError(f"{self!r} needs {len(self.components)} coordinates")
        out = []
        for c, x in zip(self.components, coords):
            if isinstance(c, FieldAdditive):
                out.append(c.field(x))
            else:
                if isinstance(x, FieldElement):
                    raise TypeError("field element given for a cyclic component")
                out.append(int(x) % c.m)
        return GroupElement(self, tuple(out))

    @property
    def zero(self) -> GroupElement:
        return self.from_code(0)

    def from_code(self, code: int) -> GroupElement:
        coords = []
        for c, w in zip(self.components, self._component_weights):
            v = code // w % c.order
            coords.append(c.field(v) if isinstance(c, FieldAdditive) else v)
        return GroupElement(self, tuple(coords))

    def elements(self, codes: Iterable[int]) -> list[GroupElement]:
        return [self.from_code(int(c)) for c in codes]

    def enumerate(self) -> Iterator[GroupElement]:
        self.check_capacity(self.order)
        for code in range(self.order):
            yield self.from_code(code)

    def codes(self, elements: Iterable) -> np.ndarray:
        """Sorted distinct codes of an iterable of GroupElements / coordinate tuples / codes."""
        out = []
        for e in elements:
            if isinstance(e, GroupElement):
                if e.group != self:
                    raise GroupMismatchError(f"{e!r} is not in {self!r}")
                out.append(e.code)
            elif isinstance(e, (tuple, list)):
                out.append(self(*e).code)
            else:
                out.append(int(e))
        arr = np.unique(np.asarray(out, dtype=np.int64))
        if arr.size and (arr[0] < 0 or arr[-1] >= self.order):
            raise ValueError("code outside the group")
        return arr

    # -- vectorised code arithmetic ------------------------------------------

    def split(self, codes) -> list[np.ndarray]:
        """Per-component code arrays."""
        codes = np.asarray(codes, dtype=np.int64)
        return [codes // w % c.order for c, w in zip(self.components, self._component_weights)]

    def join(self, parts: Sequence) -> np.ndarray:
        parts = [np.asarray(x, dtype=np.int64) for x in parts]
        out = np.zeros(np.broadcast(*parts).shape if len(parts) > 1 else parts[0].shape, dtype=np.int64)
        for x, w in zip(parts, self._component_weights):
            out = out + x * w
        return out

    def add_codes(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for r, w in zip(self._radices, self._weights):
            out += (a // w % r + b // w % r) % r * w
        return out

    def neg_codes(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        out = np.zeros(a.shape, dtype=np.int64)
        for r, w in zip(self._radices, self._weights):
            out += (-(a // w % r)) % r * w
        return out

    def sub_codes(self, a, b) -> np.ndarray:
        return self.add_codes(a, self.neg_codes(b))

    def subgroup_codes(self, generators: Iterable) -> np.ndarray:
        """Sorted codes of the subgroup generated by the given elements or codes."""
        sub = np.zeros(1, dtype=np.int64)
        for g in generators:
            g = g.code if isinstance(g, GroupElement) else int(g)
            cycle, x = [0], g
            while x != 0:
                cycle.append(x)
                x = self.add_code(x, g)
            self.check_capacity(sub.size * len(cycle), "subgroup closure")
            sub = np.unique(self.add_codes(sub[:, None], np.array(cycle, dtype=np.int64)[None, :]))
        return sub

    def add_code(self, a: int, b: int) -> int:
        out = 0
        for r, w in zip(self._radices, self._weights):
            out += (a // w % r + b // w % r) % r * w
        return out

    def neg_code(self, a: int) -> int:
        out = 0
        for r, w in zip(self._radices, self._weights):
            out += (-(a // w % r)) % r * w
        return out


@dataclass(frozen=True)
class GroupElement:
    group: AmbientGroup
    coords: tuple

    @cached_property
    def code(self) -> int:
        return sum(int(x) * w for x, w in zip(self.coords, self.group._component_weights))

    def _other(self, other) -> GroupElement:
        if not isinstance(other, GroupElement):
            return NotImplemented
        if other.group != self.group:
            raise GroupMismatchError(f"{self!r} and {other!r} live in different groups")
        return other

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self.group.from_code(self.group.add_code(self.code, other.code))

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self.group.from_code(self.group.add_code(self.code, self.group.neg_code(other.code)))

    def __neg__(self) -> GroupElement:
        return self.group.from_code(self.group.neg_code(self.code))

    def __lt__(self, other: GroupElement) -> bool:
        return self.code < self._other(other).code

    def is_zero(self) -> bool:
        return self.code == 0

    def plain(self) -> tuple[int, ...]:
        """Coordinates as plain integers (field coordinates by code)."""
        return tuple(int(x) for x in self.coords)

    def __repr__(self) -> str:
        return f"({', '.join(str(int(x)) for x in self.coords)})"


def group_create(components: Sequence) -> AmbientGroup:
    """Build a group from descriptors: CyclicZ / FieldAdditive / int m / FieldSpec."""
    comps = []
    for c in components:
        if isinstance(c, (CyclicZ, FieldAdditive)):
            comps.append(c)
        elif isinstance(c, FieldSpec):
            comps.append(FieldAdditive(c))
        else:
            comps.append(CyclicZ(int(c)))
    return AmbientGroup(tuple(comps))


def group_op(x: GroupElement, y: GroupElement | None, op: str) -> GroupElement:
    if op == "neg":
        return -x
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    raise ValueError(f"unknown group operation {op!r}")


def group_enumerate(G: AmbientGroup) -> Iterator[GroupElement]:
    return G.enumerate()
