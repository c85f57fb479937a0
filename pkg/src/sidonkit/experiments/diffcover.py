"""Smallest M with {g^x - g^y : 0 <= x, y <= M} = F_p."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import sqrt
from typing import Optional

import numpy as np

from ..errors import DomainError, NotGeneratorError
from ..ff_core import FieldSpec, power_table


@dataclass
class DiffCoverReport:
    p: int
    g: int
    M_min: int
    ratio: float  # M_min / p^(3/4)
    threshold: float = sqrt(2)
    sizes: Optional[list[int]] = dc_field(default=None, repr=False)  # |cover| after each M

    @property
    def below_threshold(self) -> bool:
        return self.M_min <= self.threshold * self.p ** 0.75


def difference_cover_min(f: FieldSpec, g=None, record_sizes: bool = False) -> DiffCoverReport:
    if f.k != 1:
        raise DomainError("difference covers are studied over prime fields")
    p = f.p
    if p < 3:
        raise DomainError("F_2 is never covered: every difference of units is 0")
    g = f.generator.value if g is None else f(g).value
    if not f.is_generator(g):
        raise NotGeneratorError(f"{g} is not a primitive root mod {p}")
    pw = power_table(f, g)
    covered = np.zeros(p, dtype=bool)
    covered[0] = True
    count = 1
    sizes = [] if record_sizes else None
    M = 0
    while True:
        new = pw[M]
        diffs = np.concatenate(((new - pw[:M + 1]) % p, (pw[:M + 1] - new) % p))
        fresh = np.unique(diffs[~covered[diffs]])
        covered[fresh] = True
        count += fresh.size
        if sizes is not None:
            sizes.append(count)
        if count == p:
            return DiffCoverReport(p, g, M, M / p ** 0.75, sizes=sizes)
        M += 1
        if M > p - 2:
            raise AssertionError("differences of all units cover F_p for p >= 3")
