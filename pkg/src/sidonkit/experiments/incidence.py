"""Point-line incidences in F_q x F_q counted directly and through the Welch set."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

import numpy as np

from ..counting import CountReport, normalized_error, pair_count, theta_report
from ..errors import SlopeError
from ..ff_core import FieldSpec, log_table
from ..sidon import construct_welch

# slack factor on the error constant at desk scale (the asymptotic constant is 1 + o(1))
DESK_CONSTANT = 2.0


@dataclass(frozen=True)
class IncidenceInstance:
    """Points (x, y) and non-vertical lines y = slope * x + intercept, by field code."""

    field: FieldSpec
    points: tuple[tuple[int, int], ...]
    lines: tuple[tuple[int, int], ...]

    def __post_init__(self):
        f = self.field
        pts = tuple(sorted({(f(x).value, f(y).value) for x, y in self.points}))
        lns = tuple(sorted({(f(a).value, f(b).value) for a, b in self.lines}))
        if any(a == 0 for a, _ in lns):
            raise SlopeError("lines must have nonzero slope")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "lines", lns)


def count_incidences(inst: IncidenceInstance) -> np.ndarray:
    """Per-point incidence counts, by direct evaluation of slope*x + intercept."""
    f = inst.field
    if not inst.points or not inst.lines:
        return np.zeros(len(inst.points), dtype=np.int64)
    px, py = np.array(inst.points, dtype=np.int64).T
    lam, mu = np.array(inst.lines, dtype=np.int64).T
    hits = f.vadd(f.vmul(lam[:, None], px[None, :]), mu[:, None]) == py[None, :]
    return hits.sum(axis=0)


def incidence_experiment(inst: IncidenceInstance) -> CountReport:
    f = inst.field
    q = f.q
    per_point = count_incidences(inst)
    total = int(per_point.sum())
    nP, nL = len(inst.points), len(inst.lines)
    main = Fraction(nP * nL, q)
    e = normalized_error(total, main, sqrt(nP * nL * q))

    # Welch encoding: lam*x = y - mu  <=>  (log lam, -mu) + (log x, y) lies on {(t, g^t)}
    A = construct_welch(f)
    G = A.group
    logs = log_table(f, A.construction.g)
    nonzero = [j for j, (x, _) in enumerate(inst.points) if x != 0]
    B = G.join([logs[[a for a, _ in inst.lines]], f.vneg([b for _, b in inst.lines])]) if nL else np.zeros(0, np.int64)
    pts = np.array([inst.points[j] for j in nonzero], dtype=np.int64).reshape(-1, 2)
    Bp = G.join([logs[pts[:, 0]], pts[:, 1]])
    S = pair_count(A, B, Bp)
    sidon = theta_report(A, B, Bp)
    return CountReport(
        S=total,
        main_term=main,
        theta=e,
        theta_bound=DESK_CONSTANT,
        within_bound=abs(e) < DESK_CONSTANT,
        sizes=sidon.sizes,
        details={
            "points": nP,
            "lines": nL,
            "zero_x_points": nP - len(nonzero),
            "zero_x_incidences": total - int(per_point[nonzero].sum()),
            "nonzero_x_incidences": int(per_point[nonzero].sum()),
            "sidon_S": S,
            "sidon_theta": sidon.theta,
            "sidon_theta_bound": sidon.theta_bound,
            "sidon_within": sidon.within_bound,
        },
    )
