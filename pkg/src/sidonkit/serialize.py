"""JSON documents for groups, Sidon sets and reports.

Conventions: rationals are {"num": n, "den": d}; field coordinates are the
integer field codes (base-p digits of the coefficient vector); group
elements are arrays of coordinates.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Any

import numpy as np

from .counting import CountReport, DiscrepancyReport
from .ff_core import (
    AmbientGroup,
    CyclicZ,
    FieldAdditive,
    FieldElement,
    FieldSpec,
    GroupElement,
    Polynomial,
    field_create,
)
from .sidon import Explicit, Golomb, Parabolic, SidonSet, SidonVerdict, Welch


def fraction_to_json(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def fraction_from_json(doc) -> Fraction:
    return Fraction(doc["num"], doc["den"])


def field_to_json(f: FieldSpec) -> dict:
    return {"p": f.p, "k": f.k, "modulus": list(f.modulus.coeffs) if f.modulus is not None else None}


def field_from_json(doc) -> FieldSpec:
    mod = doc.get("modulus")
    return field_create(doc["p"], doc.get("k", 1), Polynomial(mod, doc["p"]) if mod else None)


def group_to_json(G: AmbientGroup) -> list:
    out = []
    for c in G.components:
        if isinstance(c, CyclicZ):
            out.append({"type": "cyclic", "m": c.m})
        else:
            out.append({"type": "field", **field_to_json(c.field)})
    return out


def group_from_json(doc, ceiling: int | None = None) -> AmbientGroup:
    comps = []
    for c in doc:
        if c["type"] == "cyclic":
            comps.append(CyclicZ(c["m"]))
        elif c["type"] == "field":
            comps.append(FieldAdditive(field_from_json(c)))
        else:
            raise ValueError(f"unknown component type {c['type']!r}")
    if ceiling is None:
        return AmbientGroup(tuple(comps))
    return AmbientGroup(tuple(comps), ceiling)


def construction_to_json(c) -> dict:
    if isinstance(c, Parabolic):
        return {"kind": "parabolic", "p_poly": list(c.p_poly), "r_poly": list(c.r_poly)}
    if isinstance(c, Welch):
        return {"kind": "welch", "g": c.g}
    if isinstance(c, Golomb):
        return {"kind": "golomb", "g1": c.g1, "g2": c.g2, "lambda": c.lam, "sign": c.sign}
    return {"kind": "explicit"}


def construction_from_json(doc):
    kind = doc["kind"]
    if kind == "parabolic":
        return Parabolic(tuple(doc["p_poly"]), tuple(doc["r_poly"]))
    if kind == "welch":
        return Welch(doc["g"])
    if kind == "golomb":
        return Golomb(doc["g1"], doc["g2"], doc["lambda"], doc["sign"])
    return Explicit()


def sidonset_to_json(A: SidonSet) -> dict:
    return {
        "group": group_to_json(A.group),
        "field": field_to_json(A.field) if A.field is not None else None,
        "construction": construction_to_json(A.construction),
        "elements": [list(e.plain()) for e in A.elements],
    }


def sidonset_from_json(doc) -> SidonSet:
    G = group_from_json(doc["group"])
    field = field_from_json(doc["field"]) if doc.get("field") else None
    codes = G.codes(tuple(e) for e in doc["elements"])
    return SidonSet(G, tuple(codes.tolist()), construction_from_json(doc["construction"]), field)


def to_jsonable(obj: Any) -> Any:
    """Recursively convert reports and library values into JSON-ready data."""
    if isinstance(obj, Fraction):
        return fraction_to_json(obj)
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    if isinstance(obj, FieldElement):
        return obj.value
    if isinstance(obj, GroupElement):
        return list(obj.plain())
    if isinstance(obj, Polynomial):
        return list(obj.coeffs)
    if isinstance(obj, FieldSpec):
        return field_to_json(obj)
    if isinstance(obj, AmbientGroup):
        return group_to_json(obj)
    if isinstance(obj, SidonSet):
        return sidonset_to_json(obj)
    if isinstance(obj, SidonVerdict):
        return {"is_sidon": obj.is_sidon, "witness": to_jsonable(obj.witness)}
    if isinstance(obj, np.ndarray):
        return [to_jsonable(x) for x in obj.tolist()]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if obj is None or isinstance(obj, str):
        return obj
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def count_report_from_json(doc) -> CountReport:
    return CountReport(
        S=doc["S"],
        main_term=fraction_from_json(doc["main_term"]),
        theta=doc["theta"],
        theta_bound=doc["theta_bound"],
        within_bound=doc["within_bound"],
        sizes=tuple(doc["sizes"]) if doc.get("sizes") is not None else None,
        details=doc.get("details", {}),
    )


def discrepancy_report_from_json(doc) -> DiscrepancyReport:
    return DiscrepancyReport(
        E=fraction_from_json(doc["E"]),
        intersection=doc["intersection"],
        sizes=tuple(doc["sizes"]) if doc.get("sizes") is not None else None,
        details=doc.get("details", {}),
    )
