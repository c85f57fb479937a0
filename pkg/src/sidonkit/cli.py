"""Command-line front end.

    sidonkit field info        --p 7
    sidonkit sidon build       --p 7 --construction welch --g 3
    sidonkit sidon verify      --p 7 --construction golomb --lambda 2 --sign -
    sidonkit count theta       --sweep-p 11:31 --construction welch --B random:20 --Bp random:20 --samples 100 --seed 1
    sidonkit exp interval      --p 101 --g auto --I 0:30 --J 5:30 --lambda 1 --r 2 --seed 42

Each run emits one JSON envelope per item (one item per prime in sweep
mode) or a CSV summary.  Exit codes: 0 ok, 1 a tested bound or property
failed, 2 usage error, 3 enumeration ceiling exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field as dc_field
from datetime import datetime, timezone
from fractions import Fraction
from math import sqrt
from typing import Any, Callable, Optional

import numpy as np

from . import __version__
from .counting import (
    discrepancy,
    intersection_report,
    theta_report,
    translation_lemma_check,
)
from .errors import CapacityError, SidonKitError
from .experiments import (
    FiberedFamily,
    IncidenceInstance,
    IntervalSpec,
    difference_cover_min,
    fermat_subgroup,
    fibered_solution_count,
    incidence_experiment,
    interval_distribution,
    interval_image_count,
    named_equation_count,
    polynomial_sum_check,
    random_subset,
    rng_for,
    shifted_product_check,
    sum_product_check,
)
from .ff_core import DEFAULT_CEILING, AmbientGroup, FieldSpec, Polynomial, field_create, primes_between
from .serialize import field_to_json, sidonset_to_json, to_jsonable
from .sidon import SidonSet, construct_golomb, construct_parabolic, construct_welch, verify_sidon

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3

CSV_HEADER = ["command", "p", "k", "q", "instances", "violations", "worst_value", "worst_bound", "ok"]


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    action: str
    options: dict[str, Any] = dc_field(default_factory=dict)

    def __getattr__(self, name):
        try:
            return self.__dict__["options"][name]
        except KeyError:
            raise AttributeError(name) from None

    def echo(self) -> dict:
        return {"command": self.command, "action": self.action, **self.options}


# -- parsing ------------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--p", type=int, help="field characteristic")
    p.add_argument("--k", type=int, default=1, help="extension degree")
    p.add_argument("--modulus", help="irreducible modulus coefficients, low degree first: 1,1,0,1")
    p.add_argument("--sweep-p", help="LO:HI, run once per prime in the range")
    p.add_argument("--seed", type=int, help="seed for every random choice")
    p.add_argument("--samples", type=int, default=1, help="random instances per item")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--output", help="write here instead of standard output")
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING, help="enumeration ceiling")


def _construction(p: argparse.ArgumentParser) -> None:
    p.add_argument("--construction", choices=["parabolic", "welch", "golomb"], required=True)
    p.add_argument("--g", type=generator_arg, default="auto", help="generator code or 'auto'")
    p.add_argument("--g2", type=generator_arg, default="auto", help="second Golomb generator or 'auto'")
    p.add_argument("--lambda", dest="lam", type=int, default=1)
    p.add_argument("--sign", choices=["+", "-"], default="+")
    p.add_argument("--ppoly", default="0,1", help="parabolic p(x) coefficient codes, low degree first")
    p.add_argument("--rpoly", default="0,0,1", help="parabolic r(x) coefficient codes")
    p.add_argument("--allow-even", action="store_true",
                   help="build the parabolic set in characteristic 2 anyway (it is never Sidon there)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sidonkit", description=__doc__.split("\n\n")[0])
    parser.add_argument("--config", help="JSON file with command, action and options")
    groups = parser.add_subparsers(dest="command", required=True)

    field = groups.add_parser("field").add_subparsers(dest="action", required=True)
    _common(field.add_parser("info"))

    sidon = groups.add_parser("sidon").add_subparsers(dest="action", required=True)
    for name in ("build", "verify"):
        sp = sidon.add_parser(name)
        _common(sp)
        _construction(sp)

    count = groups.add_parser("count").add_subparsers(dest="action", required=True)
    for name in ("theta", "intersection", "discrepancy", "translation"):
        sp = count.add_parser(name)
        _common(sp)
        _construction(sp)
        sp.add_argument("--B", default="random:10", help="group set spec")
        if name in ("theta", "intersection"):
            sp.add_argument("--Bp", default="random:10", help="group set spec for B'")
        if name == "translation":
            sp.add_argument("--C", default="all", help="group set spec for C ('same' reuses B)")

    exp = groups.add_parser("exp").add_subparsers(dest="action", required=True)
    sp = exp.add_parser("incidence")
    _common(sp)
    sp.add_argument("--points", default="random:20", help="'all' or random:N")
    sp.add_argument("--lines", default="random:20", help="'all' or random:N")

    sp = exp.add_parser("diffcover")
    _common(sp)
    sp.add_argument("--g", type=generator_arg, default="auto")

    sp = exp.add_parser("sumproduct")
    _common(sp)
    sp.add_argument("--variant", choices=["garaev", "shifted", "polynomial"], default="garaev")
    sp.add_argument("--A1", default="randomunits:8")
    sp.add_argument("--A2", default="randomunits:8")
    sp.add_argument("--A3", default="randomunits:8")
    sp.add_argument("--ppoly", default="0,1")
    sp.add_argument("--rpoly", default="0,0,1")

    sp = exp.add_parser("equation")
    _common(sp)
    sp.add_argument("--eq", required=True,
                    choices=["square_sum", "product_sum", "bilinear", "shkredov", "square", "product", "hyperbola"])
    for name in ("X1", "X2", "X3", "X4"):
        sp.add_argument(f"--{name}", default="randomunits:4")
    sp.add_argument("--fiber-size", type=int, default=3, help="max fiber size for fibered kinds")

    sp = exp.add_parser("fermat")
    _common(sp)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)

    sp = exp.add_parser("interval")
    _common(sp)
    sp.add_argument("--g", type=generator_arg, default="auto")
    sp.add_argument("--I", required=True, help="start:length or random:length")
    sp.add_argument("--J", required=True, help="start:length or random:length")
    sp.add_argument("--lambda", dest="lam", type=int, default=1)
    sp.add_argument("--r", type=int, default=1)

    sp = exp.add_parser("image")
    _common(sp)
    sp.add_argument("--kind", choices=["square", "exp"], required=True)
    sp.add_argument("--g", type=generator_arg, default="auto")
    sp.add_argument("--I", required=True)
    sp.add_argument("--J", required=True)
    return parser


def _flag_map(parser: argparse.ArgumentParser, command: str, action: str) -> dict[str, argparse.Action]:
    sub = parser._subparsers._group_actions[0].choices[command]
    leaf = sub._subparsers._group_actions[0].choices[action]
    return {a.dest: a for a in leaf._actions if a.option_strings and a.dest != "help"}


def _config_argv(parser, path: str) -> list[str]:
    with open(path) as fh:
        doc = json.load(fh)
    if "tool" in doc and "config" in doc:
        doc = doc["config"]
    doc = dict(doc)
    command, action = doc.pop("command"), doc.pop("action")
    flags = _flag_map(parser, command, action)
    argv = [command, action]
    for key, value in doc.items():
        if value is None:
            continue
        if key not in flags:
            raise UsageError(f"unknown config key {key!r}")
        flag = flags[key].option_strings[0]
        if isinstance(flags[key], argparse._StoreTrueAction):
            if value:
                argv.append(flag)
        else:
            argv.append(f"{flag}={value}")
    return argv


_RANDOM_KEYS = ("B", "Bp", "C", "points", "lines", "A1", "A2", "A3", "X1", "X2", "X3", "X4", "I", "J")


def _needs_seed(opts: dict) -> bool:
    if opts.get("eq") in ("square", "product", "hyperbola"):
        return True
    for key in _RANDOM_KEYS:
        v = opts.get(key)
        if isinstance(v, str) and ("random" in v or v.startswith("adapted")):
            return True
    return False


def cmd_parse(argv: list[str]) -> RunConfig:
    """Parse and validate; argparse exits with status 2 on usage errors."""
    parser = build_parser()
    if "--config" in argv or any(a.startswith("--config=") for a in argv):
        pre = argparse.ArgumentParser(add_help=False)
        pre.add_argument("--config")
        known, rest = pre.parse_known_args(argv)
        try:
            argv = _config_argv(parser, known.config) + rest
        except (OSError, ValueError, KeyError, UsageError) as exc:
            parser.error(f"bad config file: {exc}")
    ns = parser.parse_args(argv)
    opts = {k: v for k, v in vars(ns).items() if k not in ("command", "action", "config")}
    if (ns.p is None) == (ns.sweep_p is None):
        parser.error("give exactly one of --p or --sweep-p")
    if ns.samples < 1:
        parser.error("--samples must be >= 1")
    if _needs_seed({**opts, "command": ns.command, "action": ns.action}) and ns.seed is None:
        parser.error("--seed is required whenever random sets are requested")
    if ns.sweep_p is not None:
        try:
            lo, hi = (int(x) for x in ns.sweep_p.split(":"))
        except ValueError:
            parser.error("--sweep-p takes LO:HI")
        if not primes_between(lo, hi):
            parser.error(f"no primes in {ns.sweep_p}")
    return RunConfig(ns.command, ns.action, opts)


# -- set specs ---------------------------------------------------------------------------------

def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _need_rng(rng, spec):
    if rng is None:
        raise UsageError(f"{spec!r} needs --seed")
    return rng


def group_set(spec: str, A: SidonSet, rng, B: Optional[np.ndarray] = None) -> np.ndarray:
    """Group set specs: all, empty, sidon, same, random:N, adapted:N, subgroup:random:K,
    subgroup:x,y;x,y, rect:s1:l1,s2:l2, elements:x,y;x,y."""
    G = A.group
    head, _, rest = spec.partition(":")
    if spec == "all":
        G.check_capacity(G.order)
        return np.arange(G.order, dtype=np.int64)
    if spec == "empty":
        return np.zeros(0, dtype=np.int64)
    if spec == "sidon":
        return A.array
    if spec == "same":
        if B is None:
            raise UsageError("'same' only applies to C")
        return B
    if head == "random":
        return random_subset(_need_rng(rng, spec), G.order, int(rest))
    if head == "adapted":
        # a random piece of A shifted by a random t: the shape that makes theta largest
        rng = _need_rng(rng, spec)
        piece = rng.choice(A.array, size=min(int(rest), len(A)), replace=False) if len(A) else A.array
        t = int(rng.integers(0, G.order))
        return np.unique(G.add_codes(piece, t))
    if head == "subgroup":
        if rest.startswith("random"):
            k = int(rest.split(":")[1])
            gens = _need_rng(rng, spec).integers(0, G.order, size=k)
            return G.subgroup_codes(int(x) for x in gens)
        return G.subgroup_codes(G(*_ints(e)).code for e in rest.split(";"))
    if head == "rect":
        parts = [tuple(int(x) for x in piece.split(":")) for piece in rest.split(",")]
        if len(parts) != len(G.components):
            raise UsageError("rect needs one start:length per component")
        axes = [(s + np.arange(l)) % c.order for (s, l), c in zip(parts, G.components)]
        mesh = np.meshgrid(*axes, indexing="ij")
        return np.unique(G.join([m.ravel() for m in mesh]))
    if head == "elements":
        return G.codes(tuple(_ints(e)) for e in rest.split(";"))
    raise UsageError(f"unknown group set spec {spec!r}")


def field_set(spec: str, f: FieldSpec, rng, avoid=()) -> np.ndarray:
    """Field set specs: all, units, empty, random:N, randomunits:N, list:a,b,c, interval:s:l."""
    head, _, rest = spec.partition(":")
    if spec == "all":
        return np.arange(f.q, dtype=np.int64)
    if spec == "units":
        return np.arange(1, f.q, dtype=np.int64)
    if spec == "empty":
        return np.zeros(0, dtype=np.int64)
    if head == "random":
        return random_subset(_need_rng(rng, spec), f.q, int(rest))
    if head == "randomunits":
        return random_subset(_need_rng(rng, spec), f.q, int(rest), exclude=[0, *avoid])
    if head == "list":
        return np.unique(np.array([f(x).value for x in _ints(rest)], dtype=np.int64))
    if head == "interval":
        s, l = (int(x) for x in rest.split(":"))
        return np.unique((s + np.arange(l)) % f.q)
    raise UsageError(f"unknown field set spec {spec!r}")


def interval_spec(text: str, modulus: int, rng) -> IntervalSpec:
    head, _, rest = text.partition(":")
    if head == "random":
        return IntervalSpec(int(_need_rng(rng, text).integers(0, modulus)), int(rest), modulus)
    return IntervalSpec.parse(text, modulus)


# -- dispatch ------------------------------------------------------------------------------------

@dataclass
class Outcome:
    record: Any
    ok: bool
    value: Optional[float] = None
    bound: Optional[float] = None


def _field(cfg: RunConfig, p: int) -> FieldSpec:
    modulus = Polynomial(_ints(cfg.modulus), p) if cfg.modulus else None
    return field_create(p, cfg.k, modulus)


def _gen(f: FieldSpec, value) -> Optional[int]:
    return None if value in (None, "auto") else int(value)


def generator_arg(text: str):
    if text == "auto":
        return text
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer field code or 'auto'") from None


def _sidon(cfg: RunConfig, f: FieldSpec) -> SidonSet:
    if cfg.construction == "parabolic":
        A = construct_parabolic(f, _ints(cfg.ppoly), _ints(cfg.rpoly), cfg.allow_even)
    elif cfg.construction == "welch":
        A = construct_welch(f, _gen(f, cfg.g))
    else:
        A = construct_golomb(f, _gen(f, cfg.g), _gen(f, cfg.g2), cfg.lam, cfg.sign)
    G = AmbientGroup(A.group.components, cfg.ceiling)
    G.check_capacity(G.order, "ambient group")
    return SidonSet(G, A.codes, A.construction, A.field)


def _field_info(cfg, f, rng):
    return Outcome({"field": field_to_json(f), "q": f.q, "generator": f.generator.value}, True)


def _sidon_build(cfg, f, rng):
    A = _sidon(cfg, f)
    return Outcome({"sidon_set": sidonset_to_json(A), "size": len(A), "delta": A.delta}, True)


def _sidon_verify(cfg, f, rng):
    A = _sidon(cfg, f)
    v = verify_sidon(A)
    return Outcome({"construction": to_jsonable(A.construction), "group": to_jsonable(A.group),
                    "size": len(A), "delta": A.delta, "verdict": to_jsonable(v)}, v.is_sidon)


def _count_theta(cfg, f, rng):
    A = _sidon(cfg, f)
    rep = theta_report(A, group_set(cfg.B, A, rng), group_set(cfg.Bp, A, rng))
    return Outcome(rep, rep.within_bound, abs(rep.theta), rep.theta_bound)


def _count_intersection(cfg, f, rng):
    A = _sidon(cfg, f)
    rep = intersection_report(A, group_set(cfg.B, A, rng), group_set(cfg.Bp, A, rng))
    return Outcome(rep, rep.within, rep.intersection, rep.bound)


def _count_discrepancy(cfg, f, rng):
    A = _sidon(cfg, f)
    rep = discrepancy(A, group_set(cfg.B, A, rng))
    return Outcome(rep, True, float(abs(rep.E)), None)


def _count_translation(cfg, f, rng):
    A = _sidon(cfg, f)
    B = group_set(cfg.B, A, rng)
    C = group_set(cfg.C, A, rng, B)
    rep = translation_lemma_check(A, B, C)
    return Outcome(rep, rep.holds, float(rep.lhs), rep.rhs)


def _exp_incidence(cfg, f, rng):
    q = f.q
    if cfg.points == "all":
        pts = [divmod(c, q) for c in range(q * q)]
    else:
        pts = [divmod(int(c), q) for c in group_set_size(cfg.points, q * q, rng)]
    if cfg.lines == "all":
        lines = [(1 + c // q, c % q) for c in range((q - 1) * q)]
    else:
        lines = [(1 + int(c) // q, int(c) % q) for c in group_set_size(cfg.lines, (q - 1) * q, rng)]
    rep = incidence_experiment(IncidenceInstance(f, tuple(pts), tuple(lines)))
    return Outcome(rep, rep.within_bound, abs(rep.theta), rep.theta_bound)


def group_set_size(spec: str, universe: int, rng) -> np.ndarray:
    head, _, rest = spec.partition(":")
    if head != "random":
        raise UsageError(f"expected 'all' or random:N, got {spec!r}")
    return random_subset(_need_rng(rng, spec), universe, int(rest))


def _exp_diffcover(cfg, f, rng):
    rep = difference_cover_min(f, _gen(f, cfg.g))
    return Outcome({"p": rep.p, "g": rep.g, "M_min": rep.M_min, "ratio": rep.ratio,
                    "threshold": rep.threshold}, rep.below_threshold, rep.ratio, rep.threshold)


def _exp_sumproduct(cfg, f, rng):
    avoid = [f.neg_code(1)] if cfg.variant == "shifted" else []
    a1 = field_set(cfg.A1, f, rng, avoid)
    a2, a3 = (field_set(s, f, rng) for s in (cfg.A2, cfg.A3))
    if cfg.variant == "garaev":
        rec = sum_product_check(a1, a2, a3, f)
    elif cfg.variant == "shifted":
        rec = shifted_product_check(a1, a2, a3, f)
    else:
        rec = polynomial_sum_check(f, _ints(cfg.ppoly), _ints(cfg.rpoly), a1, a2, a3)
    return Outcome(rec, rec.inequality_holds and rec.lemma_holds, rec.sizes[0], rec.bound)


def _exp_equation(cfg, f, rng):
    if cfg.eq in ("square", "product", "hyperbola"):
        rng = _need_rng(rng, cfg.eq)
        nonzero_keys = cfg.eq != "square"
        nonzero_vals = cfg.eq == "hyperbola"
        keys = range(1 if nonzero_keys else 0, f.q)

        def family():
            fibers = {}
            for x in keys:
                n = int(rng.integers(0, cfg.fiber_size + 1))
                fibers[x] = random_subset(rng, f.q, n, exclude=[0] if nonzero_vals else []).tolist()
            return FiberedFamily(f, fibers)

        rep = fibered_solution_count(cfg.eq, family(), family())
    else:
        sets = [field_set(s, f, rng) for s in (cfg.X1, cfg.X2, cfg.X3, cfg.X4)]
        rep = named_equation_count(cfg.eq, *sets, f=f)
    ok = rep.within_bound and (not rep.details.get("hypothesis") or rep.details.get("exists"))
    return Outcome(rep, ok, abs(rep.theta), rep.theta_bound)


def _exp_fermat(cfg, f, rng):
    rec = fermat_subgroup(f, cfg.r, cfg.s)
    ok = rec.within and (rec.nontrivial or not rec.dense)
    return Outcome(rec, ok, float(abs(rec.count - rec.main_term)), rec.error_bound)


def _exp_interval(cfg, f, rng):
    I = interval_spec(cfg.I, f.p - 1, rng)
    J = interval_spec(cfg.J, f.p - 1, rng)
    rec = interval_distribution(f, _gen(f, cfg.g), I, J, cfg.lam, cfg.r)
    return Outcome({"I": to_jsonable(I), "J": to_jsonable(J), **to_jsonable(rec)}, rec.within,
                   abs(float(rec.count - rec.main_term)), rec.bound)


def _exp_image(cfg, f, rng):
    modI = f.p if cfg.kind == "square" else f.p - 1
    I = interval_spec(cfg.I, modI, rng)
    J = interval_spec(cfg.J, f.p, rng)
    rep = interval_image_count(f, cfg.kind, I, J, _gen(f, cfg.g))
    return Outcome({"I": to_jsonable(I), "J": to_jsonable(J), **to_jsonable(rep)}, True, float(abs(rep.E)))


HANDLERS: dict[tuple[str, str], Callable] = {
    ("field", "info"): _field_info,
    ("sidon", "build"): _sidon_build,
    ("sidon", "verify"): _sidon_verify,
    ("count", "theta"): _count_theta,
    ("count", "intersection"): _count_intersection,
    ("count", "discrepancy"): _count_discrepancy,
    ("count", "translation"): _count_translation,
    ("exp", "incidence"): _exp_incidence,
    ("exp", "diffcover"): _exp_diffcover,
    ("exp", "sumproduct"): _exp_sumproduct,
    ("exp", "equation"): _exp_equation,
    ("exp", "fermat"): _exp_fermat,
    ("exp", "interval"): _exp_interval,
    ("exp", "image"): _exp_image,
}


def _ratio(o: Outcome) -> float:
    if o.value is None:
        return 0.0
    if not o.bound:
        return float(o.value)
    return float(o.value) / float(o.bound)


def _resolve(cfg: RunConfig, f: FieldSpec) -> dict:
    """The generators this run actually uses, with 'auto' replaced."""
    o = cfg.options
    uses_g = o.get("construction") in ("welch", "golomb") or cfg.action in ("diffcover", "interval") \
        or (cfg.action == "image" and o.get("kind") == "exp")
    out = {}
    if uses_g:
        out["g"] = f.generator.value if o.get("g") == "auto" else o["g"]
    if o.get("construction") == "golomb":
        out["g2"] = f.generator.value if o.get("g2") == "auto" else o["g2"]
    return out


def run_item(cfg: RunConfig, p: int) -> tuple[dict, dict, bool]:
    """Run every sample for one prime; returns (payload, csv row, ok)."""
    f = _field(cfg, p)
    resolved = _resolve(cfg, f)
    cfg = RunConfig(cfg.command, cfg.action, {**cfg.options, **resolved})
    handler = HANDLERS[(cfg.command, cfg.action)]
    outcomes = []
    for i in range(cfg.samples):
        rng = rng_for(cfg.seed, p, cfg.k, i) if cfg.seed is not None else None
        outcomes.append(handler(cfg, f, rng))
    bad = [o for o in outcomes if not o.ok]
    worst = max(outcomes, key=_ratio)
    payload: dict[str, Any] = {"p": p, "k": cfg.k, "q": f.q, "resolved": resolved}
    if cfg.samples == 1:
        payload["record"] = to_jsonable(outcomes[0].record)
    else:
        payload.update({
            "samples": cfg.samples,
            "violations": len(bad),
            "worst": to_jsonable(worst.record),
            "first_violation": to_jsonable(bad[0].record) if bad else None,
        })
    row = {
        "command": f"{cfg.command} {cfg.action}", "p": p, "k": cfg.k, "q": f.q,
        "instances": cfg.samples, "violations": len(bad),
        "worst_value": worst.value if worst.value is None else float(worst.value),
        "worst_bound": worst.bound if worst.bound is None else float(worst.bound),
        "ok": not bad,
    }
    return payload, row, not bad


def envelope(cfg: RunConfig, payload: dict) -> dict:
    echo = cfg.echo()
    if not cfg.sweep_p:
        # a single run echoes the generators it actually used
        echo.update(payload["resolved"])
    return {
        "tool": "sidonkit",
        "version": __version__,
        "config": echo,
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "result": payload,
    }


def cmd_run(cfg: RunConfig, out=None) -> int:
    out = out if out is not None else sys.stdout
    if cfg.sweep_p:
        lo, hi = (int(x) for x in cfg.sweep_p.split(":"))
        primes = primes_between(lo, hi)
    else:
        primes = [cfg.p]
    items = []
    try:
        for p in primes:
            items.append((p, *run_item(cfg, p)))
    except CapacityError as exc:
        print(f"sidonkit: capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (SidonKitError, UsageError, ValueError) as exc:
        print(f"sidonkit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    items.sort(key=lambda t: t[0])

    buf = io.StringIO()
    if cfg.format == "csv":
        w = csv.DictWriter(buf, fieldnames=CSV_HEADER, lineterminator="\n")
        w.writeheader()
        for _, _, row, _ in items:
            w.writerow(row)
    else:
        for _, payload, _, _ in items:
            buf.write(json.dumps(envelope(cfg, payload), sort_keys=True) + "\n")
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(buf.getvalue())
    else:
        out.write(buf.getvalue())
    return EXIT_OK if all(ok for *_, ok in items) else EXIT_VIOLATION


def main(argv: Optional[list[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        cfg = cmd_parse(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    return cmd_run(cfg)


if __name__ == "__main__":
    sys.exit(main())
