"""Shared brute-force oracles.

These deliberately avoid the library's vectorised code paths: they walk
GroupElement / FieldElement objects one at a time.
"""

from itertools import product

import numpy as np
import pytest

from sidonkit.ff_core import field_create


def brute_is_sidon(A):
    """Every nonzero difference of ordered pairs of distinct elements occurs once."""
    seen = set()
    els = A.elements
    for a, b in product(els, els):
        if a == b:
            continue
        d = (a - b).code
        if d in seen:
            return False
        seen.add(d)
    return True


def brute_pair_count(A, B, Bp):
    G = A.group
    inA = set(int(x) for x in A.codes)
    els_b = G.elements(B)
    els_bp = G.elements(Bp)
    return sum((x + y).code in inA for x in els_b for y in els_bp)


def brute_rep(G, A, B):
    out = {}
    for a in G.elements(A):
        for b in G.elements(B):
            c = (a - b).code
            out[c] = out.get(c, 0) + 1
    return out


FIELDS = [(3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (5, 2), (2, 4), (3, 3)]


@pytest.fixture(params=FIELDS, ids=lambda pk: f"F{pk[0]**pk[1]}")
def field(request):
    p, k = request.param
    return field_create(p, k)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
