"""Shared fixtures and brute-force oracles.

The oracles deliberately ignore the library's enumeration strategies: ideals
and submodules come from filtering every subset, hom sets from filtering
every total map.  Differential tests compare the fast paths against these.
"""

from __future__ import annotations

import itertools

import pytest

from tgw import fixtures
from tgw.core import structure_from_dict
from tgw.ideals import is_ideal_subset
from tgw.modules import hom_violation, is_submodule


@pytest.fixture(scope="session")
def b2():
    return fixtures.bundled_structure("B2")


@pytest.fixture(scope="session")
def z3():
    return fixtures.bundled_structure("Z3")


@pytest.fixture(scope="session")
def b2xb2():
    return fixtures.bundled_structure("B2xB2")


@pytest.fixture(scope="session")
def b2_reg():
    return fixtures.bundled_module("B2-regular")


@pytest.fixture(scope="session")
def b2_t2():
    return fixtures.bundled_module("B2-T2")


@pytest.fixture(scope="session")
def b2_zero():
    return fixtures.bundled_module("B2-zero")


@pytest.fixture(scope="session")
def z3_reg():
    return fixtures.bundled_module("Z3-regular")


@pytest.fixture(scope="session")
def z3_zero():
    return fixtures.bundled_module("Z3-zero")


@pytest.fixture(scope="session")
def b2xb2_reg():
    return fixtures.bundled_module("B2xB2-regular")


@pytest.fixture(scope="session")
def b2xb2_zero():
    return fixtures.bundled_module("B2xB2-zero")


@pytest.fixture(scope="session")
def one_element():
    return structure_from_dict({
        "name": "One", "elements": ["0"], "zero": "0", "unit": "0",
        "gamma": ["g0"], "add": [["0"]], "tri": [[[[["0"]]]]],
    })


@pytest.fixture(scope="session")
def f2():
    """Two-element field: addition mod 2, tri = plain product."""
    return structure_from_dict({
        "name": "F2", "elements": ["0", "1"], "zero": "0", "unit": "1",
        "gamma": ["g0"],
        "add": [["0", "1"], ["1", "0"]],
        "tri": [[[[["0", "0"]], [["0", "0"]]]], [[[["0", "0"]], [["0", "1"]]]]],
    })


@pytest.fixture(scope="session")
def z4():
    """Mod-4 structure with tri(a,x,b,y,c) = a*b*c mod 4.

    Lawful, unit-bearing, and *not* semiprimitive: 2 annihilates the only
    simple cyclic module, so the radical is {0,2} and self-extensions exist.
    """
    n = 4
    labels = [str(i) for i in range(n)]
    add = [[labels[(i + j) % n] for j in range(n)] for i in range(n)]
    tri = [[[[[labels[(a * b * c) % n] for c in range(n)]] for b in range(n)]]
           for a in range(n)]
    return structure_from_dict({
        "name": "Z4", "elements": labels, "zero": "0", "unit": "1",
        "gamma": ["g0"], "add": add, "tri": tri,
    })


def brute_force_ideals(S):
    out = []
    for r in range(S.n + 1):
        for comb in itertools.combinations(range(S.n), r):
            members = frozenset(comb)
            if is_ideal_subset(S, members):
                out.append(tuple(sorted(members)))
    return sorted(out, key=lambda t: (len(t), t))


def brute_force_submodules(M):
    out = []
    for r in range(M.size + 1):
        for comb in itertools.combinations(range(M.size), r):
            members = frozenset(comb)
            if M.zero in members and is_submodule(M, members):
                out.append(tuple(sorted(members)))
    return sorted(out, key=lambda t: (len(t), t))


def brute_force_homs(M, N):
    out = []
    for mapping in itertools.product(range(N.size), repeat=M.size):
        if hom_violation(M, N, mapping) is None:
            out.append(mapping)
    return sorted(out)


def all_bundled_modules():
    return [fixtures.bundled_module(name) for name in fixtures.MODULE_NAMES]
