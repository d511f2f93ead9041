"""Gallai-Edmonds decomposition against structure known in closed form."""

import pytest

from tripm import (
    GallaiEdmonds,
    gallai_edmonds,
    make_graph,
    max_matching_size,
    verify_decomposition,
)
from tripm.generators import k4, no_pm_cubic16, petersen

from conftest import random_graph_corpus


def test_graph_with_perfect_matching_has_empty_d_and_a():
    for g in (k4(), petersen()):
        ge = gallai_edmonds(g)
        assert ge.d == frozenset() and ge.a == frozenset()
        assert ge.c == frozenset(range(g.n))
        assert ge.omega == 0 and ge.t == ()


def test_odd_cycle_is_all_d():
    c5 = make_graph(5, [(i, (i + 1) % 5) for i in range(5)])
    ge = gallai_edmonds(c5)
    assert ge.d == frozenset(range(5))
    assert ge.a == frozenset() and ge.c == frozenset()
    assert ge.components == (tuple(range(5)),)
    assert ge.t == (0,)
    assert verify_decomposition(c5, ge)["ok"]


def test_star_decomposition():
    g = make_graph(4, [(0, 1), (0, 2), (0, 3)])
    ge = gallai_edmonds(g)
    assert ge.d == frozenset({1, 2, 3})
    assert ge.a == frozenset({0})
    assert ge.c == frozenset()
    assert ge.components == ((1,), (2,), (3,))
    assert ge.t == (1, 1, 1)
    assert ge.omega == 3 and ge.omega1 == 3
    assert verify_decomposition(g, ge)["ok"]


def test_short_path_splits_around_midpoint():
    g = make_graph(3, [(0, 1), (1, 2)])
    ge = gallai_edmonds(g)
    assert ge.d == frozenset({0, 2})
    assert ge.a == frozenset({1})
    assert ge.omega == 2 and ge.omega1 == 2


def test_three_gadget_cubic_graph_decomposition():
    """A hub joined to three odd gadgets: the canonical deficient cubic case."""
    g = no_pm_cubic16()
    ge = gallai_edmonds(g)
    assert ge.a == frozenset({0})
    assert ge.c == frozenset()
    assert ge.d == frozenset(range(1, 16))
    assert ge.components == (tuple(range(1, 6)), tuple(range(6, 11)), tuple(range(11, 16)))
    assert ge.t == (1, 1, 1)
    assert ge.omega == 3 and ge.omega1 == 3
    report = verify_decomposition(g, ge)
    assert report == {
        "components_factor_critical": True,
        "c_has_perfect_matching": True,
        "a_matchable_into_components": True,
        "deficiency_consistent": True,
        "ok": True,
    }
    # deficiency omega - |A| = 2 matches the matching number directly
    assert g.n - 2 * max_matching_size(g) == ge.omega - len(ge.a)


def test_decomposition_verifies_on_random_corpus():
    for g in random_graph_corpus(count=120, seed=2024, max_n=9):
        ge = gallai_edmonds(g)
        assert verify_decomposition(g, ge)["ok"]
        assert g.n - 2 * max_matching_size(g) == ge.omega - len(ge.a)
        for comp, t in zip(ge.components, ge.t):
            assert len(comp) % 2 == 1
            assert t >= 0


def test_verifier_rejects_a_wrong_decomposition():
    g = k4()
    bogus = GallaiEdmonds(
        d=frozenset(range(4)),
        a=frozenset(),
        c=frozenset(),
        components=(tuple(range(4)),),
        t=(0,),
    )
    report = verify_decomposition(g, bogus)
    assert not report["components_factor_critical"]
    assert not report["ok"]
