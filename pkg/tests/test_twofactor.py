"""Even 2-factor search, cycle decomposition, alternation, Hamilton probe."""

import pytest

from tripm import (
    Budget,
    BudgetExhausted,
    factor_cycles,
    find_even_2factor,
    hamilton_cycle,
    is_perfect_matching,
    make_graph,
    structural_from_factor,
    triple_from_even_2factor,
    verify_triple,
)
from tripm.generators import k4, petersen

from conftest import sampled_matching_covered
from oracles import brute_has_even_2factor, brute_is_hamiltonian, cycle_lengths


def c6():
    return make_graph(6, [(i, (i + 1) % 6) for i in range(6)])


def two_triangles():
    return make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


def test_factor_cycles_single_cycle_traversal_order():
    g = c6()
    # start at vertex 0 along edge (0,1), close through (0,5)
    assert factor_cycles(g, range(6)) == [[0, 2, 3, 4, 5, 1]]


def test_factor_cycles_orders_components_by_smallest_vertex():
    g = two_triangles()
    cycles = factor_cycles(g, range(6))
    assert [len(c) for c in cycles] == [3, 3]
    assert g.edges[cycles[0][0]] == (0, 1)
    assert g.edges[cycles[1][0]] == (3, 4)


def test_factor_cycles_rejects_wrong_degrees():
    g = k4()
    assert factor_cycles(g, [0, 1]) is None  # vertex 0 has degree 2 but 1,2 degree 1
    assert factor_cycles(g, [0]) is None


def test_find_even_2factor_on_cycle_and_k4():
    g = c6()
    assert find_even_2factor(g) == frozenset(range(6))
    f = find_even_2factor(k4())
    assert f is not None
    assert find_even_2factor(k4()) == f  # deterministic
    cycles = factor_cycles(k4(), f)
    assert cycles is not None
    assert sorted(len(c) % 2 for c in cycles) == [0] * len(cycles)


def test_find_even_2factor_negative_cases():
    # both 2-factors of the Petersen graph are pairs of 5-cycles
    assert find_even_2factor(petersen()) is None
    assert find_even_2factor(two_triangles()) is None
    with pytest.raises(ValueError):
        find_even_2factor(make_graph(3, [(0, 1), (1, 2), (0, 2)]))


def test_find_even_2factor_agrees_with_bruteforce():
    for g in sampled_matching_covered(8, count=60, seed=5150, max_edges=16):
        got = find_even_2factor(g)
        if got is None:
            assert not brute_has_even_2factor(g)
        else:
            assert brute_has_even_2factor(g)
            cycles = factor_cycles(g, got)
            assert cycles is not None
            assert all(len(c) % 2 == 0 for c in cycles)
            assert sum(len(c) for c in cycles) == g.n


def test_find_even_2factor_budget():
    with pytest.raises(BudgetExhausted):
        find_even_2factor(k4(), budget=Budget(limit=2))


def test_triple_from_even_2factor_alternates():
    g = c6()
    cert = triple_from_even_2factor(g, frozenset(range(6)))
    assert cert.m1 == frozenset({0, 3, 5})
    assert cert.m2 == frozenset({1, 2, 4})
    assert cert.m3 == cert.m2
    assert verify_triple(g, cert)["ok"]
    assert cert.m1 & cert.m2 & cert.m3 == frozenset()
    for m in cert.matchings:
        assert is_perfect_matching(g, m)


def test_triple_from_even_2factor_validation():
    with pytest.raises(ValueError, match="not 2-regular"):
        triple_from_even_2factor(k4(), [0, 1])
    g8 = make_graph(8, [(0, 1), (1, 2), (2, 3), (0, 3),
                        (4, 5), (5, 6), (6, 7), (4, 7)])
    inner = [e for e, (u, v) in enumerate(g8.edges) if v <= 3]
    with pytest.raises(ValueError, match="span"):
        triple_from_even_2factor(g8, inner)
    with pytest.raises(ValueError, match="odd cycle"):
        triple_from_even_2factor(two_triangles(), range(6))


def test_structural_from_factor_shape():
    g = c6()
    cert = structural_from_factor(g, frozenset(range(6)))
    assert cert.spanning == frozenset(range(6))
    assert cert.cycle_components == ((0, 2, 3, 4, 5, 1),)
    assert cert.skeleton_part is None
    assert cert.clause == "even-2-factor"


def test_hamilton_cycle_on_cycle_is_the_cycle():
    assert hamilton_cycle(c6()) == (0, 2, 3, 4, 5, 1)


def test_hamilton_cycle_on_k4():
    cyc = hamilton_cycle(k4())
    assert cyc is not None and len(cyc) == 4
    cycles = factor_cycles(k4(), cyc)
    assert cycles is not None and len(cycles) == 1


def test_hamilton_cycle_negatives():
    assert hamilton_cycle(petersen()) is None
    assert hamilton_cycle(two_triangles()) is None
    assert hamilton_cycle(make_graph(1, [])) is None
    assert hamilton_cycle(make_graph(2, [(0, 1)])) is None


def test_hamilton_cycle_uses_parallel_edges():
    g = make_graph(2, [(0, 1), (0, 1)])
    assert hamilton_cycle(g) == (0, 1)


def test_hamilton_cycle_agrees_with_bruteforce():
    for g in sampled_matching_covered(8, count=60, seed=808, max_edges=14):
        assert (hamilton_cycle(g) is not None) == brute_is_hamiltonian(g)


def test_hamilton_cycle_budget():
    with pytest.raises(BudgetExhausted):
        hamilton_cycle(petersen(), budget=Budget(limit=5))


def test_cycle_lengths_oracle_helper():
    assert sorted(cycle_lengths(two_triangles(), range(6))) == [3, 3]
