"""Bicontraction to cubic skeletons, 3-edge-coloring, and lifting."""

import pytest

from tripm import (
    Budget,
    BudgetExhausted,
    Graph,
    SkeletonCertificate,
    SkeletonExtractionError,
    StructuralCertificate,
    color_cubic_3,
    extract_skeleton,
    is_perfect_matching,
    lift_triple,
    make_graph,
    split_spanning_components,
    triple_from_structural,
    verify_structural,
    verify_triple,
)
from tripm.generators import bisubdivide, k4, k33, octahedron, petersen, wheel


# wheel on 5 rim vertices: rim + three consecutive spokes is a spanning
# bisubdivision of K4 (the rim arc 2-3-4-0 is the one length-3 chain)
W5_SPANNING = frozenset(range(8))


def test_extract_skeleton_of_wheel_spanning_set():
    g = wheel(5)
    sc = extract_skeleton(g, W5_SPANNING)
    assert sc.branch_vertices == (0, 1, 2, 5)
    assert sc.skeleton == k4()
    assert sc.chain_map == ((0,), (1, 7, 5), (2,), (3,), (4,), (6,))
    assert sorted(len(p) for p in sc.chain_map) == [1, 1, 1, 1, 1, 3]
    assert sc.coloring is None


def test_extract_skeleton_inverts_bisubdivision():
    g = petersen()
    h = bisubdivide(g, 0)
    sc = extract_skeleton(h, range(h.m))
    assert sc.branch_vertices == tuple(range(10))
    assert sc.skeleton == g


def test_extract_skeleton_not_spanning():
    g = wheel(5)
    rim = frozenset({0, 1, 3, 5, 7})  # hub untouched
    with pytest.raises(SkeletonExtractionError) as info:
        extract_skeleton(g, rim)
    assert info.value.reason == "not spanning"


def test_extract_skeleton_degree_out_of_range():
    g = wheel(5)
    with pytest.raises(SkeletonExtractionError) as info:
        extract_skeleton(g, range(g.m))  # hub keeps degree 5
    assert info.value.reason == "degree out of range"


def test_extract_skeleton_even_chain():
    # theta graph: a direct 0-1 edge plus a length-2 detour through 2,
    # with 3 appended to keep degrees in range
    g = make_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
    with pytest.raises(SkeletonExtractionError) as info:
        extract_skeleton(g, range(g.m))
    assert info.value.reason == "even chain"


def test_extract_skeleton_loop_chain():
    # triangle hanging off each of two bridge endpoints: the triangle at 0
    # walks 0-1-2-0 and closes on its own branch vertex
    g = make_graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (3, 5), (4, 5)])
    with pytest.raises(SkeletonExtractionError) as info:
        extract_skeleton(g, range(g.m))
    assert info.value.reason == "loop chain"


def mixed_host():
    """C4 next to a theta whose three 4-5 chains have lengths 1, 3, 3."""
    return make_graph(10, [(0, 1), (1, 2), (2, 3), (0, 3),
                           (4, 5),
                           (4, 6), (6, 7), (5, 7),
                           (4, 8), (8, 9), (5, 9)])


def test_extract_skeleton_rejects_isolated_cycle_component():
    g = mixed_host()
    with pytest.raises(SkeletonExtractionError) as info:
        extract_skeleton(g, range(g.m))
    assert info.value.reason == "isolated cycle component"


def test_split_spanning_components():
    g = mixed_host()
    cycles, branch_edges = split_spanning_components(g, range(g.m))
    assert cycles == [(0, 2, 3, 1)]
    assert branch_edges == set(range(4, 11))


def test_color_cubic_3_k4_is_deterministic():
    # edges in id order, colors ascending: the first proper coloring
    assert color_cubic_3(k4()) == (1, 2, 3, 3, 2, 1)


def test_color_cubic_3_parallel_edges():
    theta = Graph(2, ((0, 1), (0, 1), (0, 1)))
    assert color_cubic_3(theta) == (1, 2, 3)


def test_color_cubic_3_proper_on_k33():
    h = k33()
    colors = color_cubic_3(h)
    assert colors is not None
    for v in range(h.n):
        assert sorted(colors[e] for e in h.incident[v]) == [1, 2, 3]


def test_color_cubic_3_petersen_has_no_coloring():
    assert color_cubic_3(petersen()) is None


def test_color_cubic_3_validation_and_budget():
    with pytest.raises(ValueError, match="cubic"):
        color_cubic_3(octahedron())
    with pytest.raises(BudgetExhausted):
        color_cubic_3(petersen(), budget=Budget(limit=10))


def test_lift_triple_on_wheel_spanning_set():
    g = wheel(5)
    sc = extract_skeleton(g, W5_SPANNING).with_coloring(color_cubic_3(k4()))
    cert = lift_triple(g, sc)
    assert cert.m1 == frozenset({0, 6, 7})
    assert cert.m2 == frozenset({1, 4, 5})
    assert cert.m3 == frozenset({2, 3, 7})
    # the length-3 chain (1, 7, 5) has skeleton color 2: its ends lie in
    # m2 alone, its middle edge in both other matchings
    assert cert.m1 & cert.m3 == frozenset({7})
    assert cert.union() == W5_SPANNING
    assert verify_triple(g, cert)["ok"]
    for m in cert.matchings:
        assert is_perfect_matching(g, m)


def test_lift_triple_needs_spanning_skeleton_part():
    g = mixed_host()
    _, branch_edges = split_spanning_components(g, range(g.m))
    sk = theta_skeleton_part()
    assert sk.spanning == frozenset(branch_edges)
    with pytest.raises(ValueError, match="structural certificate"):
        lift_triple(g, sk)


def theta_skeleton_part() -> SkeletonCertificate:
    return SkeletonCertificate(
        spanning=frozenset(range(4, 11)),
        branch_vertices=(4, 5),
        skeleton=Graph(2, ((0, 1), (0, 1), (0, 1))),
        chain_map=((4,), (5, 9, 7), (6, 10, 8)),
        chain_vertices=((4, 5), (4, 6, 7, 5), (4, 8, 9, 5)),
        coloring=(1, 2, 3),
    )


def mixed_certificate() -> StructuralCertificate:
    return StructuralCertificate(
        spanning=frozenset(range(11)),
        cycle_components=((0, 2, 3, 1),),
        skeleton_part=theta_skeleton_part(),
    )


def test_mixed_certificate_lifts_and_verifies():
    g = mixed_host()
    cert = mixed_certificate()
    assert cert.clause == "mixed"
    triple = triple_from_structural(g, cert)
    assert triple.m1 == frozenset({0, 3, 4, 9, 10})
    assert triple.m2 == frozenset({1, 2, 5, 7, 10})
    assert triple.m3 == frozenset({1, 2, 6, 8, 9})
    assert triple.m1 & triple.m2 & triple.m3 == frozenset()
    assert triple.union() == cert.spanning
    report = verify_structural(g, cert)
    assert report == {"ok": True, "violations": []}


def test_verify_structural_flags_bad_coloring():
    g = mixed_host()
    cert = mixed_certificate()
    bad = StructuralCertificate(
        cert.spanning, cert.cycle_components,
        cert.skeleton_part.with_coloring((1, 1, 3)))
    report = verify_structural(g, bad)
    assert not report["ok"]
    assert any("colors" in v for v in report["violations"])


def test_verify_structural_flags_odd_cycle():
    g = make_graph(9, [(0, 1), (1, 2), (0, 2),
                       (3, 4),
                       (3, 5), (5, 6), (4, 6),
                       (3, 7), (7, 8), (4, 8)])
    sk = SkeletonCertificate(
        spanning=frozenset(range(3, 10)),
        branch_vertices=(3, 4),
        skeleton=Graph(2, ((0, 1), (0, 1), (0, 1))),
        chain_map=((3,), (4, 8, 6), (5, 9, 7)),
        chain_vertices=((3, 4), (3, 5, 6, 4), (3, 7, 8, 4)),
        coloring=(1, 2, 3),
    )
    cert = StructuralCertificate(frozenset(range(10)), ((0, 2, 1),), sk)
    report = verify_structural(g, cert)
    assert not report["ok"]
    assert any("odd cycle" in v for v in report["violations"])


def test_verify_structural_flags_unaccounted_edges():
    g = mixed_host()
    cert = mixed_certificate()
    missing = StructuralCertificate(cert.spanning, (), cert.skeleton_part)
    report = verify_structural(g, missing)
    assert not report["ok"]
    assert any("partition" in v for v in report["violations"])


def test_verify_structural_flags_non_spanning_degrees():
    g = mixed_host()
    cert = mixed_certificate()
    shrunk = StructuralCertificate(
        cert.spanning - {0}, cert.cycle_components, cert.skeleton_part)
    report = verify_structural(g, shrunk)
    assert not report["ok"]


def test_verify_structural_accepts_pure_even_2factor():
    g = make_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    cert = StructuralCertificate(frozenset(range(4)), ((0, 2, 3, 1),), None)
    assert cert.clause == "even-2-factor"
    assert verify_structural(g, cert)["ok"]


def test_verify_structural_accepts_pure_skeleton():
    g = wheel(5)
    sc = extract_skeleton(g, W5_SPANNING).with_coloring(color_cubic_3(k4()))
    cert = StructuralCertificate(W5_SPANNING, (), sc)
    assert cert.clause == "skeleton"
    assert verify_structural(g, cert)["ok"]
