"""Admissibility decisions: direct triple search, structural search over
spanning degree-{2,3} subgraphs, the constructive 4-regular fast path, and
the check() orchestrator.

The direct search is ground truth.  A pair scan suffices for it: a triple
(M1, M2, M3) with empty common intersection exists iff some pair (Mi, Mj),
i < j, admits a perfect matching avoiding Mi ∩ Mj (take M3 = that matching;
conversely any valid triple's third matching avoids the other two's
intersection).  The structural search realizes the equivalent
characterization: a spanning subgraph whose components are even cycles or
bisubdivided pieces of a 3-edge-colorable cubic graph.
"""

from __future__ import annotations

from dataclasses import replace

from .budget import Budget, BudgetExhausted, as_budget
from .certificates import (
    ADMISSIBLE,
    INELIGIBLE,
    NOT_ADMISSIBLE,
    UNKNOWN,
    StructuralCertificate,
    TripleCertificate,
    Verdict,
    verify_triple,
)
from .gallai import gallai_edmonds
from .graph import Graph, is_k_connected
from .matching import (
    enumerate_perfect_matchings,
    is_matching_covered,
    max_matching,
    perfect_matching_with_forced,
)
from .skeleton import (
    SkeletonExtractionError,
    _skeleton_from_chains,
    _spanning_degrees,
    _walk_chains,
    color_cubic_3,
    split_spanning_components,
    triple_from_structural,
)
from .twofactor import (
    find_even_2factor,
    hamilton_cycle,
    structural_from_factor,
    triple_from_even_2factor,
)


def _verified(g: Graph, m1, m2, m3) -> TripleCertificate:
    cert = TripleCertificate(frozenset(m1), frozenset(m2), frozenset(m3))
    report = verify_triple(g, cert)
    if not report["ok"]:
        raise AssertionError(
            f"internal: constructed triple fails verification: {report['violations']}")
    return cert


def _require_matching_covered(g: Graph) -> None:
    covered, report = is_matching_covered(g)
    if not covered:
        raise ValueError(f"graph is not matching covered: {report['reason']}")


# ---------------------------------------------------------------------------
# direct search


def find_triple_direct(g: Graph, budget=None, *, _gate: bool = True) -> Verdict:
    """Decide admissibility from the definition.

    Enumerates perfect matchings once, then scans pairs (i < j) in
    enumeration order; a pair with empty intersection yields (Mi, Mj, Mj)
    immediately, otherwise a perfect matching avoiding the intersection is
    sought.  NotAdmissible only after the full pair space is exhausted.
    """
    if _gate:
        _require_matching_covered(g)
    b = as_budget(budget)
    pms: list[frozenset[int]] = []
    try:
        for pm in enumerate_perfect_matchings(g, b):
            pms.append(pm)
    except BudgetExhausted:
        return Verdict(UNKNOWN, budget_report={
            "stage": "direct", "phase": "enumeration",
            "limit": b.limit, "used": b.used,
            "matchings_seen": len(pms)}, nodes=b.used)
    npm = len(pms)
    if npm == 0:
        return Verdict(NOT_ADMISSIBLE, evidence={
            "stage": "direct", "perfect_matchings": 0, "pairs_examined": 0},
            nodes=b.used)
    if npm == 1 and not pms[0]:
        # the empty graph: three empty matchings, vacuously admissible
        return Verdict(ADMISSIBLE, triple=_verified(g, (), (), ()), nodes=b.used)
    pairs = 0
    try:
        for i in range(npm):
            for j in range(i + 1, npm):
                b.charge()
                pairs += 1
                inter = pms[i] & pms[j]
                if not inter:
                    return Verdict(ADMISSIBLE,
                                   triple=_verified(g, pms[i], pms[j], pms[j]),
                                   nodes=b.used)
                m3 = perfect_matching_with_forced(g, forbidden=inter)
                if m3 is not None:
                    return Verdict(ADMISSIBLE,
                                   triple=_verified(g, pms[i], pms[j], m3),
                                   nodes=b.used)
    except BudgetExhausted:
        return Verdict(UNKNOWN, budget_report={
            "stage": "direct", "phase": "pair-scan",
            "limit": b.limit, "used": b.used,
            "perfect_matchings": npm, "pairs_examined": pairs}, nodes=b.used)
    return Verdict(NOT_ADMISSIBLE, evidence={
        "stage": "direct", "perfect_matchings": npm, "pairs_examined": pairs},
        nodes=b.used)


# ---------------------------------------------------------------------------
# structural search


def _structural_candidate(g: Graph, edge_ids, budget,
                          skip_pure_factor: bool) -> StructuralCertificate | None:
    """Validate one spanning degree-{2,3} edge set as a witness."""
    cycles, branch_edges = split_spanning_components(g, edge_ids)
    if any(len(c) % 2 for c in cycles):
        return None
    if not branch_edges:
        if skip_pure_factor:
            return None
        return StructuralCertificate(frozenset(edge_ids), tuple(cycles), None)
    sdeg = _spanning_degrees(g, edge_ids)
    try:
        chains, leftover = _walk_chains(g, branch_edges, sdeg)
    except SkeletonExtractionError:
        return None
    if leftover:
        raise AssertionError("internal: cycle edges leaked into the branch part")
    sk = _skeleton_from_chains(g, branch_edges, chains)
    coloring = color_cubic_3(sk.skeleton, budget)
    if coloring is None:
        return None
    return StructuralCertificate(frozenset(edge_ids), tuple(cycles),
                                 sk.with_coloring(coloring))


def _search_structural(g: Graph, budget,
                       skip_pure_factor: bool) -> StructuralCertificate | None:
    """Backtrack over edge inclusion; every leaf is spanning with degrees
    in {2, 3} thanks to the running bounds, then validated as a witness."""
    n, m = g.n, g.m
    deg = [0] * n
    rem = list(g.degrees())
    chosen: list[int] = []

    def walk(i: int) -> StructuralCertificate | None:
        budget.charge()
        if i == m:
            return _structural_candidate(g, tuple(chosen), budget,
                                         skip_pure_factor)
        u, v = g.edges[i]
        rem[u] -= 1
        rem[v] -= 1
        result = None
        # include only if both endpoints stay under 3 and can still reach 2
        if (deg[u] < 3 and deg[v] < 3
                and deg[u] + rem[u] >= 1 and deg[v] + rem[v] >= 1):
            deg[u] += 1
            deg[v] += 1
            chosen.append(i)
            result = walk(i + 1)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
        if result is None and deg[u] + rem[u] >= 2 and deg[v] + rem[v] >= 2:
            result = walk(i + 1)
        rem[u] += 1
        rem[v] += 1
        return result

    if n == 0:
        return StructuralCertificate(frozenset(), (), None)
    return walk(0)


def structural_check(g: Graph, budget=None, *, _gate: bool = True) -> Verdict:
    """Decide admissibility through the structural characterization.

    Phase 1 searches even 2-factors, phase 2 spanning subgraphs with a
    branch part (bicontracted to a cubic skeleton and 3-edge-colored).
    NotAdmissible only after both phases exhaust; by the characterization
    this agrees with the direct search.
    """
    if _gate:
        _require_matching_covered(g)
    b = as_budget(budget)
    try:
        factor = find_even_2factor(g, b)
    except BudgetExhausted:
        return Verdict(UNKNOWN, budget_report={
            "stage": "structural", "phase": "even-2-factor",
            "limit": b.limit, "used": b.used}, nodes=b.used)
    if factor is not None:
        return Verdict(ADMISSIBLE,
                       triple=triple_from_even_2factor(g, factor),
                       structural=structural_from_factor(g, factor),
                       nodes=b.used)
    try:
        # phase 1 proved there is no even 2-factor, so pure-cycle leaves
        # cannot succeed and are skipped
        structural = _search_structural(g, b, skip_pure_factor=True)
    except BudgetExhausted:
        return Verdict(UNKNOWN, budget_report={
            "stage": "structural", "phase": "skeleton-search",
            "limit": b.limit, "used": b.used}, nodes=b.used)
    if structural is not None:
        return Verdict(ADMISSIBLE,
                       triple=triple_from_structural(g, structural),
                       structural=structural,
                       nodes=b.used)
    return Verdict(NOT_ADMISSIBLE, evidence={
        "stage": "structural",
        "exhausted": ["even-2-factor", "spanning degree-{2,3} subgraphs"]},
        nodes=b.used)


# ---------------------------------------------------------------------------
# 4-regular fast path


def _fastpath_applicable(g: Graph) -> bool:
    return (g.n % 2 == 0 and g.is_regular(4) and g.is_simple()
            and is_k_connected(g, 3))


def _step_iii(g: Graph, m1, sub: Graph, emap, ge, b) -> Verdict | None:
    """Constructive case: G - M1 decomposes into one cut vertex u and three
    factor-critical components.  Two M1 edges e, f across distinct
    components give M2 (forces e, pairs u into the component e misses) and
    M3 (same with f); then M1 ∩ M2 = {e}, M1 ∩ M3 = {f}, triple empty."""
    (u,) = ge.a
    comp_of: dict[int, int] = {}
    for i, comp in enumerate(ge.components):
        for v in comp:
            comp_of[v] = i
    u_edge: dict[int, int] = {}  # component index -> host edge id of a u-edge
    for w, e_new in sub.adjacency[u]:
        i = comp_of.get(w)
        if i is None:
            return None
        u_edge.setdefault(i, emap[e_new])
    if set(u_edge) != {0, 1, 2}:
        return None
    cross = []
    for e in sorted(m1):
        x, y = g.edges[e]
        if x in comp_of and y in comp_of and comp_of[x] != comp_of[y]:
            cross.append(e)
    if len(cross) < 2:
        return None
    e, f = cross[0], cross[1]

    def partner(edge: int) -> int:
        x, y = g.edges[edge]
        (k,) = {0, 1, 2} - {comp_of[x], comp_of[y]}
        return u_edge[k]

    m2 = perfect_matching_with_forced(g, forced=(e, partner(e)),
                                      forbidden=m1 - {e})
    m3 = perfect_matching_with_forced(g, forced=(f, partner(f)),
                                      forbidden=m1 - {f})
    if m2 is None or m3 is None:
        return None
    triple = _verified(g, m1, m2, m3)
    return Verdict(ADMISSIBLE, triple=triple,
                   evidence={"stage": "four-regular", "step": "iii",
                             "e": e, "f": f}, nodes=b.used)


def _fastpath_from_m1(g: Graph, m1, budget) -> Verdict:
    b = as_budget(budget)
    m1 = frozenset(m1)
    m2 = perfect_matching_with_forced(g, forbidden=m1)
    if m2 is not None:
        return Verdict(ADMISSIBLE, triple=_verified(g, m1, m2, m2),
                       evidence={"stage": "four-regular", "step": "ii"},
                       nodes=b.used)
    sub, emap = g.spanning_subgraph(set(range(g.m)) - m1)
    ge = gallai_edmonds(sub)
    if len(ge.a) == 1 and not ge.c and ge.omega == 3:
        verdict = _step_iii(g, m1, sub, emap, ge, b)
        if verdict is not None:
            return verdict
        if g.n <= 18:
            raise AssertionError(
                "internal: step (iii) construction failed on n <= 18, "
                "contradicting the admissibility bound")
    return find_triple_direct(g, b, _gate=False)


def four_regular_fastpath(g: Graph, budget=None) -> Verdict:
    """Admissibility of a 3-connected 4-regular simple graph via the
    constructive argument: M1 a perfect matching; if G - M1 has one, done;
    otherwise its Gallai-Edmonds shape drives an explicit construction;
    any remaining case falls back to the direct search."""
    if not g.is_regular(4):
        raise ValueError("graph is not 4-regular")
    if not g.is_simple():
        raise ValueError("graph is not simple")
    if g.n % 2:
        raise ValueError("odd vertex count")
    if not is_k_connected(g, 3):
        raise ValueError("graph is not 3-connected")
    m1 = max_matching(g)
    if len(m1) * 2 != g.n:
        raise ValueError("graph has no perfect matching")
    return _fastpath_from_m1(g, m1, as_budget(budget))


# ---------------------------------------------------------------------------
# orchestrator


def check(g: Graph, budget=None) -> Verdict:
    """Full decision pipeline.

    Matching-covered gate, then the 4-regular fast path when applicable or
    a Hamilton-cycle probe otherwise, then the structural search, then the
    direct search.  The first definitive verdict wins; budget splits
    10% fast / 45% structural / 45% direct.
    """
    covered, report = is_matching_covered(g)
    if not covered:
        reason = report["reason"]
        if "edge" in report:
            reason = f"{reason} (edge {report['edge']})"
        return Verdict(INELIGIBLE, reason=f"not matching covered: {reason}")

    limit = as_budget(budget).limit
    if limit is None:
        fast_limit = struct_limit = direct_limit = None
    else:
        fast_limit = limit // 10
        struct_limit = limit * 45 // 100
        direct_limit = limit - fast_limit - struct_limit
    total = 0
    stage_reports: list[dict] = []

    fast_b = Budget(fast_limit)
    if _fastpath_applicable(g):
        m1 = max_matching(g)  # perfect: g is matching covered
        verdict = _fastpath_from_m1(g, m1, fast_b)
        total += fast_b.used
        if verdict.definitive:
            return replace(verdict, nodes=total)
        stage_reports.append(verdict.budget_report)
    elif g.n >= 2:
        try:
            cycle = hamilton_cycle(g, fast_b)
        except BudgetExhausted:
            cycle = None
            stage_reports.append({"stage": "hamilton", "limit": fast_limit,
                                  "used": fast_b.used})
        total += fast_b.used
        if cycle is not None and len(cycle) % 2 == 0:
            factor = frozenset(cycle)
            return Verdict(ADMISSIBLE,
                           triple=triple_from_even_2factor(g, factor),
                           structural=structural_from_factor(g, factor),
                           evidence={"stage": "hamilton"},
                           nodes=total)

    struct_b = Budget(struct_limit)
    verdict = structural_check(g, struct_b, _gate=False)
    total += struct_b.used
    if verdict.definitive:
        return replace(verdict, nodes=total)
    stage_reports.append(verdict.budget_report)

    direct_b = Budget(direct_limit)
    verdict = find_triple_direct(g, direct_b, _gate=False)
    total += direct_b.used
    if verdict.definitive:
        return replace(verdict, nodes=total)
    stage_reports.append(verdict.budget_report)

    return Verdict(UNKNOWN, budget_report={
        "limit": limit, "used": total, "stages": stage_reports}, nodes=total)
