"""Bicontraction of spanning subgraphs to cubic skeletons, proper
3-edge-coloring, and lifting a skeleton coloring to three perfect
matchings of the host graph.

A chain is a maximal path whose internal vertices have degree 2 in the
spanning subgraph.  Bicontracting every chain to a single edge yields the
skeleton; the spanning subgraph is a bisubdivision of it exactly when every
chain has odd length, which is what the lifting rules below rely on.
"""

from __future__ import annotations

from .budget import as_budget
from .certificates import (
    CertificateFormatError,
    SkeletonCertificate,
    StructuralCertificate,
    TripleCertificate,
    _matching_from_json,
    verify_triple,
)
from .graph import Graph, connected_components
from .twofactor import factor_cycles


class SkeletonExtractionError(ValueError):
    """Raised when an edge set is not a bisubdivision of a cubic graph;
    ``reason`` is one of: not spanning, degree out of range, isolated
    cycle component, even chain, loop chain."""

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}{': ' + detail if detail else ''}")
        self.reason = reason


def _spanning_degrees(g: Graph, edge_set) -> list[int]:
    deg = [0] * g.n
    for e in edge_set:
        u, v = g.edges[e]
        deg[u] += 1
        deg[v] += 1
    return deg


def _walk_chains(g: Graph, edge_set, sdeg):
    """Walk all branch-to-branch chains.  Returns (chains, leftover) where
    chains are (bu, bv, edge_path, vertex_path) in discovery order and
    leftover is the set of edges on no chain (pure cycle components)."""
    inc: dict[int, list[int]] = {}
    for e in sorted(edge_set):
        u, v = g.edges[e]
        inc.setdefault(u, []).append(e)
        inc.setdefault(v, []).append(e)
    branch = sorted(v for v in inc if sdeg[v] == 3)
    visited: set[int] = set()
    chains = []
    for bv in branch:
        for e in inc[bv]:
            if e in visited:
                continue
            path = [e]
            vpath = [bv]
            prev_e = e
            cur = g.other(e, bv)
            while sdeg[cur] == 2:
                vpath.append(cur)
                a, b = inc[cur]
                prev_e = b if a == prev_e else a
                path.append(prev_e)
                cur = g.other(prev_e, cur)
            vpath.append(cur)
            if cur == bv:
                raise SkeletonExtractionError(
                    "loop chain", f"chain of length {len(path)} closes on vertex {bv}")
            if len(path) % 2 == 0:
                raise SkeletonExtractionError(
                    "even chain",
                    f"chain {bv}..{cur} has even length {len(path)}")
            visited.update(path)
            chains.append((bv, cur, tuple(path), tuple(vpath)))
    leftover = set(edge_set) - visited
    return chains, leftover


def _skeleton_from_chains(g: Graph, edge_set, chains) -> SkeletonCertificate:
    branch = sorted({c[0] for c in chains} | {c[1] for c in chains})
    idx = {v: i for i, v in enumerate(branch)}
    items = []
    for bu, bw, path, vpath in chains:
        a, b = idx[bu], idx[bw]
        if a > b:
            a, b = b, a
            path = tuple(reversed(path))
            vpath = tuple(reversed(vpath))
        items.append(((a, b), path, vpath))
    items.sort(key=lambda it: it[0])  # stable: parallel chains keep discovery order
    skel = Graph(len(branch), tuple(p for p, _, _ in items))
    return SkeletonCertificate(
        spanning=frozenset(edge_set),
        branch_vertices=tuple(branch),
        skeleton=skel,
        chain_map=tuple(p for _, p, _ in items),
        chain_vertices=tuple(vp for _, _, vp in items),
    )


def extract_skeleton(g: Graph, spanning) -> SkeletonCertificate:
    """Bicontract ``spanning`` (an edge-id set touching every vertex with
    degrees in {2, 3}) to its cubic skeleton.

    Raises SkeletonExtractionError when the set is not such a witness:
    even chain, loop chain, or a component that is a bare cycle.
    """
    spanning = frozenset(spanning)
    for e in spanning:
        if not (0 <= e < g.m):
            raise ValueError(f"edge id {e} out of range")
    sdeg = _spanning_degrees(g, spanning)
    for v in range(g.n):
        if sdeg[v] == 0:
            raise SkeletonExtractionError("not spanning", f"vertex {v} untouched")
        if sdeg[v] not in (2, 3):
            raise SkeletonExtractionError(
                "degree out of range", f"vertex {v} has degree {sdeg[v]}")
    chains, leftover = _walk_chains(g, spanning, sdeg)
    if leftover:
        raise SkeletonExtractionError(
            "isolated cycle component",
            f"edges {sorted(leftover)} lie on no branch vertex chain")
    return _skeleton_from_chains(g, spanning, chains)


def color_cubic_3(h: Graph, budget=None) -> tuple[int, ...] | None:
    """Proper 3-edge-coloring of a cubic multigraph, as a color tuple
    indexed by edge id, or None once the search space is exhausted.

    Components are colored independently; within one, edges are tried in
    id order with colors 1, 2, 3 ascending.
    """
    if not h.is_regular(3):
        raise ValueError("graph is not cubic")
    b = as_budget(budget)
    colors = [0] * h.m
    used = [0] * h.n  # bitmask of colors present at each vertex

    def solve(edge_list: list[int], k: int) -> bool:
        b.charge()
        if k == len(edge_list):
            return True
        e = edge_list[k]
        u, v = h.edges[e]
        for c in (1, 2, 3):
            bit = 1 << c
            if used[u] & bit or used[v] & bit:
                continue
            used[u] |= bit
            used[v] |= bit
            colors[e] = c
            if solve(edge_list, k + 1):
                return True
            used[u] &= ~bit
            used[v] &= ~bit
            colors[e] = 0
        return False

    for comp in connected_components(h):
        comp_set = set(comp)
        comp_edges = [e for e, (u, _) in enumerate(h.edges) if u in comp_set]
        if not solve(comp_edges, 0):
            return None
    return tuple(colors)


def _lift_classes(sc: SkeletonCertificate) -> dict[int, set[int]]:
    """Expand each colored skeleton edge along its chain.

    A chain whose skeleton edge has color c alternates: edges at even
    positions belong to class c alone, edges at odd positions to both other
    classes.  Odd chain length makes both chain ends class c, which is what
    keeps every class a perfect matching after expansion.
    """
    if sc.coloring is None:
        raise ValueError("skeleton certificate has no coloring")
    classes: dict[int, set[int]] = {1: set(), 2: set(), 3: set()}
    for i, path in enumerate(sc.chain_map):
        c = sc.coloring[i]
        if c not in (1, 2, 3):
            raise ValueError(f"skeleton edge {i} has invalid color {c!r}")
        o1, o2 = (x for x in (1, 2, 3) if x != c)
        for k, e in enumerate(path):
            if k % 2 == 0:
                classes[c].add(e)
            else:
                classes[o1].add(e)
                classes[o2].add(e)
    return classes


def lift_triple(g: Graph, sc: SkeletonCertificate) -> TripleCertificate:
    """Lift a colored skeleton that spans all of g to a verified triple
    covering exactly the spanning edge set."""
    sdeg = _spanning_degrees(g, sc.spanning)
    if any(d == 0 for d in sdeg):
        raise ValueError("skeleton part does not span the graph; "
                         "lift through its structural certificate instead")
    classes = _lift_classes(sc)
    cert = TripleCertificate(frozenset(classes[1]), frozenset(classes[2]),
                             frozenset(classes[3]))
    report = verify_triple(g, cert)
    if not report["ok"]:
        raise ValueError(f"lift produced an invalid triple: {report['violations']}")
    if cert.union() != sc.spanning:
        raise ValueError("lifted triple does not cover the spanning set exactly")
    return cert


def triple_from_structural(g: Graph, cert: StructuralCertificate) -> TripleCertificate:
    """Lift a full structural certificate: skeleton chains by their
    coloring, even cycle components by alternation with M3 = M2."""
    classes: dict[int, set[int]] = {1: set(), 2: set(), 3: set()}
    if cert.skeleton_part is not None:
        for c, edges in _lift_classes(cert.skeleton_part).items():
            classes[c] |= edges
    cycle_union = [e for comp in cert.cycle_components for e in comp]
    if cycle_union:
        cycles = factor_cycles(g, cycle_union)
        if cycles is None:
            raise ValueError("cycle components are not disjoint cycles")
        for cyc in cycles:
            if len(cyc) % 2:
                raise ValueError("odd cycle component in structural certificate")
            for k, e in enumerate(cyc):
                if k % 2 == 0:
                    classes[1].add(e)
                else:
                    classes[2].add(e)
                    classes[3].add(e)
    out = TripleCertificate(frozenset(classes[1]), frozenset(classes[2]),
                            frozenset(classes[3]))
    report = verify_triple(g, out)
    if not report["ok"]:
        raise ValueError(f"structural lift failed: {report['violations']}")
    if out.union() != cert.spanning:
        raise ValueError("structural lift does not cover the spanning set exactly")
    return out


def split_spanning_components(g: Graph, edge_set):
    """Partition a degree-{2,3} edge set into pure cycle components and the
    union of components containing a degree-3 vertex.  Returns
    (cycle_components, branch_edges) with each cycle component an edge-id
    tuple in traversal order."""
    sdeg = _spanning_degrees(g, edge_set)
    touched = [v for v in range(g.n) if sdeg[v]]
    comps = connected_components(g, vertices=touched, edge_ids=edge_set)
    cycles = []
    branch_edges: set[int] = set()
    es = set(edge_set)
    for comp in comps:
        comp_set = set(comp)
        comp_edges = [e for e in es if g.edges[e][0] in comp_set]
        if any(sdeg[v] == 3 for v in comp):
            branch_edges.update(comp_edges)
        else:
            ordered = factor_cycles(g, comp_edges)
            cycles.append(tuple(ordered[0]))
    return cycles, branch_edges


def verify_structural(g: Graph, cert: StructuralCertificate) -> dict:
    """Full check of a structural certificate; never raises.

    Validates the spanning degrees, the even cycle components, the chain
    map against the skeleton, the coloring, and finally that the witness
    lifts to a verifying triple covering the spanning set.
    """
    violations: list[str] = []
    bad = sorted(e for e in cert.spanning if not (0 <= e < g.m))
    if bad:
        return {"ok": False, "violations": [f"spanning edge ids out of range: {bad}"]}

    sdeg = _spanning_degrees(g, cert.spanning)
    for v in range(g.n):
        if sdeg[v] == 0:
            violations.append(f"not spanning: vertex {v} untouched")
        elif sdeg[v] not in (2, 3):
            violations.append(f"vertex {v} has spanning degree {sdeg[v]}")
    if violations:
        return {"ok": False, "violations": violations}

    cycle_union: set[int] = set()
    for comp in cert.cycle_components:
        comp_set = set(comp)
        if comp_set & cycle_union:
            violations.append("cycle components overlap")
        cycle_union |= comp_set
    if cycle_union - cert.spanning:
        violations.append("cycle component edges outside the spanning set")
    if cycle_union:
        cycles = factor_cycles(g, cycle_union)
        if cycles is None:
            violations.append("cycle components are not disjoint cycles")
        else:
            for cyc in cycles:
                if len(cyc) % 2:
                    violations.append(f"odd cycle component: edges {sorted(cyc)}")
            derived = {frozenset(c) for c in cycles}
            given = {frozenset(c) for c in cert.cycle_components}
            if derived != given:
                violations.append("cycle component list does not match the edge set")

    sk = cert.skeleton_part
    chain_union: set[int] = set()
    if sk is not None:
        chain_union = {e for path in sk.chain_map for e in path}
        if sk.spanning != frozenset(chain_union):
            violations.append("skeleton part spanning set disagrees with its chains")
        expected_branch = tuple(sorted(
            v for v in range(g.n) if sdeg[v] == 3))
        if tuple(sk.branch_vertices) != expected_branch:
            violations.append(
                f"branch vertices {list(sk.branch_vertices)} differ from the "
                f"degree-3 vertices {list(expected_branch)}")
        if sk.skeleton.n != len(sk.branch_vertices):
            violations.append("skeleton order differs from branch vertex count")
        if not sk.skeleton.is_regular(3):
            violations.append("skeleton is not cubic")
        if len(sk.chain_map) != sk.skeleton.m:
            violations.append("chain map length differs from skeleton size")
        else:
            seen_internal: set[int] = set()
            for i, path in enumerate(sk.chain_map):
                a, b = sk.skeleton.edges[i]
                ok_walk, end, internal = _walk_path(
                    g, sk.branch_vertices[a], path)
                if not ok_walk:
                    violations.append(f"chain {i} is not a path")
                    continue
                if end != sk.branch_vertices[b]:
                    violations.append(
                        f"chain {i} ends at {end}, skeleton expects "
                        f"{sk.branch_vertices[b]}")
                if len(path) % 2 == 0:
                    violations.append(f"chain {i} has even length {len(path)}")
                for w in internal:
                    if sdeg[w] != 2:
                        violations.append(
                            f"chain {i} passes through branch vertex {w}")
                    if w in seen_internal:
                        violations.append(
                            f"vertex {w} is internal to two chains")
                    seen_internal.add(w)
        if sk.coloring is None:
            violations.append("skeleton coloring missing")
        else:
            if len(sk.coloring) != sk.skeleton.m:
                violations.append("coloring length differs from skeleton size")
            else:
                for v in range(sk.skeleton.n):
                    cs = [sk.coloring[e] for e in sk.skeleton.incident[v]]
                    if sorted(cs) != [1, 2, 3]:
                        violations.append(
                            f"skeleton vertex {v} sees colors {cs}, not 1, 2, 3")

    if chain_union & cycle_union:
        violations.append("chain edges and cycle edges overlap")
    if chain_union | cycle_union != set(cert.spanning):
        violations.append("chains and cycles do not partition the spanning set")

    if not violations:
        try:
            triple = triple_from_structural(g, cert)
        except ValueError as exc:
            violations.append(str(exc))
        else:
            rep = verify_triple(g, triple)
            if not rep["ok"]:
                violations.extend(rep["violations"])
    return {"ok": not violations, "violations": violations}


def _walk_path(g: Graph, start: int, path):
    """Follow edge ids from ``start``; returns (ok, end, internal vertices)."""
    cur = start
    internal = []
    for e in path:
        if not (0 <= e < g.m):
            return False, cur, internal
        u, v = g.edges[e]
        if cur == u:
            cur = v
        elif cur == v:
            cur = u
        else:
            return False, cur, internal
        internal.append(cur)
    if internal:
        internal.pop()  # last vertex is the far endpoint, not internal
    return True, cur, internal


def rebuild_skeleton_certificate(g: Graph, obj) -> StructuralCertificate:
    """Decode the JSON form of a skeleton-type structural certificate."""
    spanning = _matching_from_json(g, obj.get("spanning"), "spanning")
    raw_cycles = obj.get("cycle_components", [])
    cycles = []
    for comp in raw_cycles:
        ids = tuple(int(e) for e in comp)
        for e in ids:
            if not (0 <= e < g.m):
                raise CertificateFormatError(f"cycle edge id {e} out of range")
        cycles.append(ids)
    branch = tuple(int(v) for v in obj.get("branch_vertices", []))
    skdata = obj.get("skeleton")
    if not isinstance(skdata, dict) or "n" not in skdata or "edges" not in skdata:
        raise CertificateFormatError("skeleton certificate needs a skeleton object")
    try:
        skel = Graph(int(skdata["n"]),
                     tuple((int(p[0]), int(p[1])) for p in skdata["edges"]))
    except ValueError as exc:
        raise CertificateFormatError(f"bad skeleton edge list: {exc}") from None
    chain_map = tuple(tuple(int(e) for e in path) for path in obj.get("chain_map", []))
    if len(chain_map) != skel.m:
        raise CertificateFormatError("chain map length differs from skeleton size")
    chain_vertices = []
    for i, path in enumerate(chain_map):
        a = skel.edges[i][0] if i < skel.m else 0
        start = branch[a] if a < len(branch) else 0
        ok, _, internal = _walk_path(g, start, path)
        end_vertex = branch[skel.edges[i][1]] if ok and skel.edges[i][1] < len(branch) else start
        if ok:
            chain_vertices.append((start, *internal, end_vertex))
        else:
            chain_vertices.append((start,))
    coloring_obj = obj.get("coloring")
    coloring = None
    if coloring_obj is not None:
        if not isinstance(coloring_obj, dict):
            raise CertificateFormatError("coloring must map edge ids to color sets")
        coloring_list = []
        for i in range(skel.m):
            val = coloring_obj.get(str(i))
            if not (isinstance(val, list) and len(val) == 1):
                raise CertificateFormatError(
                    f"coloring for skeleton edge {i} must be a single-color set")
            coloring_list.append(int(val[0]))
        coloring = tuple(coloring_list)
    sk = SkeletonCertificate(
        spanning=frozenset(e for path in chain_map for e in path),
        branch_vertices=branch,
        skeleton=skel,
        chain_map=chain_map,
        chain_vertices=tuple(chain_vertices),
        coloring=coloring,
    )
    return StructuralCertificate(spanning=spanning,
                                 cycle_components=tuple(cycles),
                                 skeleton_part=sk)
