"""Gallai-Edmonds decomposition and its structural property checks.

D is computed operationally: v belongs to D iff deleting v does not drop
the maximum matching size, i.e. some maximum matching exposes v.  That
costs n+1 maximum matching runs, which keeps the whole decomposition
polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, connected_components
from .matching import (
    _maximum_mates,
    is_factor_critical,
    max_matching_size,
)


@dataclass(frozen=True)
class GallaiEdmonds:
    """Vertex partition (d, a, c) plus the components of the subgraph
    induced on d and their edge counts into a.

    components[i] is a sorted vertex tuple; t[i] counts the edges joining
    that component to a (parallel edges counted individually).
    """

    d: frozenset[int]
    a: frozenset[int]
    c: frozenset[int]
    components: tuple[tuple[int, ...], ...]
    t: tuple[int, ...]

    @property
    def omega(self) -> int:
        return len(self.components)

    @property
    def omega1(self) -> int:
        return sum(1 for t in self.t if t == 1)


def gallai_edmonds(g: Graph) -> GallaiEdmonds:
    nu = max_matching_size(g)
    d = set()
    for v in range(g.n):
        sub, _, _ = g.induced_subgraph([u for u in range(g.n) if u != v])
        if max_matching_size(sub) == nu:
            d.add(v)
    a = set()
    for v in d:
        for w in g.neighbor_sets[v]:
            if w not in d:
                a.add(w)
    c = set(range(g.n)) - d - a
    comps = connected_components(g, vertices=d) if d else []
    t = []
    for comp in comps:
        comp_set = set(comp)
        cnt = 0
        for u, v in g.edges:
            if (u in comp_set and v in a) or (v in comp_set and u in a):
                cnt += 1
        t.append(cnt)
    return GallaiEdmonds(
        d=frozenset(d),
        a=frozenset(a),
        c=frozenset(c),
        components=tuple(tuple(comp) for comp in comps),
        t=tuple(t),
    )


def verify_decomposition(g: Graph, ge: GallaiEdmonds) -> dict:
    """Check the decomposition's structural guarantees on g.

    Returns a report with boolean fields:
      components_factor_critical -- every component of G[D] is factor
          critical;
      c_has_perfect_matching -- the subgraph induced on C has a perfect
          matching;
      a_matchable_into_components -- A can be matched into pairwise
          distinct D-components using edges of g;
      deficiency_consistent -- number of exposed vertices in a maximum
          matching equals omega - |A|.
    """
    ok_fc = all(is_factor_critical(g, comp) for comp in ge.components)

    if ge.c:
        sub, _, _ = g.induced_subgraph(sorted(ge.c))
        ok_c = max_matching_size(sub) * 2 == sub.n
    else:
        ok_c = True

    # bipartite matching between A and the component indices
    a_list = sorted(ge.a)
    na, nk = len(a_list), len(ge.components)
    comp_of = {}
    for i, comp in enumerate(ge.components):
        for v in comp:
            comp_of[v] = i
    nbr: list[set[int]] = [set() for _ in range(na + nk)]
    for i, v in enumerate(a_list):
        for w in g.neighbor_sets[v]:
            if w in comp_of:
                j = na + comp_of[w]
                nbr[i].add(j)
                nbr[j].add(i)
    mates = _maximum_mates(na + nk, [sorted(s) for s in nbr])
    ok_a = all(mates[i] != -1 for i in range(na))

    deficiency = g.n - 2 * max_matching_size(g)
    ok_def = deficiency == ge.omega - len(ge.a)

    return {
        "components_factor_critical": ok_fc,
        "c_has_perfect_matching": ok_c,
        "a_matchable_into_components": ok_a,
        "deficiency_consistent": ok_def,
        "ok": ok_fc and ok_c and ok_a and ok_def,
    }
