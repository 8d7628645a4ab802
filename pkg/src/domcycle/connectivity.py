"""Vertex, edge, and cyclic edge connectivity by exhaustive enumeration.

Everything here is desk scale on purpose: subsets are enumerated outright,
so the answers double as their own oracles.  Cyclic edge connectivity walks
all vertex bipartitions with a Gray code, keeping splits whose two sides
each contain a cycle and minimizing the crossing edges.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .core import ClosedTrail, Multigraph, simplified
from .errors import (
    DisconnectedError,
    NoTwoDisjointCyclesError,
    TooLargeError,
)

VERTEX_CONN_MAX_N = 16
CYCLIC_CONN_MAX_N = 24


@dataclass(frozen=True)
class CutCertificate:
    kind: str  # "vertex-cut" | "edge-cut" | "cyclic-edge-cut"
    members: tuple[int, ...]
    side_partition: tuple[tuple[int, ...], tuple[int, ...]]


def _component_sets(g: Multigraph, removed_vertices: frozenset[int] = frozenset(),
                    removed_edges: frozenset[int] = frozenset()) -> list[set[int]]:
    seen: set[int] = set(removed_vertices)
    comps = []
    for start in g.vertices:
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        stack = [start]
        while stack:
            u = stack.pop()
            for e in g.incident(u):
                if e in removed_edges:
                    continue
                w = g.other_end(e, u)
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def is_connected(g: Multigraph) -> bool:
    if g.n == 0:
        return True
    return len(_component_sets(g)) == 1


def _subset_has_cycle(g: Multigraph, vertices: set[int]) -> bool:
    """True when the induced subgraph contains a cycle (parallel pairs count).

    Repeatedly strips vertices of induced degree <= 1; a nonempty remainder
    is a 2-core and therefore carries a cycle.
    """
    alive = set(vertices)
    deg = {}
    for v in alive:
        deg[v] = sum(1 for e in g.incident(v) if g.other_end(e, v) in alive)
    queue = [v for v in alive if deg[v] <= 1]
    while queue:
        v = queue.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for e in g.incident(v):
            w = g.other_end(e, v)
            if w in alive:
                deg[w] -= 1
                if deg[w] <= 1:
                    queue.append(w)
    return bool(alive)


def cycle_within(g: Multigraph, vertices: set[int]) -> ClosedTrail | None:
    """Some cycle inside the induced subgraph, or None.  DFS back-edge walk."""
    alive = set(vertices)
    color: dict[int, int] = {}
    parent_dart: dict[int, tuple[int, int] | None] = {}
    for root in sorted(alive):
        if root in color:
            continue
        color[root] = 1
        parent_dart[root] = None
        stack = [(root, iter(g.incident(root)))]
        while stack:
            u, edge_iter = stack[-1]
            advanced = False
            for e in edge_iter:
                w = g.other_end(e, u)
                if w not in alive:
                    continue
                pd = parent_dart[u]
                if pd is not None and pd[0] == e:
                    continue  # the tree edge we arrived by
                if w not in color:
                    color[w] = 1
                    parent_dart[w] = (e, u)  # edge, tail it was entered from
                    stack.append((w, iter(g.incident(w))))
                    advanced = True
                    break
                if color[w] == 1:
                    # back edge u -> w closes a cycle along the tree path w..u
                    path = []
                    x = u
                    while x != w:
                        pe, ptail = parent_dart[x]
                        s = 0 if g.endpoints(pe)[0] == ptail else 1
                        path.append((pe, s))
                        x = ptail
                    path.reverse()
                    s = 0 if g.endpoints(e)[0] == u else 1
                    path.append((e, s))
                    return ClosedTrail(tuple(path))
            if not advanced:
                color[u] = 2
                stack.pop()
    return None


def enumerate_cycles(g: Multigraph):
    """All cycles, each exactly once: anchored at its minimum vertex, with the
    first dart's edge id below the closing dart's edge id."""
    for s in g.vertices:
        on_path = [False] * g.n
        on_path[s] = True
        path: list[tuple[int, int]] = []

        def extend(u: int):
            for e in g.incident(u):
                w = g.other_end(e, u)
                if w == s and path and e > path[0][0]:
                    closing = (e, 0 if g.endpoints(e)[0] == u else 1)
                    yield ClosedTrail(tuple(path) + (closing,))
                elif w > s and not on_path[w]:
                    on_path[w] = True
                    path.append((e, 0 if g.endpoints(e)[0] == u else 1))
                    yield from extend(w)
                    path.pop()
                    on_path[w] = False

        yield from extend(s)


def has_two_disjoint_cycles(g: Multigraph) -> tuple[bool, tuple[ClosedTrail, ClosedTrail] | None]:
    """Exhaustive: try every cycle as the first of the pair."""
    all_vertices = set(g.vertices)
    for cyc in enumerate_cycles(g):
        used = {g.dart_tail(d) for d in cyc.darts}
        other = cycle_within(g, all_vertices - used)
        if other is not None:
            return True, (cyc, other)
    return False, None


def vertex_connectivity(g: Multigraph) -> tuple[int, CutCertificate | None]:
    """Largest k such that |V| > k and no vertex set of size < k disconnects.

    Parallel edges are collapsed first; exhaustive over subsets, n <= 16.
    """
    gs = simplified(g)
    if gs.n > VERTEX_CONN_MAX_N:
        raise TooLargeError(f"vertex connectivity enumerates subsets for n <= {VERTEX_CONN_MAX_N}")
    if gs.n <= 1:
        return 0, None
    if not is_connected(gs):
        raise DisconnectedError("vertex connectivity needs a connected graph")
    if all(len(gs.edges_between(u, v)) == 1
           for u, v in itertools.combinations(range(gs.n), 2)):
        return gs.n - 1, None
    for k in range(1, gs.n - 1):
        for cut in itertools.combinations(range(gs.n), k):
            comps = _component_sets(gs, removed_vertices=frozenset(cut))
            if len(comps) > 1:
                side0 = tuple(sorted(comps[0]))
                rest = tuple(sorted(set().union(*comps[1:])))
                return k, CutCertificate("vertex-cut", cut, (side0, rest))
    # not complete, so some cut below n-1 must have been found
    raise AssertionError("unreachable: incomplete graph without a vertex cut")


def edge_connectivity(g: Multigraph) -> tuple[int, CutCertificate | None]:
    """Minimum edge cut by brute force over edge subsets below the degree bound."""
    if g.n <= 1:
        return 0, None
    if not is_connected(g):
        raise DisconnectedError("edge connectivity needs a connected graph")
    delta_v = min(g.vertices, key=lambda v: (g.degree(v), v))
    delta = g.degree(delta_v)
    for k in range(1, delta):
        for cut in itertools.combinations(range(g.m), k):
            comps = _component_sets(g, removed_edges=frozenset(cut))
            if len(comps) > 1:
                side0 = tuple(sorted(comps[0]))
                rest = tuple(sorted(set().union(*comps[1:])))
                return k, CutCertificate("edge-cut", cut, (side0, rest))
    # the star of a minimum-degree vertex is then a minimum cut
    members = g.incident(delta_v)
    side0 = (delta_v,)
    rest = tuple(v for v in g.vertices if v != delta_v)
    return delta, CutCertificate("edge-cut", members, (side0, rest))


def _crossing_edges(g: Multigraph, side: set[int]) -> tuple[int, ...]:
    return tuple(e for e, (u, v) in enumerate(g.edges) if (u in side) != (v in side))


@lru_cache(maxsize=None)
def _cyclic_cut_scan(g: Multigraph) -> tuple[int, tuple[int, ...]] | None:
    """Minimum crossing count over bipartitions whose sides both contain a
    cycle, with a witness side.  None when no such split exists.

    Gray-code walk over subsets of {1..n-1}; vertex 0 stays on the other side
    so each unordered split is visited once.  Crossing counts and side degree
    sums are maintained incrementally.
    """
    n = g.n
    two, witness = has_two_disjoint_cycles(g)
    if not two:
        return None
    # seed the bound with the split along the first witness cycle
    c1, _ = witness
    seed = {g.dart_tail(d) for d in c1.darts}
    if 0 in seed:
        seed = set(g.vertices) - seed
    best = len(_crossing_edges(g, seed))
    best_side = seed

    inc = [tuple((e, g.other_end(e, v)) for e in g.incident(v)) for v in range(n)]
    in_side = [False] * n
    side: set[int] = set()
    crossing = 0
    size = 0
    sum_deg = 0
    total_m = g.m
    for i in range(1, 1 << (n - 1)):
        v = ((i & -i).bit_length() - 1) + 1  # flip vertex 1..n-1
        if in_side[v]:
            for e, w in inc[v]:
                crossing += 1 if in_side[w] else -1
            in_side[v] = False
            side.discard(v)
            size -= 1
            sum_deg -= len(inc[v])
        else:
            for e, w in inc[v]:
                crossing += -1 if in_side[w] else 1
            in_side[v] = True
            side.add(v)
            size += 1
            sum_deg += len(inc[v])
        if crossing >= best:
            continue
        within = (sum_deg - crossing) // 2
        if size < 2 or within < 2:
            continue
        other_within = total_m - crossing - within
        if n - size < 2 or other_within < 2:
            continue
        if _subset_has_cycle(g, side) and _subset_has_cycle(g, set(g.vertices) - side):
            best = crossing
            best_side = set(side)
    return best, tuple(sorted(best_side))


def cyclic_edge_connectivity(g: Multigraph) -> tuple[int, CutCertificate]:
    """Minimum size of an edge cut leaving >= 2 components that each contain
    a cycle.  Exhaustive over vertex bipartitions, n <= 24."""
    if g.n > CYCLIC_CONN_MAX_N:
        raise TooLargeError(f"cyclic edge connectivity enumerates splits for n <= {CYCLIC_CONN_MAX_N}")
    scan = _cyclic_cut_scan(g)
    if scan is None:
        raise NoTwoDisjointCyclesError("cyclic edge connectivity is undefined here")
    value, side = scan
    side_set = set(side)
    members = _crossing_edges(g, side_set)
    other = tuple(sorted(set(g.vertices) - side_set))
    return value, CutCertificate("cyclic-edge-cut", members, (side, other))


def is_cyclically_k_edge_connected(g: Multigraph, k: int) -> bool:
    """No cyclic edge cut of size < k.  Graphs without two disjoint cycles
    have no cyclic cut at all and pass vacuously."""
    try:
        value, _ = cyclic_edge_connectivity(g)
    except NoTwoDisjointCyclesError:
        return True
    return value >= k


def certificate_is_valid(g: Multigraph, cert: CutCertificate) -> bool:
    """Re-validate a certificate against its host graph."""
    side_a, side_b = (set(cert.side_partition[0]), set(cert.side_partition[1]))
    if side_a & side_b:
        return False
    if cert.kind == "vertex-cut":
        if side_a | side_b | set(cert.members) != set(g.vertices):
            return False
        comps = _component_sets(g, removed_vertices=frozenset(cert.members))
        reach = {}
        for idx, comp in enumerate(comps):
            for v in comp:
                reach[v] = idx
        ids_a = {reach[v] for v in side_a}
        ids_b = {reach[v] for v in side_b}
        return bool(side_a) and bool(side_b) and not (ids_a & ids_b)
    if cert.kind in ("edge-cut", "cyclic-edge-cut"):
        if side_a | side_b != set(g.vertices):
            return False
        crossing = _crossing_edges(g, side_a)
        if set(crossing) != set(cert.members):
            return False
        comps = _component_sets(g, removed_edges=frozenset(cert.members))
        if len(comps) < 2:
            return False
        if cert.kind == "cyclic-edge-cut":
            return _subset_has_cycle(g, side_a) and _subset_has_cycle(g, side_b)
        return True
    return False
