"""Loopless finite multigraphs with explicit edge ends (darts).

Vertices are 0..n-1 and edge ids are 0..m-1, dense.  Every edge (u, v)
carries two darts: (edge_id, 0) sits at u and (edge_id, 1) sits at v.
Transition systems pair darts rather than edges, which keeps parallel
edges unambiguous.  Graphs are immutable; transformations build new ones.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .errors import (
    InvalidTrailError,
    LoopEdgeError,
    NotACycleError,
    NotAMatchingError,
    TrailNotInGraphError,
    VertexOutOfRangeError,
)

# A dart is (edge_id, end) with end in {0, 1}.  In a trail, the dart (e, s)
# means edge e traversed from endpoint s toward endpoint 1-s.
Dart = tuple[int, int]


def flip(dart: Dart) -> Dart:
    e, s = dart
    return (e, 1 - s)


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def _incidence(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edges):
            inc[u].append(e)
            inc[v].append(e)
        # appended in edge-id order, so each list is already sorted
        return tuple(tuple(lst) for lst in inc)

    def degree(self, v: int) -> int:
        return len(self._incidence[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(self._incidence[v]) for v in range(self.n))

    def incident(self, v: int) -> tuple[int, ...]:
        """Edge ids at v, ascending."""
        return self._incidence[v]

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.edges[e]

    def other_end(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        if v == u:
            return w
        if v == w:
            return u
        raise ValueError(f"vertex {v} is not an endpoint of edge {e}")

    def darts_at(self, v: int) -> tuple[Dart, ...]:
        """The darts anchored at v, ascending by edge id."""
        out = []
        for e in self._incidence[v]:
            u, w = self.edges[e]
            out.append((e, 0) if u == v else (e, 1))
        return tuple(out)

    def dart_tail(self, dart: Dart) -> int:
        e, s = dart
        return self.edges[e][s]

    def dart_head(self, dart: Dart) -> int:
        e, s = dart
        return self.edges[e][1 - s]

    @cached_property
    def _pair_edges(self) -> dict[tuple[int, int], tuple[int, ...]]:
        by_pair: dict[tuple[int, int], list[int]] = {}
        for e, (u, v) in enumerate(self.edges):
            key = (u, v) if u < v else (v, u)
            by_pair.setdefault(key, []).append(e)
        return {k: tuple(v) for k, v in by_pair.items()}

    def edges_between(self, u: int, v: int) -> tuple[int, ...]:
        key = (u, v) if u < v else (v, u)
        return self._pair_edges.get(key, ())

    def is_simple(self) -> bool:
        return all(len(ids) == 1 for ids in self._pair_edges.values())

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"


def build_multigraph(n: int, endpoint_pairs: list[tuple[int, int]] | tuple) -> Multigraph:
    """Build a multigraph, assigning edge ids in input order.

    Raises LoopEdgeError on a pair (v, v) and VertexOutOfRangeError when an
    endpoint is outside 0..n-1.
    """
    if n < 0:
        raise VertexOutOfRangeError("vertex count must be nonnegative")
    edges = []
    for u, v in endpoint_pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRangeError(f"endpoint pair ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise LoopEdgeError(f"loop at vertex {u} is not allowed")
        edges.append((u, v))
    return Multigraph(n, tuple(edges))


def is_k_regular(g: Multigraph, k: int) -> bool:
    return all(g.degree(v) == k for v in g.vertices)


def simplified(g: Multigraph) -> Multigraph:
    """Collapse parallel edges, keeping the lowest-id representative of each pair."""
    seen: set[tuple[int, int]] = set()
    edges = []
    for u, v in g.edges:
        key = (u, v) if u < v else (v, u)
        if key not in seen:
            seen.add(key)
            edges.append((u, v))
    return Multigraph(g.n, tuple(edges))


class Triangle(NamedTuple):
    """A 3-cycle: vertices a < b < c and edge ids (a-b, a-c, b-c)."""

    vertices: tuple[int, int, int]
    edge_ids: tuple[int, int, int]


def list_triangles(g: Multigraph) -> tuple[Triangle, ...]:
    """All triangles on three distinct edges, deduplicated, in sorted order.

    Parallel edges give one triangle per choice of connecting edge.
    """
    found = []
    for a in g.vertices:
        nbrs = sorted({g.other_end(e, a) for e in g.incident(a) if g.other_end(e, a) > a})
        for b, c in itertools.combinations(nbrs, 2):
            for eab in g.edges_between(a, b):
                for eac in g.edges_between(a, c):
                    for ebc in g.edges_between(b, c):
                        found.append(Triangle((a, b, c), (eab, eac, ebc)))
    found.sort()
    return tuple(found)


# ---------------------------------------------------------------------------
# Matchings


@dataclass(frozen=True)
class Matching:
    edge_ids: frozenset[int]

    def __len__(self) -> int:
        return len(self.edge_ids)

    def sorted_ids(self) -> tuple[int, ...]:
        return tuple(sorted(self.edge_ids))


def matching_of(g: Multigraph, edge_ids) -> Matching:
    """Validate that the edges are pairwise non-adjacent and wrap them."""
    ids = frozenset(edge_ids)
    covered: set[int] = set()
    for e in sorted(ids):
        if not (0 <= e < g.m):
            raise NotAMatchingError(f"edge id {e} not in graph")
        u, v = g.endpoints(e)
        if u in covered or v in covered:
            raise NotAMatchingError(f"edges share endpoint at vertex {u if u in covered else v}")
        covered.add(u)
        covered.add(v)
    return Matching(ids)


def matched_vertices(g: Multigraph, m: Matching) -> set[int]:
    out: set[int] = set()
    for e in m.edge_ids:
        u, v = g.endpoints(e)
        out.add(u)
        out.add(v)
    return out


def is_perfect_matching(g: Multigraph, m: Matching) -> bool:
    return len(matched_vertices(g, m)) == g.n


# ---------------------------------------------------------------------------
# Closed trails and cycles


@dataclass(frozen=True)
class ClosedTrail:
    """A cyclic dart sequence with pairwise-distinct edges."""

    darts: tuple[Dart, ...]

    def __len__(self) -> int:
        return len(self.darts)

    def edge_ids(self) -> frozenset[int]:
        return frozenset(e for e, _ in self.darts)


def check_closed_trail(g: Multigraph, trail: ClosedTrail) -> None:
    """Raise unless the dart sequence is a closed trail of g."""
    darts = trail.darts
    if not darts:
        raise InvalidTrailError("empty trail")
    for e, s in darts:
        if not (0 <= e < g.m) or s not in (0, 1):
            raise TrailNotInGraphError(f"dart ({e}, {s}) not in graph")
    edges = [e for e, _ in darts]
    if len(set(edges)) != len(edges):
        raise InvalidTrailError("trail repeats an edge")
    k = len(darts)
    for i in range(k):
        if g.dart_head(darts[i]) != g.dart_tail(darts[(i + 1) % k]):
            raise InvalidTrailError(f"darts {i} and {(i + 1) % k} do not share a vertex")


def trail_vertices(g: Multigraph, trail: ClosedTrail) -> tuple[int, ...]:
    """The visited vertex sequence (tail of each dart)."""
    return tuple(g.dart_tail(d) for d in trail.darts)


def visit_counts(g: Multigraph, trail: ClosedTrail) -> Counter:
    return Counter(trail_vertices(g, trail))


def is_cycle(g: Multigraph, trail: ClosedTrail) -> bool:
    """True when the closed trail visits every vertex at most once."""
    try:
        check_closed_trail(g, trail)
    except InvalidTrailError:
        return False
    seq = trail_vertices(g, trail)
    return len(set(seq)) == len(seq)


def require_cycle(g: Multigraph, trail: ClosedTrail) -> None:
    check_closed_trail(g, trail)
    seq = trail_vertices(g, trail)
    if len(set(seq)) != len(seq):
        raise NotACycleError("closed trail revisits a vertex")


def end_pairs_by_vertex(g: Multigraph, trail: ClosedTrail) -> dict[int, list[tuple[Dart, Dart]]]:
    """For each visited vertex, the pairs of darts (anchored there) the trail
    uses on each pass: the incoming edge end and the outgoing edge end."""
    darts = trail.darts
    k = len(darts)
    pairs: dict[int, list[tuple[Dart, Dart]]] = {}
    for i in range(k):
        d_in = flip(darts[i])
        d_out = darts[(i + 1) % k]
        v = g.dart_tail(d_out)
        pair = (d_in, d_out) if d_in <= d_out else (d_out, d_in)
        pairs.setdefault(v, []).append(pair)
    return pairs


def dominated_edges(g: Multigraph, on_cycle: set[int]) -> set[int]:
    """Edge ids with at least one endpoint in the given vertex set."""
    return {e for e, (u, v) in enumerate(g.edges) if u in on_cycle or v in on_cycle}


def dominates(g: Multigraph, trail: ClosedTrail, edge_ids) -> bool:
    on = set(trail_vertices(g, trail))
    return all(g.endpoints(e)[0] in on or g.endpoints(e)[1] in on for e in edge_ids)
