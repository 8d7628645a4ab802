"""The four graph transformations: line graph with its triangle-coherent
transition system, vertex splitting along a transition system, matching
contraction, and triangle contraction.

Every transformation returns the new graph together with provenance maps,
labeled deterministically so round-trip tests can compare graphs directly
instead of up to isomorphism.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    Dart,
    Matching,
    Multigraph,
    is_k_regular,
    list_triangles,
    matching_of,
)
from .errors import (
    InvalidTransitionSystemError,
    NotFourRegularError,
    NotSimpleError,
    OverlappingTrianglesError,
)
from .transitions import TransitionSystem, transition_system_from_pairs, validate_transition_system


@dataclass(frozen=True)
class LineGraphResult:
    source: Multigraph
    lg: Multigraph
    vertex_of_edge: tuple[int, ...]  # source edge id -> line-graph vertex
    triangle_family: tuple[tuple[int, ...], ...]  # source vertex -> lg edge ids of its clique
    canonical_t: TransitionSystem | None  # populated for cubic sources


def line_graph(g: Multigraph) -> LineGraphResult:
    """Line graph of a simple graph.  Vertex i of the result is edge i of g.

    For cubic g the result is 4-regular and carries the transition system
    that pairs, at each line-graph vertex, the two edge ends lying in the
    same source-vertex triangle.
    """
    if not g.is_simple():
        raise NotSimpleError("line graph is defined here for simple graphs only")
    lg_edges: list[tuple[int, int]] = []
    family: list[list[int]] = [[] for _ in range(g.n)]
    # darts of the clique edges, grouped by (lg vertex, generating source vertex)
    darts_by_origin: dict[tuple[int, int], list[Dart]] = {}
    for v in g.vertices:
        star = g.incident(v)
        for e1, e2 in itertools.combinations(star, 2):
            lid = len(lg_edges)
            lg_edges.append((e1, e2))
            family[v].append(lid)
            darts_by_origin.setdefault((e1, v), []).append((lid, 0))
            darts_by_origin.setdefault((e2, v), []).append((lid, 1))
    lg = Multigraph(g.m, tuple(lg_edges))

    canonical = None
    if is_k_regular(g, 3):
        pairs = []
        for x in range(g.m):
            u, w = g.endpoints(x)
            pu = darts_by_origin[(x, u)]
            pw = darts_by_origin[(x, w)]
            pairs.append((tuple(pu), tuple(pw)))
        canonical = transition_system_from_pairs(lg, pairs)
    return LineGraphResult(g, lg, tuple(range(g.m)), tuple(tuple(f) for f in family), canonical)


@dataclass(frozen=True)
class SplitResult:
    """The cubic graph obtained by splitting each vertex of a 4-regular host
    along its transitions, plus the new perfect matching.

    Vertex v of the host becomes 2v (carrying transition 0) and 2v + 1
    (transition 1); host edge ids are preserved and the new matching edge of
    v gets id m + v.  Host darts map to image darts with identical ids.
    """

    g: Multigraph
    matching: Matching
    split_pair: tuple[tuple[int, int], ...]
    matching_edge: tuple[int, ...]

    def image_dart(self, d: Dart) -> Dart:
        return d

    def preimage_dart(self, d: Dart) -> Dart:
        e, s = d
        if e in self.matching.edge_ids:
            raise ValueError(f"edge {e} is a matching edge with no preimage")
        return d


def split(h: Multigraph, t: TransitionSystem) -> SplitResult:
    if not is_k_regular(h, 4):
        raise NotFourRegularError("splitting needs a 4-regular host")
    if not validate_transition_system(h, t):
        raise InvalidTransitionSystemError("system does not partition the darts")
    side: dict[Dart, int] = {}
    for v in h.vertices:
        t0, t1 = t.per_vertex[v]
        for d in t0:
            side[d] = 0
        for d in t1:
            side[d] = 1
    edges = []
    for e in range(h.m):
        u, w = h.endpoints(e)
        edges.append((2 * u + side[(e, 0)], 2 * w + side[(e, 1)]))
    for v in h.vertices:
        edges.append((2 * v, 2 * v + 1))
    g = Multigraph(2 * h.n, tuple(edges))
    matching = matching_of(g, range(h.m, h.m + h.n))
    return SplitResult(
        g,
        matching,
        tuple((2 * v, 2 * v + 1) for v in h.vertices),
        tuple(h.m + v for v in h.vertices),
    )


@dataclass(frozen=True)
class ContractionMap:
    image_graph: Multigraph
    vertex_map: tuple[int, ...]  # source vertex -> image vertex
    edge_provenance: tuple[int, ...]  # image edge id -> source edge id

    def fibers(self) -> tuple[tuple[int, ...], ...]:
        groups: dict[int, list[int]] = {}
        for v, img in enumerate(self.vertex_map):
            groups.setdefault(img, []).append(v)
        return tuple(tuple(groups[i]) for i in sorted(groups))


def _contract(g: Multigraph, classes: list[list[int]]) -> ContractionMap:
    """Contract each class to one image vertex.  Image ids follow the minimum
    source vertex of each class; edges inside a class vanish."""
    classes = sorted((sorted(c) for c in classes), key=lambda c: c[0])
    vmap = [-1] * g.n
    for img, cls in enumerate(classes):
        for v in cls:
            vmap[v] = img
    image_edges = []
    provenance = []
    for e, (u, v) in enumerate(g.edges):
        iu, iv = vmap[u], vmap[v]
        if iu == iv:
            continue  # loop created by the contraction: discarded
        image_edges.append((iu, iv))
        provenance.append(e)
    image = Multigraph(len(classes), tuple(image_edges))
    return ContractionMap(image, tuple(vmap), tuple(provenance))


def contract_matching(g: Multigraph, m: Matching) -> ContractionMap:
    """Contract each matching edge to one vertex.  Parallel edges survive;
    loops (edges parallel to a contracted edge) are discarded."""
    matching_of(g, m.edge_ids)  # raises NotAMatchingError when invalid
    merged: set[int] = set()
    classes: list[list[int]] = []
    for e in sorted(m.edge_ids):
        u, v = g.endpoints(e)
        classes.append([u, v])
        merged.add(u)
        merged.add(v)
    classes.extend([v] for v in g.vertices if v not in merged)
    return _contract(g, classes)


def matching_contraction_transitions(g: Multigraph, m: Matching
                                     ) -> tuple[ContractionMap, TransitionSystem]:
    """Contract a perfect matching of a cubic graph and read off the induced
    transition system: at each image vertex the two surviving edge ends of one
    matched endpoint form one transition, those of the other the second.
    Splitting along it reverses the contraction."""
    if not is_k_regular(g, 3):
        raise NotFourRegularError("matching contraction transitions need a cubic source")
    cm = contract_matching(g, m)
    image = cm.image_graph
    if not is_k_regular(image, 4):
        raise NotFourRegularError("contraction is not 4-regular; matching not perfect?")
    source_of_image_dart: dict[Dart, int] = {}
    for j, e in enumerate(cm.edge_provenance):
        for s in (0, 1):
            source_of_image_dart[(j, s)] = g.endpoints(e)[s]
    pairs = []
    for v in image.vertices:
        groups: dict[int, list[Dart]] = {}
        for d in image.darts_at(v):
            groups.setdefault(source_of_image_dart[d], []).append(d)
        sides = sorted(groups.values(), key=lambda ds: ds[0])
        if len(sides) != 2 or any(len(s) != 2 for s in sides):
            raise NotFourRegularError(f"image vertex {v} does not split 2+2 by fiber")
        pairs.append((tuple(sides[0]), tuple(sides[1])))
    return cm, transition_system_from_pairs(image, pairs)


def contract_triangles(g: Multigraph) -> ContractionMap:
    """Contract every triangle to one vertex; requires pairwise vertex-disjoint
    triangles (raises OverlappingTrianglesError otherwise)."""
    triangles = list_triangles(g)
    seen: set[int] = set()
    classes: list[list[int]] = []
    for tri in triangles:
        if any(v in seen for v in tri.vertices):
            raise OverlappingTrianglesError(f"triangles overlap at {tri.vertices}")
        seen.update(tri.vertices)
        classes.append(list(tri.vertices))
    classes.extend([v] for v in g.vertices if v not in seen)
    return _contract(g, classes)
