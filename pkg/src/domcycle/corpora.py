"""Built-in graph corpora and the named fixtures used throughout the suite.

Metadata recorded here ("this entry is cyclically 5-edge connected") is never
trusted: verify_corpus re-derives every claim with the connectivity module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .connectivity import (
    cyclic_edge_connectivity,
    is_connected,
    vertex_connectivity,
)
from .core import Matching, Multigraph, build_multigraph, is_k_regular, matching_of
from .errors import NoTwoDisjointCyclesError
from .transitions import TransitionSystem, transition_system_from_pairs


def complete_graph(k: int) -> Multigraph:
    return build_multigraph(k, list(itertools.combinations(range(k), 2)))


def complete_bipartite(a: int, b: int) -> Multigraph:
    return build_multigraph(a + b, [(u, v) for u in range(a) for v in range(a, a + b)])


def generalized_petersen(n: int, k: int) -> Multigraph:
    """Outer n-cycle 0..n-1, spokes (i, n+i), inner star polygon step k.
    Edge ids: outer edges first, then spokes, then inner edges."""
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    edges += [(n + i, n + ((i + k) % n)) for i in range(n)]
    return build_multigraph(2 * n, edges)


def petersen() -> Multigraph:
    return generalized_petersen(5, 2)


def dodecahedron() -> Multigraph:
    return generalized_petersen(10, 2)


def mobius_kantor() -> Multigraph:
    return generalized_petersen(8, 3)


def heawood() -> Multigraph:
    # 14-cycle plus the seven chords (i, i+5) for even i
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return build_multigraph(14, edges)


def pappus() -> Multigraph:
    # 18-cycle plus nine chords
    edges = [(i, (i + 1) % 18) for i in range(18)]
    edges += [(0, 5), (1, 8), (2, 13), (3, 10), (4, 15), (6, 11), (7, 14), (9, 16), (12, 17)]
    return build_multigraph(18, edges)


def octahedron() -> Multigraph:
    # K_2,2,2: all pairs except the three antipodal ones
    anti = {(0, 3), (1, 4), (2, 5)}
    edges = [(u, v) for u, v in itertools.combinations(range(6), 2) if (u, v) not in anti]
    return build_multigraph(6, edges)


def cycle_complement(n: int) -> Multigraph:
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2)
             if (v - u) % n not in (1, n - 1)]
    return build_multigraph(n, edges)


def antiprism(k: int = 4) -> Multigraph:
    """Two k-cycles 0..k-1 and k..2k-1 with a zigzag between them."""
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + ((i + 1) % k)) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    edges += [(i, k + ((i + k - 1) % k)) for i in range(k)]
    return build_multigraph(2 * k, edges)


def prism() -> Multigraph:
    # C3 x K2: two triangles plus three rungs
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    return build_multigraph(6, edges)


def triangles_with_join() -> Multigraph:
    """Two disjoint triangles joined by a 3-edge matching (isomorphic to the
    prism; kept as a separate construction with its own edge order)."""
    edges = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5), (3, 4), (4, 5), (3, 5)]
    return build_multigraph(6, edges)


def petersen_spoke_matching(g: Multigraph | None = None) -> Matching:
    g = g or petersen()
    return matching_of(g, range(5, 10))


def spoke_contraction_transitions(k5: Multigraph | None = None) -> TransitionSystem:
    """The transition system on K5 induced by undoing the spoke contraction of
    the Petersen graph: at vertex v the outer pair {v-1, v+1} forms one
    transition and the inner pair {v-2, v+2} the other (all mod 5)."""
    k5 = k5 or complete_graph(5)
    pairs = []
    for v in range(5):
        outer = []
        inner = []
        for e in k5.incident(v):
            w = k5.other_end(e, v)
            d = (e, 0 if k5.endpoints(e)[0] == v else 1)
            if (w - v) % 5 in (1, 4):
                outer.append(d)
            else:
                inner.append(d)
        pairs.append((tuple(outer), tuple(inner)))
    return transition_system_from_pairs(k5, pairs)


def k5_coherent_triangle_transitions(k5: Multigraph | None = None) -> TransitionSystem:
    """A transition system on K5 whose split graph contains exactly one
    triangle: at each vertex of the triangle {1, 2, 3} its two triangle edges
    form one transition; vertices 0 and 4 pair edges so that no other
    triangle of K5 is transition-coherent at all three corners."""
    k5 = k5 or complete_graph(5)

    def dart(v, w):
        e = k5.edges_between(v, w)[0]
        return (e, 0 if k5.endpoints(e)[0] == v else 1)

    pairs = []
    for v in range(5):
        if v in (1, 2, 3):
            tri = [x for x in (1, 2, 3) if x != v]
            rest = [x for x in range(5) if x != v and x not in tri]
            pairs.append(((dart(v, tri[0]), dart(v, tri[1])),
                          (dart(v, rest[0]), dart(v, rest[1]))))
        else:
            others = [x for x in range(5) if x != v]
            pairs.append(((dart(v, others[0]), dart(v, others[1])),
                          (dart(v, others[2]), dart(v, others[3]))))
    return transition_system_from_pairs(k5, pairs)


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    graph: Multigraph
    metadata: dict


@dataclass(frozen=True)
class Corpus:
    name: str
    entries: tuple[CorpusEntry, ...]


def builtin_corpora() -> dict[str, Corpus]:
    cubic = Corpus("CUBIC_C4", (
        CorpusEntry("K4", complete_graph(4),
                    {"regularity": 3, "lambda_c": None, "source": "complete_graph(4)"}),
        CorpusEntry("K3,3", complete_bipartite(3, 3),
                    {"regularity": 3, "lambda_c": None, "source": "complete_bipartite(3, 3)"}),
        CorpusEntry("petersen", petersen(),
                    {"regularity": 3, "lambda_c": 5, "source": "generalized_petersen(5, 2)"}),
        CorpusEntry("heawood", heawood(),
                    {"regularity": 3, "lambda_c": 6, "source": "heawood()"}),
        CorpusEntry("mobius-kantor", mobius_kantor(),
                    {"regularity": 3, "lambda_c": 6, "source": "generalized_petersen(8, 3)"}),
        CorpusEntry("pappus", pappus(),
                    {"regularity": 3, "lambda_c": 6, "source": "pappus()"}),
        CorpusEntry("dodecahedron", dodecahedron(),
                    {"regularity": 3, "lambda_c": 5, "source": "generalized_petersen(10, 2)"}),
    ))
    fourreg = Corpus("FOURREG_4C", (
        CorpusEntry("K5", complete_graph(5),
                    {"regularity": 4, "vertex_connectivity": 4, "source": "complete_graph(5)"}),
        CorpusEntry("octahedron", octahedron(),
                    {"regularity": 4, "vertex_connectivity": 4, "source": "octahedron()"}),
        CorpusEntry("C7-complement", cycle_complement(7),
                    {"regularity": 4, "vertex_connectivity": 4, "source": "cycle_complement(7)"}),
        CorpusEntry("antiprism-4", antiprism(4),
                    {"regularity": 4, "vertex_connectivity": 4, "source": "antiprism(4)"}),
    ))
    negatives = Corpus("NEGATIVES", (
        CorpusEntry("prism", prism(),
                    {"regularity": 3, "lambda_c": 3, "source": "prism()"}),
        CorpusEntry("triangles-3join", triangles_with_join(),
                    {"regularity": 3, "lambda_c": 3, "source": "triangles_with_join()"}),
        CorpusEntry("K4", complete_graph(4),
                    {"regularity": 3, "lambda_c": None, "source": "complete_graph(4)"}),
    ))
    return {c.name: c for c in (cubic, fourreg, negatives)}


def verify_corpus_entry(entry: CorpusEntry) -> list[str]:
    """Re-derive the declared metadata; returns a list of discrepancies."""
    problems = []
    g = entry.graph
    meta = entry.metadata
    if not is_connected(g):
        problems.append("not connected")
    if "regularity" in meta and not is_k_regular(g, meta["regularity"]):
        problems.append(f"not {meta['regularity']}-regular")
    if "lambda_c" in meta:
        expected = meta["lambda_c"]
        try:
            value, _ = cyclic_edge_connectivity(g)
        except NoTwoDisjointCyclesError:
            value = None
        if value != expected:
            problems.append(f"lambda_c is {value}, declared {expected}")
    if "vertex_connectivity" in meta:
        kappa, _ = vertex_connectivity(g)
        if kappa != meta["vertex_connectivity"]:
            problems.append(f"vertex connectivity is {kappa}, declared {meta['vertex_connectivity']}")
    return problems
