import itertools

import pytest

from domcycle.constructions import (
    contract_matching,
    contract_triangles,
    line_graph,
    split,
)
from domcycle.core import (
    Matching,
    build_multigraph,
    is_k_regular,
    is_perfect_matching,
    list_triangles,
    matching_of,
)
from domcycle.corpora import (
    complete_graph,
    cycle_complement,
    k5_coherent_triangle_transitions,
    octahedron,
    petersen,
    petersen_spoke_matching,
    spoke_contraction_transitions,
)
from domcycle.errors import (
    NotAMatchingError,
    NotFourRegularError,
    NotSimpleError,
    OverlappingTrianglesError,
)
from domcycle.isomorphism import are_isomorphic
from domcycle.transitions import enumerate_transition_systems, validate_transition_system


def test_line_graph_petersen():
    lgr = line_graph(petersen())
    assert lgr.lg.n == 15
    assert is_k_regular(lgr.lg, 4)
    assert lgr.canonical_t is not None
    assert validate_transition_system(lgr.lg, lgr.canonical_t)


def test_line_graph_of_k4_is_octahedron():
    lgr = line_graph(complete_graph(4))
    assert are_isomorphic(lgr.lg, octahedron())[0]


def test_line_graph_of_triangle_is_triangle():
    c3 = build_multigraph(3, [(0, 1), (1, 2), (0, 2)])
    assert are_isomorphic(line_graph(c3).lg, c3)[0]


def test_line_graph_rejects_multigraph():
    with pytest.raises(NotSimpleError):
        line_graph(build_multigraph(2, [(0, 1), (0, 1)]))


def test_line_graph_degree_rule_and_partition():
    g = petersen()
    lgr = line_graph(g)
    for e, (u, v) in enumerate(g.edges):
        assert lgr.lg.degree(lgr.vertex_of_edge[e]) == g.degree(u) + g.degree(v) - 2
    # the per-source-vertex cliques partition the line graph's edges
    seen = []
    for fam in lgr.triangle_family:
        seen.extend(fam)
    assert sorted(seen) == list(range(lgr.lg.m))


def test_split_counts_and_structure():
    octa = octahedron()
    for t in itertools.islice(enumerate_transition_systems(octa), 40):
        sr = split(octa, t)
        assert sr.g.n == 12 and sr.g.m == 18
        assert is_k_regular(sr.g, 3)
        assert is_perfect_matching(sr.g, sr.matching)


def test_split_requires_four_regular():
    t = next(iter(enumerate_transition_systems(complete_graph(5))))
    with pytest.raises(NotFourRegularError):
        split(petersen(), t)


def test_split_of_k5_along_spoke_transitions_is_petersen():
    k5 = complete_graph(5)
    sr = split(k5, spoke_contraction_transitions(k5))
    assert are_isomorphic(sr.g, petersen())[0]


def test_split_contract_roundtrip_exact():
    """Contracting the new matching of a split graph restores the host,
    including labels: fibers {2v, 2v+1} collapse back to v in order."""
    for h in (complete_graph(5), octahedron(), cycle_complement(7)):
        for t in enumerate_transition_systems(h):
            sr = split(h, t)
            cm = contract_matching(sr.g, sr.matching)
            assert cm.image_graph == h
            assert cm.edge_provenance == tuple(range(h.m))


def test_split_no_triangle_through_matching_edge():
    # for a simple 4-connected host, no split-graph triangle uses a new edge
    k5 = complete_graph(5)
    for t in enumerate_transition_systems(k5):
        sr = split(k5, t)
        for tri in list_triangles(sr.g):
            assert not (set(tri.edge_ids) & sr.matching.edge_ids)


def test_contract_matching_petersen_spokes_gives_k5():
    p = petersen()
    cm = contract_matching(p, petersen_spoke_matching(p))
    assert cm.image_graph.n == 5
    assert are_isomorphic(cm.image_graph, complete_graph(5))[0]


def test_contract_matching_single_edge_of_k4():
    cm = contract_matching(complete_graph(4), matching_of(complete_graph(4), [0]))
    img = cm.image_graph
    assert img.n == 3 and img.m == 5
    # the two former endpoints now share a doubled connection to each old vertex
    assert not img.is_simple()


def test_contract_matching_empty_is_identity():
    p = petersen()
    cm = contract_matching(p, Matching(frozenset()))
    assert cm.image_graph == p


def test_contract_matching_discards_parallel_loops():
    # an edge parallel to a contracted edge becomes a loop and disappears
    g = build_multigraph(2, [(0, 1), (0, 1)])
    cm = contract_matching(g, matching_of(g, [0]))
    assert cm.image_graph.n == 1 and cm.image_graph.m == 0


def test_contract_matching_validates():
    with pytest.raises(NotAMatchingError):
        contract_matching(complete_graph(4), Matching(frozenset({0, 1})))


def test_contract_triangles_petersen_identity():
    p = petersen()
    cm = contract_triangles(p)
    assert cm.image_graph == p


def test_contract_triangles_rejects_k4():
    with pytest.raises(OverlappingTrianglesError):
        contract_triangles(complete_graph(4))


def test_contract_triangles_on_coherent_split():
    k5 = complete_graph(5)
    sr = split(k5, k5_coherent_triangle_transitions(k5))
    assert len(list_triangles(sr.g)) == 1
    cm = contract_triangles(sr.g)
    assert cm.image_graph.n == 8
    assert is_k_regular(cm.image_graph, 3)


def test_contract_triangles_prism():
    from domcycle.corpora import prism

    cm = contract_triangles(prism())
    # both triangles collapse; the three rungs survive as a triple edge
    assert cm.image_graph.n == 2 and cm.image_graph.m == 3


def test_matching_contraction_transitions_reverse_the_split():
    from domcycle.constructions import matching_contraction_transitions
    from domcycle.corpora import heawood, mobius_kantor, petersen
    from domcycle.search import enumerate_perfect_matchings
    from domcycle.transitions import validate_transition_system

    for g in (petersen(), heawood(), mobius_kantor()):
        for m in enumerate_perfect_matchings(g):
            cm, induced = matching_contraction_transitions(g, m)
            assert validate_transition_system(cm.image_graph, induced)
            back = split(cm.image_graph, induced)
            assert are_isomorphic(back.g, g)[0]
