import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domcycle.core import (
    ClosedTrail,
    build_multigraph,
    check_closed_trail,
    dominates,
    end_pairs_by_vertex,
    is_cycle,
    is_k_regular,
    is_perfect_matching,
    list_triangles,
    matching_of,
    simplified,
    trail_vertices,
)
from domcycle.corpora import complete_graph, petersen
from domcycle.errors import (
    InvalidTrailError,
    LoopEdgeError,
    NotAMatchingError,
    TrailNotInGraphError,
    VertexOutOfRangeError,
)


def multigraphs(max_n=10, max_m=16):
    return st.integers(2, max_n).flatmap(
        lambda n: st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1]),
            max_size=max_m,
        ).map(lambda pairs: build_multigraph(n, pairs))
    )


def test_build_k4():
    g = build_multigraph(4, list(itertools.combinations(range(4), 2)))
    assert g.n == 4 and g.m == 6
    assert is_k_regular(g, 3)


def test_build_parallel_edges():
    g = build_multigraph(2, [(0, 1), (0, 1)])
    assert g.degrees() == (2, 2)
    assert not g.is_simple()


def test_build_rejects_loop():
    with pytest.raises(LoopEdgeError):
        build_multigraph(3, [(0, 0)])


def test_build_rejects_bad_vertex():
    with pytest.raises(VertexOutOfRangeError):
        build_multigraph(3, [(0, 3)])


def test_regularity():
    assert is_k_regular(complete_graph(5), 4)
    assert not is_k_regular(complete_graph(4), 4)


def test_darts_and_incidence():
    g = build_multigraph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.darts_at(1) == ((0, 1), (1, 0))
    assert g.dart_tail((1, 0)) == 1 and g.dart_head((1, 0)) == 2
    assert g.incident(0) == (0, 2)


@given(multigraphs())
@settings(max_examples=60, deadline=None)
def test_degree_sum_is_twice_edges(g):
    assert sum(g.degrees()) == 2 * g.m


def naive_triangles(g):
    """O(n^3) oracle, counting parallel-edge combinations separately."""
    out = set()
    for a, b, c in itertools.combinations(range(g.n), 3):
        for eab in g.edges_between(a, b):
            for eac in g.edges_between(a, c):
                for ebc in g.edges_between(b, c):
                    out.add(((a, b, c), (eab, eac, ebc)))
    return out


def test_triangles_k4():
    assert len(list_triangles(complete_graph(4))) == 4


def test_triangles_petersen_none():
    assert list_triangles(petersen()) == ()


def test_triangles_two_vertices():
    assert list_triangles(build_multigraph(2, [(0, 1), (0, 1)])) == ()


@given(multigraphs())
@settings(max_examples=60, deadline=None)
def test_triangles_match_naive_oracle(g):
    got = {(t.vertices, t.edge_ids) for t in list_triangles(g)}
    assert got == naive_triangles(g)


def test_simplified_collapses_parallels():
    g = build_multigraph(3, [(0, 1), (1, 0), (1, 2)])
    s = simplified(g)
    assert s.m == 2 and s.is_simple()


def test_matching_validation():
    g = complete_graph(4)
    m = matching_of(g, [0, 5])  # (0,1) and (2,3)
    assert is_perfect_matching(g, m)
    with pytest.raises(NotAMatchingError):
        matching_of(g, [0, 1])  # (0,1) and (0,2) share vertex 0
    with pytest.raises(NotAMatchingError):
        matching_of(g, [99])


def test_closed_trail_validation():
    g = build_multigraph(3, [(0, 1), (1, 2), (0, 2)])
    tri = ClosedTrail(((0, 0), (1, 0), (2, 1)))
    check_closed_trail(g, tri)
    assert is_cycle(g, tri)
    assert trail_vertices(g, tri) == (0, 1, 2)
    with pytest.raises(InvalidTrailError):
        check_closed_trail(g, ClosedTrail(((0, 0), (0, 1))))  # repeated edge
    with pytest.raises(InvalidTrailError):
        check_closed_trail(g, ClosedTrail(((0, 0), (2, 1))))  # discontinuous
    with pytest.raises(TrailNotInGraphError):
        check_closed_trail(g, ClosedTrail(((7, 0),)))


def test_end_pairs_track_passes():
    # figure-eight trail through the shared vertex of two triangles
    g = build_multigraph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    trail = ClosedTrail(((0, 0), (1, 0), (3, 0), (4, 0), (5, 1), (2, 1)))
    check_closed_trail(g, trail)
    pairs = end_pairs_by_vertex(g, trail)
    assert len(pairs[2]) == 2
    assert len(pairs[0]) == 1
    assert not is_cycle(g, trail)


def test_dominates():
    g = petersen()
    outer = ClosedTrail(((0, 0), (1, 0), (2, 0), (3, 0), (4, 0)))
    check_closed_trail(g, outer)
    # the outer pentagon misses the inner pentagram edges entirely
    assert not dominates(g, outer, range(g.m))
    assert dominates(g, outer, range(5, 10))  # but touches every spoke
