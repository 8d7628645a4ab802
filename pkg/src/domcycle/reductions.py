"""Constructive conversions between trails, split-graph cycles, line-graph
cycles and contracted-graph cycles, plus the falsifiable cut-structure
audits and the two end-to-end pipelines.

The two directions of the trail/split-cycle correspondence are implemented
against independently coded searches, so they double as cross-oracles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .connectivity import (
    _component_sets,
    _subset_has_cycle,
    cyclic_edge_connectivity,
    edge_connectivity,
    has_two_disjoint_cycles,
    vertex_connectivity,
)
from .constructions import (
    ContractionMap,
    LineGraphResult,
    SplitResult,
    contract_triangles,
    line_graph,
    split,
)
from .core import (
    ClosedTrail,
    Matching,
    Multigraph,
    build_multigraph,
    dominates,
    flip,
    is_cycle,
    is_k_regular,
    is_perfect_matching,
    list_triangles,
    matching_of,
    require_cycle,
    trail_vertices,
)
from .errors import (
    InvalidTTrailError,
    NoFourValentVertexError,
    NotDominatingError,
    NotDominatingInImageError,
    NotHamiltonianError,
    PreconditionViolatedError,
)
from .isomorphism import are_isomorphic
from .search import find_dominating_cycle, find_t_trail
from .transitions import TTrail, TransitionSystem, four_valent_vertices, is_t_trail, make_t_trail


def trail_from_split_cycle(h: Multigraph, t: TransitionSystem, sr: SplitResult,
                           c: ClosedTrail) -> TTrail:
    """Contract a cycle of the split graph that dominates the new matching
    back to a trail of the host: drop the matching darts and pull every other
    dart through the (identity-id) dart correspondence."""
    require_cycle(sr.g, c)
    if not dominates(sr.g, c, sr.matching.edge_ids):
        raise NotDominatingError("cycle misses both ends of a matching edge")
    kept = tuple(d for d in c.darts if d[0] < h.m)
    trail = ClosedTrail(kept)
    return make_t_trail(h, t, trail)


def split_cycle_from_trail(h: Multigraph, t: TransitionSystem, sr: SplitResult,
                           tt: TTrail) -> ClosedTrail:
    """Expand a trail of the host to a cycle of the split graph dominating the
    new matching: route through the matching edge exactly where consecutive
    trail ends at a vertex sit in different transitions."""
    check = is_t_trail(h, t, tt.trail)
    if not check.ok:
        raise InvalidTTrailError(f"vertex {check.vertex}: {check.reason}")
    side: dict[tuple[int, int], int] = {}
    for v in h.vertices:
        t0, t1 = t.per_vertex[v]
        for d in t0:
            side[d] = 0
        for d in t1:
            side[d] = 1
    darts = tt.trail.darts
    k = len(darts)
    out: list[tuple[int, int]] = []
    for i in range(k):
        out.append(darts[i])  # image dart has the same id
        in_end = flip(darts[i])
        out_end = darts[(i + 1) % k]
        v = h.dart_tail(out_end)
        s_in, s_out = side[in_end], side[out_end]
        if s_in != s_out:
            out.append((sr.matching_edge[v], s_in))
    cycle = ClosedTrail(tuple(out))
    require_cycle(sr.g, cycle)
    if not dominates(sr.g, cycle, sr.matching.edge_ids):
        raise AssertionError("expanded cycle fails to dominate the matching")
    return cycle


def reduce_t_trail_step(lgr: LineGraphResult, c: TTrail) -> TTrail:
    """One shortening step on a line-graph trail: at the lowest 4-valent
    vertex, replace its two trail edges inside one source-vertex triangle by
    the opposite edge of that triangle.  The 4-valent count drops by one."""
    lg = lgr.lg
    t = lgr.canonical_t
    check = is_t_trail(lg, t, c.trail)
    if not check.ok:
        raise InvalidTTrailError(f"vertex {check.vertex}: {check.reason}")
    four = four_valent_vertices(c)
    if not four:
        raise NoFourValentVertexError("trail is already a Hamiltonian cycle")
    w = four[0]
    # w is an edge of the source graph; use its lower endpoint's triangle
    x = min(lgr.source.endpoints(w))
    tri_edges = set(lgr.triangle_family[x])

    darts = list(c.trail.darts)
    k = len(darts)
    pos = None
    for i in range(k):
        d_in = darts[i]
        d_out = darts[(i + 1) % k]
        if lg.dart_head(d_in) == w and d_in[0] in tri_edges and d_out[0] in tri_edges:
            pos = i
            break
    if pos is None:
        raise AssertionError("4-valent vertex has no pass inside its triangle")
    # rotate the pass to the front, then splice in the opposite triangle edge
    rot = darts[pos:] + darts[:pos]
    d_in, d_out = rot[0], rot[1]
    p = lg.dart_tail(d_in)
    q = lg.dart_head(d_out)
    remaining = tri_edges - {d_in[0], d_out[0]}
    if len(remaining) != 1:
        raise AssertionError("triangle must contribute exactly two trail edges at the pass")
    pq = remaining.pop()
    if pq in c.trail.edge_ids():
        raise AssertionError("opposite triangle edge already on the trail")
    if set(lg.endpoints(pq)) != {p, q}:
        raise AssertionError("opposite triangle edge does not join the pass neighbors")
    s = 0 if lg.endpoints(pq)[0] == p else 1
    new_darts = ((pq, s),) + tuple(rot[2:])
    return make_t_trail(lg, t, ClosedTrail(new_darts))


def line_ham_to_dominating_cycle(g: Multigraph, lgr: LineGraphResult,
                                 hc: ClosedTrail) -> ClosedTrail:
    """Classical direction: a Hamiltonian cycle of the line graph of a cubic
    graph yields a dominating cycle of the source.  Consecutive line-graph
    vertices share a source vertex; walking those shared vertices (skipping
    stalls) traces a closed trail, which in a cubic graph is a cycle."""
    if not is_k_regular(g, 3):
        raise PreconditionViolatedError("source graph must be cubic")
    if not is_cycle(lgr.lg, hc) or len(hc.darts) != lgr.lg.n:
        raise NotHamiltonianError("trail is not a Hamiltonian cycle of the line graph")
    seq = trail_vertices(lgr.lg, hc)  # source edge ids, cyclic
    k = len(seq)
    shared = []
    for i in range(k):
        e1, e2 = seq[i], seq[(i + 1) % k]
        common = set(g.endpoints(e1)) & set(g.endpoints(e2))
        if len(common) != 1:
            raise AssertionError("adjacent line-graph vertices must share one source vertex")
        shared.append(common.pop())
    darts: list[tuple[int, int]] = []
    for i in range(k):
        prev_v = shared[i - 1]
        v = shared[i]
        if prev_v == v:
            continue  # the connecting edge stalls at this vertex; it stays dominated
        e = seq[i]
        s = 0 if g.endpoints(e)[0] == prev_v else 1
        darts.append((e, s))
    cycle = ClosedTrail(tuple(darts))
    require_cycle(g, cycle)
    if not dominates(g, cycle, range(g.m)):
        raise AssertionError("mapped cycle fails to dominate the source graph")
    return cycle


def lift_dominating_cycle(sr: SplitResult, cm: ContractionMap,
                          c_prime: ClosedTrail) -> ClosedTrail:
    """Lift a dominating cycle of the triangle contraction back to the split
    graph: through every contracted vertex on the cycle, insert the length-2
    path of its triangle, so all three corners land on the lifted cycle."""
    image = cm.image_graph
    require_cycle(image, c_prime)
    if not dominates(image, c_prime, range(image.m)):
        raise NotDominatingInImageError("cycle does not dominate the contracted graph")
    g = sr.g
    darts = c_prime.darts
    k = len(darts)
    out: list[tuple[int, int]] = []
    for i in range(k):
        e_img, s = darts[i]
        e_src = cm.edge_provenance[e_img]
        out.append((e_src, s))
        # stitch across the image vertex between this dart and the next
        arrive = g.dart_head((e_src, s))
        e2_img, s2 = darts[(i + 1) % k]
        depart = g.dart_tail((cm.edge_provenance[e2_img], s2))
        if arrive == depart:
            continue
        fiber = {v for v in g.vertices if cm.vertex_map[v] == cm.vertex_map[arrive]}
        if depart not in fiber or len(fiber) != 3:
            raise AssertionError("cycle darts disagree across a contracted vertex")
        middle = (fiber - {arrive, depart}).pop()
        e_a = g.edges_between(arrive, middle)[0]
        e_b = g.edges_between(middle, depart)[0]
        out.append((e_a, 0 if g.endpoints(e_a)[0] == arrive else 1))
        out.append((e_b, 0 if g.endpoints(e_b)[0] == middle else 1))
    lifted = ClosedTrail(tuple(out))
    require_cycle(g, lifted)
    if not dominates(g, lifted, sr.matching.edge_ids):
        raise AssertionError("lifted cycle fails to dominate the split matching")
    return lifted


def matching_cut_parity(g: Multigraph, e0, m: Matching) -> bool:
    """For a matching cut splitting a cubic graph into two components with
    every cut edge crossing, |cut ∩ M| + |cut| is even for every perfect
    matching M.  Returns the parity check; the suite asserts it always holds.
    """
    if not is_k_regular(g, 3):
        raise PreconditionViolatedError("parity check applies to cubic graphs")
    e0 = frozenset(e0)
    try:
        matching_of(g, e0)
    except Exception as exc:
        raise PreconditionViolatedError(f"cut is not a matching: {exc}") from exc
    comps = _component_sets(g, removed_edges=e0)
    if len(comps) != 2:
        raise PreconditionViolatedError(f"removal leaves {len(comps)} components, need 2")
    sides = comps
    for e in e0:
        u, v = g.endpoints(e)
        if (u in sides[0]) == (v in sides[0]):
            raise PreconditionViolatedError("cut edge does not cross the two components")
    if not is_perfect_matching(g, m):
        raise PreconditionViolatedError("matching is not perfect")
    return (len(e0 & m.edge_ids) + len(e0)) % 2 == 0


@dataclass(frozen=True)
class SplitCutAudit:
    ok: bool
    edge_connectivity: int
    cyclic_3_cut_count: int
    violations: tuple[str, ...]


def audit_split_graph_cuts(h: Multigraph, t: TransitionSystem) -> SplitCutAudit:
    """Falsifiable check on the split graph of a 4-connected host: it must be
    3-edge connected, and every cyclic 3-edge cut must isolate a triangle.
    Exhaustive over all 3-edge subsets."""
    _require_four_connected(h)
    sr = split(h, t)
    g = sr.g
    violations: list[str] = []
    ec, _ = edge_connectivity(g)
    if ec < 3:
        violations.append(f"edge connectivity {ec} < 3")
    cut_count = 0
    triangle_vertex_sets = [set(tri.vertices) for tri in list_triangles(g)]
    for cut in itertools.combinations(range(g.m), 3):
        comps = _component_sets(g, removed_edges=frozenset(cut))
        if len(comps) < 2:
            continue
        cyclic_sides = [comp for comp in comps if _subset_has_cycle(g, comp)]
        if len(cyclic_sides) < 2:
            continue
        cut_count += 1
        if not any(comp in triangle_vertex_sets for comp in comps if len(comp) == 3):
            violations.append(f"cyclic 3-cut {cut} isolates no triangle")
    return SplitCutAudit(not violations, ec, cut_count, tuple(violations))


@dataclass(frozen=True)
class ContractionAudit:
    ok: bool
    outcome: str  # "K4" | "K3,3" | "lambda_c" | "violation"
    lambda_c: int | None
    violations: tuple[str, ...]


def audit_triangle_contraction(h: Multigraph, t: TransitionSystem) -> ContractionAudit:
    """Falsifiable check: contracting the triangles of the split graph of a
    4-connected host leaves K4, K3,3, or a graph of cyclic edge connectivity
    at least 4."""
    _require_four_connected(h)
    sr = split(h, t)
    cm = contract_triangles(sr.g)
    hp = cm.image_graph
    two, _ = has_two_disjoint_cycles(hp)
    if not two:
        k4 = build_multigraph(4, list(itertools.combinations(range(4), 2)))
        k33 = build_multigraph(6, [(a, b) for a in range(3) for b in range(3, 6)])
        if are_isomorphic(hp, k4)[0]:
            return ContractionAudit(True, "K4", None, ())
        if are_isomorphic(hp, k33)[0]:
            return ContractionAudit(True, "K3,3", None, ())
        return ContractionAudit(False, "violation", None,
                                ("no two disjoint cycles and not K4 or K3,3",))
    value, _cert = cyclic_edge_connectivity(hp)
    if value >= 4:
        return ContractionAudit(True, "lambda_c", value, ())
    return ContractionAudit(False, "violation", value,
                            (f"cyclic edge connectivity {value} < 4",))


def _require_four_connected(h: Multigraph) -> None:
    if not is_k_regular(h, 4):
        raise PreconditionViolatedError("host must be 4-regular")
    kappa, _ = vertex_connectivity(h)
    if kappa < 4:
        raise PreconditionViolatedError(f"host must be 4-connected, got {kappa}")


# ---------------------------------------------------------------------------
# Pipelines


@dataclass(frozen=True)
class PipelineStage:
    name: str
    detail: dict


@dataclass(frozen=True)
class PipelineTrace:
    stages: tuple[PipelineStage, ...]
    reduction_steps: tuple[int, ...] = ()

    def as_dict(self) -> dict:
        return {
            "stages": [{"name": st.name, "detail": st.detail} for st in self.stages],
            "reduction_steps": list(self.reduction_steps),
        }


def dominating_cycle_via_line_graph(g: Multigraph) -> tuple[ClosedTrail | None, PipelineTrace]:
    """Full pipeline: line graph with its triangle transition system, trail
    search, iterated shortening to a Hamiltonian cycle, then the classical map
    back to a dominating cycle of the source."""
    stages = []
    lgr = line_graph(g)
    if lgr.canonical_t is None:
        raise PreconditionViolatedError("source graph must be cubic")
    stages.append(PipelineStage("line-graph", {"n": lgr.lg.n, "m": lgr.lg.m}))
    out = find_t_trail(lgr.lg, lgr.canonical_t)
    stages.append(PipelineStage("trail-search", {"found": out.found, "nodes": out.nodes_expanded}))
    if not out.found:
        return None, PipelineTrace(tuple(stages))
    tt = make_t_trail(lgr.lg, lgr.canonical_t, out.witness)
    counts = [len(four_valent_vertices(tt))]
    while counts[-1] > 0:
        tt = reduce_t_trail_step(lgr, tt)
        counts.append(len(four_valent_vertices(tt)))
    stages.append(PipelineStage("reduce-to-hamiltonian", {"four_valent_counts": list(counts)}))
    dc = line_ham_to_dominating_cycle(g, lgr, tt.trail)
    stages.append(PipelineStage("map-to-dominating-cycle", {"length": len(dc.darts)}))
    return dc, PipelineTrace(tuple(stages), tuple(counts))


def t_trail_via_triangle_contraction(h: Multigraph, t: TransitionSystem
                                     ) -> tuple[TTrail | None, PipelineTrace]:
    """Full pipeline: split the host, audit the cut structure, contract the
    triangles, find a dominating cycle there, lift it, and contract it back
    to a trail of the host."""
    stages = []
    sr = split(h, t)
    stages.append(PipelineStage("split", {"n": sr.g.n, "m": sr.g.m}))
    cut_audit = audit_split_graph_cuts(h, t)
    stages.append(PipelineStage("cut-audit", {
        "ok": cut_audit.ok,
        "edge_connectivity": cut_audit.edge_connectivity,
        "cyclic_3_cuts": cut_audit.cyclic_3_cut_count,
    }))
    contraction_audit = audit_triangle_contraction(h, t)
    stages.append(PipelineStage("contraction-audit", {
        "ok": contraction_audit.ok,
        "outcome": contraction_audit.outcome,
        "lambda_c": contraction_audit.lambda_c,
    }))
    cm = contract_triangles(sr.g)
    stages.append(PipelineStage("contract-triangles", {"n": cm.image_graph.n}))
    out = find_dominating_cycle(cm.image_graph)
    stages.append(PipelineStage("dominating-cycle", {"found": out.found, "nodes": out.nodes_expanded}))
    if not cut_audit.ok or not contraction_audit.ok or not out.found:
        return None, PipelineTrace(tuple(stages))
    lifted = lift_dominating_cycle(sr, cm, out.witness)
    stages.append(PipelineStage("lift", {"length": len(lifted.darts)}))
    tt = trail_from_split_cycle(h, t, sr, lifted)
    stages.append(PipelineStage("contract-to-trail", {"length": len(tt.trail.darts)}))
    return tt, PipelineTrace(tuple(stages))
