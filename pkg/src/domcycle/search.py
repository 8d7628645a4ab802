"""Exact existence searches: Hamiltonian cycles, dominating cycles, cycles
dominating a matching, and trails that respect a transition system.

All searches are deterministic backtracking: trails grow from the lowest-id
anchor vertex and darts are tried in ascending id order, so the first witness
is reproducible.  Pruning only ever uses necessary conditions (reachability
through unused parts of the graph), which keeps "not found" a certificate of
a complete traversal.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator

from .core import (
    ClosedTrail,
    Matching,
    Multigraph,
    flip,
    is_k_regular,
    matching_of,
)
from .errors import InvalidTransitionSystemError, NotFourRegularError
from .transitions import TransitionSystem, validate_transition_system


@dataclass(frozen=True)
class SearchOutcome:
    found: bool
    witness: ClosedTrail | None
    nodes_expanded: int
    elapsed: float


def find_hamiltonian_cycle(g: Multigraph) -> SearchOutcome:
    """Spanning cycle by exhaustive backtracking from vertex 0."""
    t0 = time.perf_counter()
    nodes = 0
    n = g.n
    if n < 2:
        return SearchOutcome(False, None, 0, time.perf_counter() - t0)
    on_path = [False] * n
    on_path[0] = True
    path: list[tuple[int, int]] = []
    visited_count = 1

    def extend(u: int):
        nonlocal nodes, visited_count
        nodes += 1
        if visited_count == n:
            for e in g.incident(u):
                if g.other_end(e, u) == 0 and e != path[0][0]:
                    closing = (e, 0 if g.endpoints(e)[0] == u else 1)
                    return ClosedTrail(tuple(path) + (closing,))
            return None
        # every unvisited vertex must stay reachable from u through unvisited
        # vertices, and the anchor must stay adjacent to that region
        reach = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for e in g.incident(x):
                w = g.other_end(e, x)
                if w not in reach and not on_path[w]:
                    reach.add(w)
                    stack.append(w)
        for v in range(n):
            if not on_path[v] and v not in reach:
                return None
        if not any(g.other_end(e, 0) in reach for e in g.incident(0)):
            return None
        for e in g.incident(u):
            w = g.other_end(e, u)
            if w == 0 or on_path[w]:
                continue
            on_path[w] = True
            visited_count += 1
            path.append((e, 0 if g.endpoints(e)[0] == u else 1))
            result = extend(w)
            if result is not None:
                return result
            path.pop()
            visited_count -= 1
            on_path[w] = False
        return None

    witness = extend(0)
    return SearchOutcome(witness is not None, witness, nodes, time.perf_counter() - t0)


def _cycle_dominating_search(g: Multigraph, target_edges: tuple[int, ...]) -> tuple[ClosedTrail | None, int]:
    """First cycle (anchored enumeration order) whose vertex set touches every
    target edge.  Exhaustive: every cycle has a unique minimum vertex, and
    anchors are tried in ascending order."""
    nodes = 0
    n = g.n

    for s in range(n):
        # once some target edge has both endpoints below the anchor, no cycle
        # through vertices >= s can dominate it, now or for any later anchor
        if any(max(g.endpoints(e)) < s for e in target_edges):
            break
        on_path = [False] * n
        on_path[s] = True
        path: list[tuple[int, int]] = []
        undominated = set()
        dom_count = {e: 0 for e in target_edges}
        for e in target_edges:
            u, v = g.endpoints(e)
            hits = (1 if u == s else 0) + (1 if v == s else 0)
            dom_count[e] = hits
            if hits == 0:
                undominated.add(e)

        def cover(v: int) -> list[int]:
            newly = []
            for e in g.incident(v):
                if e in dom_count:
                    dom_count[e] += 1
                    if dom_count[e] == 1:
                        undominated.discard(e)
                        newly.append(e)
            return newly

        def uncover(v: int, newly: list[int]) -> None:
            for e in g.incident(v):
                if e in dom_count:
                    dom_count[e] -= 1
            undominated.update(newly)

        def extend(u: int):
            nonlocal nodes
            nodes += 1
            if not undominated:
                for e in g.incident(u):
                    if g.other_end(e, u) == s and path and e > path[0][0]:
                        closing = (e, 0 if g.endpoints(e)[0] == u else 1)
                        return ClosedTrail(tuple(path) + (closing,))
            # reachability prune: future vertices live above s and off the path
            blocked = {v for v in range(n) if on_path[v] and v != u} | set(range(s))
            reach = {u}
            stack = [u]
            while stack:
                x = stack.pop()
                for e in g.incident(x):
                    w = g.other_end(e, x)
                    if w not in reach and w not in blocked and w != s:
                        reach.add(w)
                        stack.append(w)
            for e in undominated:
                a, b = g.endpoints(e)
                if a not in reach and b not in reach:
                    return None
            if path:
                first_edge = path[0][0]
                if not any(
                    e != first_edge and e > first_edge and g.other_end(e, s) in reach
                    for e in g.incident(s)
                ):
                    return None
            for e in g.incident(u):
                w = g.other_end(e, u)
                if w <= s or on_path[w]:
                    continue
                on_path[w] = True
                newly = cover(w)
                path.append((e, 0 if g.endpoints(e)[0] == u else 1))
                result = extend(w)
                if result is not None:
                    return result
                path.pop()
                uncover(w, newly)
                on_path[w] = False
            return None

        witness = extend(s)
        if witness is not None:
            return witness, nodes
    return None, nodes


def find_dominating_cycle(g: Multigraph) -> SearchOutcome:
    """A cycle containing at least one endvertex of every edge, if one exists."""
    t0 = time.perf_counter()
    witness, nodes = _cycle_dominating_search(g, tuple(range(g.m)))
    return SearchOutcome(witness is not None, witness, nodes, time.perf_counter() - t0)


def find_cycle_dominating_matching(g: Multigraph, m: Matching) -> SearchOutcome:
    """A cycle touching every edge of the matching, if one exists."""
    matching_of(g, m.edge_ids)  # raises NotAMatchingError when invalid
    t0 = time.perf_counter()
    witness, nodes = _cycle_dominating_search(g, m.sorted_ids())
    return SearchOutcome(witness is not None, witness, nodes, time.perf_counter() - t0)


def find_t_trail(h: Multigraph, t: TransitionSystem) -> SearchOutcome:
    """Spanning closed trail following the transition rules, searched directly
    on the 4-regular host over dart sequences (not via the split graph)."""
    if not is_k_regular(h, 4):
        raise NotFourRegularError("trail search needs a 4-regular host")
    if not validate_transition_system(h, t):
        raise InvalidTransitionSystemError("system does not partition the darts")
    t0 = time.perf_counter()
    nodes = 0
    n = h.n
    anchor = 0
    if n == 0:
        return SearchOutcome(False, None, 0, time.perf_counter() - t0)

    transitions = [set(t.per_vertex[v]) for v in range(n)]
    # partner[v][dart] = the dart paired with it at v
    partner: list[dict] = [dict() for _ in range(n)]
    for v in range(n):
        for pair in t.per_vertex[v]:
            a, b = pair
            partner[v][a] = b
            partner[v][b] = a

    used = [False] * h.m
    visited = [False] * n
    visited[anchor] = True
    visit_count = 1
    first_pair: list[tuple | None] = [None] * n  # completed pass at each vertex
    anchor_middle: list[tuple] = []
    path: list[tuple[int, int]] = []
    avail_deg = [h.degree(v) for v in range(n)]

    def norm(a, b):
        return (a, b) if a <= b else (b, a)

    def passable(w: int) -> bool:
        """Could the trail still walk through w one more time?"""
        if w == anchor:
            return not anchor_middle
        if not visited[w]:
            return True
        fp = first_pair[w]
        return fp is not None and fp in transitions[w]

    def reach_ok(u: int) -> bool:
        # every unvisited vertex (and the anchor) must stay reachable from u
        # along unused edges, walking only through still-passable vertices
        for v in range(n):
            if not visited[v] and avail_deg[v] < 2:
                return False
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for e in h.incident(x):
                if used[e]:
                    continue
                w = h.other_end(e, x)
                if w in seen:
                    continue
                seen.add(w)
                if passable(w):
                    stack.append(w)
        if anchor not in seen:
            return False
        return all(visited[v] or v in seen for v in range(n))

    def advance(u: int, in_end: tuple[int, int]):
        """Arrived at u via the edge end in_end (a dart anchored at u)."""
        nonlocal nodes, visit_count
        nodes += 1
        if u == anchor and visit_count == n:
            closing = norm(in_end, path[0])
            if not anchor_middle:
                return ClosedTrail(tuple(path))
            if closing in transitions[anchor] and anchor_middle[0] in transitions[anchor]:
                return ClosedTrail(tuple(path))
        if u == anchor:
            # continue through the anchor: at most one middle pass, and it
            # must already sit inside a transition (the close will need it)
            if anchor_middle:
                return None
            if not reach_ok(u):
                return None
            for out in h.darts_at(u):
                if used[out[0]] or out == in_end:
                    continue
                pair = norm(in_end, out)
                if pair not in transitions[u]:
                    continue
                anchor_middle.append(pair)
                result = _move(out)
                if result is not None:
                    return result
                anchor_middle.pop()
            return None
        if first_pair[u] is not None:
            # second pass: the first pair must be a transition, the exit is forced
            if first_pair[u] not in transitions[u]:
                return None
            out = partner[u][in_end]
            if used[out[0]]:
                return None
            if not reach_ok(u):
                return None
            return _move(out)
        if not reach_ok(u):
            return None
        for out in h.darts_at(u):
            if used[out[0]] or out == in_end:
                continue
            first_pair[u] = norm(in_end, out)
            result = _move(out)
            if result is not None:
                return result
            first_pair[u] = None
        return None

    def _move(out: tuple[int, int]):
        nonlocal visit_count
        e = out[0]
        u, w2 = h.endpoints(e)
        used[e] = True
        avail_deg[u] -= 1
        avail_deg[w2] -= 1
        path.append(out)
        w = h.dart_head(out)
        was_new = not visited[w]
        if was_new:
            visited[w] = True
            visit_count += 1
        result = advance(w, flip(out))
        if was_new:
            visited[w] = False
            visit_count -= 1
        path.pop()
        used[e] = False
        avail_deg[u] += 1
        avail_deg[w2] += 1
        return result

    witness = None
    for start in h.darts_at(anchor):
        witness = _move(start)
        if witness is not None:
            break
    return SearchOutcome(witness is not None, witness, nodes, time.perf_counter() - t0)


def enumerate_perfect_matchings(g: Multigraph) -> Iterator[Matching]:
    """All perfect matchings by backtracking on the lowest uncovered vertex."""
    if g.n % 2 == 1:
        return
    covered = [False] * g.n
    chosen: list[int] = []

    def extend(lowest: int):
        while lowest < g.n and covered[lowest]:
            lowest += 1
        if lowest == g.n:
            yield matching_of(g, tuple(chosen))
            return
        for e in g.incident(lowest):
            w = g.other_end(e, lowest)
            if covered[w]:
                continue
            covered[lowest] = covered[w] = True
            chosen.append(e)
            yield from extend(lowest + 1)
            chosen.pop()
            covered[lowest] = covered[w] = False

    yield from extend(0)
