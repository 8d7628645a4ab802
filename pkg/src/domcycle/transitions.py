"""Transition systems on 4-regular multigraphs and trail validation.

A transition system pairs the four darts at each vertex into two
transitions.  The compact on-disk form is one pairing code per vertex:
with the darts at v sorted ascending as d0 < d1 < d2 < d3, code 0 pairs
d0 with d1, code 1 pairs d0 with d2, code 2 pairs d0 with d3 (the other
two darts form the second transition).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .core import ClosedTrail, Dart, Multigraph, check_closed_trail, end_pairs_by_vertex, is_k_regular
from .errors import (
    InvalidTTrailError,
    InvalidTransitionSystemError,
    NotFourRegularError,
    TooLargeError,
    TrailNotInGraphError,
)

ENUMERATION_MAX_N = 12

Transition = tuple[Dart, Dart]  # sorted pair
VertexPairing = tuple[Transition, Transition]  # sorted by first dart


def _normalize_pairing(a: tuple[Dart, Dart], b: tuple[Dart, Dart]) -> VertexPairing:
    ta = tuple(sorted(a))
    tb = tuple(sorted(b))
    return (ta, tb) if ta <= tb else (tb, ta)


@dataclass(frozen=True)
class TransitionSystem:
    """Per-vertex pairing of darts; index v holds the two transitions at v."""

    per_vertex: tuple[VertexPairing, ...]

    @property
    def n(self) -> int:
        return len(self.per_vertex)

    def transitions_at(self, v: int) -> VertexPairing:
        return self.per_vertex[v]


def pairing_from_code(darts: tuple[Dart, ...], code: int) -> VertexPairing:
    d0, d1, d2, d3 = sorted(darts)
    if code == 0:
        return _normalize_pairing((d0, d1), (d2, d3))
    if code == 1:
        return _normalize_pairing((d0, d2), (d1, d3))
    if code == 2:
        return _normalize_pairing((d0, d3), (d1, d2))
    raise InvalidTransitionSystemError(f"pairing code must be 0, 1 or 2, got {code}")


def transition_system_from_codes(h: Multigraph, codes) -> TransitionSystem:
    if not is_k_regular(h, 4):
        raise NotFourRegularError("transition systems live on 4-regular graphs")
    codes = tuple(codes)
    if len(codes) != h.n:
        raise InvalidTransitionSystemError(f"need {h.n} codes, got {len(codes)}")
    return TransitionSystem(tuple(pairing_from_code(h.darts_at(v), codes[v]) for v in h.vertices))


def transition_codes(h: Multigraph, t: TransitionSystem) -> tuple[int, ...]:
    """Inverse of transition_system_from_codes for valid systems."""
    if not validate_transition_system(h, t):
        raise InvalidTransitionSystemError("system does not partition the darts")
    codes = []
    for v in h.vertices:
        darts = sorted(h.darts_at(v))
        for code in (0, 1, 2):
            if pairing_from_code(tuple(darts), code) == t.per_vertex[v]:
                codes.append(code)
                break
    return tuple(codes)


def transition_system_from_pairs(h: Multigraph, pairs_by_vertex) -> TransitionSystem:
    """Build from explicit dart pairs, one ((a, b), (c, d)) entry per vertex."""
    per_vertex = tuple(_normalize_pairing(tuple(p[0]), tuple(p[1])) for p in pairs_by_vertex)
    return TransitionSystem(per_vertex)


def validate_transition_system(h: Multigraph, t: TransitionSystem) -> bool:
    """True iff every vertex's pairing partitions its four darts."""
    if not is_k_regular(h, 4):
        raise NotFourRegularError("transition systems live on 4-regular graphs")
    if t.n != h.n:
        return False
    for v in h.vertices:
        expected = set(h.darts_at(v))
        ta, tb = t.per_vertex[v]
        seen = list(ta) + list(tb)
        if len(seen) != 4 or set(seen) != expected or len(set(seen)) != 4:
            return False
    return True


def enumerate_transition_systems(h: Multigraph) -> Iterator[TransitionSystem]:
    """All 3^n systems, in lexicographic order of their code vectors."""
    if not is_k_regular(h, 4):
        raise NotFourRegularError("transition systems live on 4-regular graphs")
    if h.n > ENUMERATION_MAX_N:
        raise TooLargeError(f"3^n enumeration capped at n <= {ENUMERATION_MAX_N}")
    dart_lists = [h.darts_at(v) for v in h.vertices]
    for codes in itertools.product((0, 1, 2), repeat=h.n):
        yield TransitionSystem(tuple(
            pairing_from_code(dart_lists[v], codes[v]) for v in h.vertices
        ))


@dataclass(frozen=True)
class TTrailCheck:
    ok: bool
    vertex: int | None = None
    reason: str | None = None


def is_t_trail(h: Multigraph, t: TransitionSystem, c: ClosedTrail) -> TTrailCheck:
    """Check the spanning closed trail c against the system t.

    Rules: c visits every vertex; each vertex meets 2 or 4 trail edges; where
    it meets 4, the two passes use exactly the two transitions of the vertex.
    The first violating vertex (lowest id) is reported on failure.
    """
    for e, s in c.darts:
        if not (0 <= e < h.m) or s not in (0, 1):
            raise TrailNotInGraphError(f"dart ({e}, {s}) not in graph")
    check_closed_trail(h, c)
    if not validate_transition_system(h, t):
        raise InvalidTransitionSystemError("system does not partition the darts")
    pairs = end_pairs_by_vertex(h, c)
    for v in h.vertices:
        visits = pairs.get(v)
        if visits is None:
            return TTrailCheck(False, v, "not spanning: vertex missed")
        if len(visits) == 1:
            continue
        if len(visits) > 2:
            return TTrailCheck(False, v, "more than four trail edges at vertex")
        allowed = set(t.per_vertex[v])
        if set(visits) != allowed:
            return TTrailCheck(False, v, "pass does not follow the two transitions")
    return TTrailCheck(True)


@dataclass(frozen=True)
class TTrail:
    host: Multigraph
    system: TransitionSystem
    trail: ClosedTrail


def make_t_trail(h: Multigraph, t: TransitionSystem, c: ClosedTrail) -> TTrail:
    check = is_t_trail(h, t, c)
    if not check.ok:
        raise InvalidTTrailError(f"vertex {check.vertex}: {check.reason}")
    return TTrail(h, t, c)


def four_valent_vertices(tt: TTrail) -> tuple[int, ...]:
    pairs = end_pairs_by_vertex(tt.host, tt.trail)
    return tuple(v for v in tt.host.vertices if len(pairs.get(v, ())) == 2)
