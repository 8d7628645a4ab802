"""Exact multigraph isomorphism at desk scale (n <= 16).

Color refinement narrows the candidate classes, then a backtracking search
matches vertices while preserving adjacency multiplicities.
"""

from __future__ import annotations

from .core import Multigraph
from .errors import TooLargeError

ISO_MAX_N = 16


def _multiplicity_matrix(g: Multigraph) -> dict[tuple[int, int], int]:
    mult: dict[tuple[int, int], int] = {}
    for u, v in g.edges:
        key = (min(u, v), max(u, v))
        mult[key] = mult.get(key, 0) + 1
    return mult


def _refine_colors(a: Multigraph, b: Multigraph) -> tuple[list[int], list[int]] | None:
    """Joint color refinement; None when the color histograms diverge."""
    mult_a = _multiplicity_matrix(a)
    mult_b = _multiplicity_matrix(b)

    def neighbors(g, mult, v):
        out = []
        for e in g.incident(v):
            out.append(g.other_end(e, v))
        return out

    col_a = [a.degree(v) for v in a.vertices]
    col_b = [b.degree(v) for v in b.vertices]
    for _ in range(a.n + 1):
        sig_a = []
        for v in a.vertices:
            nb = sorted(col_a[w] for w in neighbors(a, mult_a, v))
            sig_a.append((col_a[v], tuple(nb)))
        sig_b = []
        for v in b.vertices:
            nb = sorted(col_b[w] for w in neighbors(b, mult_b, v))
            sig_b.append((col_b[v], tuple(nb)))
        palette = {sig: i for i, sig in enumerate(sorted(set(sig_a) | set(sig_b)))}
        new_a = [palette[s] for s in sig_a]
        new_b = [palette[s] for s in sig_b]
        if sorted(new_a) != sorted(new_b):
            return None
        if new_a == col_a and new_b == col_b:
            break
        col_a, col_b = new_a, new_b
    return col_a, col_b


def are_isomorphic(a: Multigraph, b: Multigraph) -> tuple[bool, tuple[int, ...] | None]:
    """Exact answer with a vertex mapping a -> b when isomorphic."""
    if a.n > ISO_MAX_N or b.n > ISO_MAX_N:
        raise TooLargeError(f"isomorphism check capped at n <= {ISO_MAX_N}")
    if a.n != b.n or a.m != b.m:
        return False, None
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False, None
    refined = _refine_colors(a, b)
    if refined is None:
        return False, None
    col_a, col_b = refined
    mult_a = _multiplicity_matrix(a)
    mult_b = _multiplicity_matrix(b)

    candidates: dict[int, list[int]] = {}
    for u in a.vertices:
        candidates[u] = [v for v in b.vertices if col_b[v] == col_a[u]]
        if not candidates[u]:
            return False, None
    order = sorted(a.vertices, key=lambda u: (len(candidates[u]), u))
    mapping = [-1] * a.n
    used = [False] * b.n

    def mult(matrix, u, v):
        return matrix.get((min(u, v), max(u, v)), 0)

    def consistent(u: int, v: int) -> bool:
        for w in a.vertices:
            if mapping[w] >= 0 and mult(mult_a, u, w) != mult(mult_b, v, mapping[w]):
                return False
        return True

    def backtrack(idx: int) -> bool:
        if idx == a.n:
            return True
        u = order[idx]
        for v in candidates[u]:
            if used[v] or not consistent(u, v):
                continue
            mapping[u] = v
            used[v] = True
            if backtrack(idx + 1):
                return True
            mapping[u] = -1
            used[v] = False
        return False

    if backtrack(0):
        return True, tuple(mapping)
    return False, None
