"""Verification campaigns: exhaustive desk-scale checks of the dominating
cycle / transition-trail equivalences over the built-in corpora.

Reports are deterministic for a fixed corpus and seed: entries carry search
node counts rather than wall-clock times, and every sampling decision flows
from the seeded generator.  Failures never abort a campaign; a genuine
counterexample would be the most valuable output, so it is collected and
reported.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .connectivity import (
    _component_sets,
    is_cyclically_k_edge_connected,
    vertex_connectivity,
)
from .constructions import contract_matching, matching_contraction_transitions, split
from .core import Multigraph, dominates, is_k_regular, matching_of
from .corpora import Corpus, CorpusEntry, builtin_corpora, verify_corpus_entry
from .errors import GraphError, PreconditionViolatedError
from .reductions import (
    audit_split_graph_cuts,
    audit_triangle_contraction,
    dominating_cycle_via_line_graph,
    matching_cut_parity,
    split_cycle_from_trail,
    t_trail_via_triangle_contraction,
    trail_from_split_cycle,
)
from .search import (
    enumerate_perfect_matchings,
    find_cycle_dominating_matching,
    find_dominating_cycle,
    find_t_trail,
)
from .transitions import (
    TransitionSystem,
    enumerate_transition_systems,
    make_t_trail,
    transition_codes,
    transition_system_from_codes,
)

EXHAUSTIVE_T_MAX_N = 6
SAMPLED_T_COUNT = 500
PARITY_TRIALS = 10_000


@dataclass
class CampaignReport:
    campaign: str
    seed: int
    entries: list[dict] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)
    budget_exceeded: bool = False

    def as_dict(self) -> dict:
        return {
            "campaign": self.campaign,
            "seed": self.seed,
            "entries": self.entries,
            "failures": self.failures,
            "budget_exceeded": self.budget_exceeded,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"


def _entry(eid: str, result: str, nodes: int = 0, **extra) -> dict:
    d = {"id": eid, "result": result, "timings": {"search_nodes": nodes}}
    d.update(extra)
    return d


def _fail(eid: str, reason: str) -> dict:
    return {"id": eid, "reason": reason}


def _code_str(h: Multigraph, t: TransitionSystem) -> str:
    return "".join(str(c) for c in transition_codes(h, t))


def _systems_for(entry: CorpusEntry, rng: random.Random) -> Iterator[tuple[str, TransitionSystem]]:
    """All 3^n systems for small hosts; a fixed-size seeded sample beyond."""
    g = entry.graph
    if g.n <= EXHAUSTIVE_T_MAX_N:
        for t in enumerate_transition_systems(g):
            yield _code_str(g, t), t
    else:
        for _ in range(SAMPLED_T_COUNT):
            codes = tuple(rng.randrange(3) for _ in range(g.n))
            yield "".join(map(str, codes)), transition_system_from_codes(g, codes)


def _campaign_dcc_check(corpora, seed):
    for entry in corpora["CUBIC_C4"].entries:
        g = entry.graph
        problems = verify_corpus_entry(entry)
        if problems:
            yield _entry(entry.id, "metadata-mismatch"), _fail(entry.id, "; ".join(problems))
            continue
        if not is_k_regular(g, 3):
            yield _entry(entry.id, "not-cubic"), _fail(entry.id, "corpus entry is not cubic")
            continue
        if not is_cyclically_k_edge_connected(g, 4):
            yield _entry(entry.id, "not-cyclically-4-edge-connected"), \
                _fail(entry.id, "hypothesis fails: cyclic edge cut below 4")
            continue
        out = find_dominating_cycle(g)
        if out.found:
            yield _entry(entry.id, f"dominating-cycle(len={len(out.witness.darts)})",
                         out.nodes_expanded), None
        else:
            yield _entry(entry.id, "no-dominating-cycle", out.nodes_expanded), \
                _fail(entry.id, "cyclically 4-edge connected cubic graph without a dominating cycle")


def _campaign_nwcstar_check(corpora, seed):
    rng = random.Random(seed)
    for entry in corpora["FOURREG_4C"].entries:
        g = entry.graph
        problems = verify_corpus_entry(entry)
        if not is_k_regular(g, 4) or vertex_connectivity(g)[0] < 4:
            problems.append("not 4-regular 4-connected")
        if problems:
            yield _entry(entry.id, "metadata-mismatch"), _fail(entry.id, "; ".join(problems))
            continue
        for code, t in _systems_for(entry, rng):
            eid = f"{entry.id}/{code}"
            out = find_t_trail(g, t)
            if out.found:
                yield _entry(eid, "t-hamiltonian", out.nodes_expanded), None
            else:
                yield _entry(eid, "no-t-trail", out.nodes_expanded), \
                    _fail(eid, "4-regular 4-connected host without a trail for this system")


def _campaign_trail_crossoracle(corpora, seed):
    for entry in corpora["FOURREG_4C"].entries:
        g = entry.graph
        if not is_k_regular(g, 4):
            yield _entry(entry.id, "metadata-mismatch"), \
                _fail(entry.id, "host is not 4-regular")
            continue
        if g.n > EXHAUSTIVE_T_MAX_N:
            continue
        for t in enumerate_transition_systems(g):
            eid = f"{entry.id}/{_code_str(g, t)}"
            a = find_t_trail(g, t)
            sr = split(g, t)
            b = find_cycle_dominating_matching(sr.g, sr.matching)
            nodes = a.nodes_expanded + b.nodes_expanded
            if a.found != b.found:
                yield _entry(eid, "disagreement", nodes), \
                    _fail(eid, f"trail search found={a.found} but split search found={b.found}")
                continue
            if a.found:
                try:
                    tt = make_t_trail(g, t, a.witness)
                    cyc = split_cycle_from_trail(g, t, sr, tt)
                    tt_back = trail_from_split_cycle(g, t, sr, cyc)
                    cyc2 = split_cycle_from_trail(g, t, sr, trail_from_split_cycle(g, t, sr, b.witness))
                    assert dominates(sr.g, cyc2, sr.matching.edge_ids)
                except (GraphError, AssertionError) as exc:
                    yield _entry(eid, "conversion-error", nodes), _fail(eid, str(exc))
                    continue
                yield _entry(eid, "agree-found", nodes), None
            else:
                yield _entry(eid, "agree-none", nodes), None


def _campaign_split_cuts(corpora, seed):
    rng = random.Random(seed)
    for entry in corpora["FOURREG_4C"].entries:
        g = entry.graph
        if not is_k_regular(g, 4) or vertex_connectivity(g)[0] < 4:
            yield _entry(entry.id, "metadata-mismatch"), \
                _fail(entry.id, "host is not 4-regular 4-connected")
            continue
        for code, t in _systems_for(entry, rng):
            eid = f"{entry.id}/{code}"
            audit = audit_split_graph_cuts(g, t)
            if audit.ok:
                yield _entry(eid, f"ok(ec={audit.edge_connectivity},"
                                  f"cyclic3cuts={audit.cyclic_3_cut_count})"), None
            else:
                yield _entry(eid, "violation"), _fail(eid, "; ".join(audit.violations))


def _campaign_contraction_cuts(corpora, seed):
    rng = random.Random(seed)
    for entry in corpora["FOURREG_4C"].entries:
        g = entry.graph
        if not is_k_regular(g, 4) or vertex_connectivity(g)[0] < 4:
            yield _entry(entry.id, "metadata-mismatch"), \
                _fail(entry.id, "host is not 4-regular 4-connected")
            continue
        for code, t in _systems_for(entry, rng):
            eid = f"{entry.id}/{code}"
            audit = audit_triangle_contraction(g, t)
            if audit.ok:
                detail = audit.outcome if audit.lambda_c is None else f"lambda_c={audit.lambda_c}"
                yield _entry(eid, f"ok({detail})"), None
            else:
                yield _entry(eid, "violation"), _fail(eid, "; ".join(audit.violations))


def _matching_two_cuts(g: Multigraph, rng: random.Random, want: int = 64,
                       attempts: int = 4000) -> list[frozenset[int]]:
    """Sample edge cuts that are matchings splitting g into two components.

    Random BFS-grown vertex subsets; duplicates collapse via the cut's edge
    set.  Desk-scale graphs either yield cuts quickly or have none at all.
    """
    cuts: set[frozenset[int]] = set()
    for _ in range(attempts):
        if len(cuts) >= want:
            break
        size = rng.randrange(2, g.n - 1)
        start = rng.randrange(g.n)
        side = {start}
        frontier = [start]
        while frontier and len(side) < size:
            v = frontier.pop(rng.randrange(len(frontier)))
            for e in g.incident(v):
                w = g.other_end(e, v)
                if w not in side and len(side) < size:
                    side.add(w)
                    frontier.append(w)
        crossing = frozenset(e for e, (u, v) in enumerate(g.edges) if (u in side) != (v in side))
        if not crossing:
            continue
        try:
            matching_of(g, crossing)
        except GraphError:
            continue
        if len(_component_sets(g, removed_edges=crossing)) != 2:
            continue
        cuts.add(crossing)
    return sorted(cuts, key=sorted)


def _campaign_parity(corpora, seed):
    rng = random.Random(seed)
    graphs = list(corpora["NEGATIVES"].entries) + list(corpora["CUBIC_C4"].entries)
    pools = []
    for entry in graphs:
        g = entry.graph
        cuts = _matching_two_cuts(g, rng)
        matchings = list(enumerate_perfect_matchings(g))
        if cuts and matchings:
            pools.append((entry.id, g, cuts, matchings))
        else:
            yield _entry(f"{entry.id}/pool", "skipped(no-matching-2-cut)"), None
    if not pools:
        return
    odd = 0
    trials_by_graph = {eid: 0 for eid, *_ in pools}
    for i in range(PARITY_TRIALS):
        eid, g, cuts, matchings = pools[i % len(pools)]
        cut = cuts[rng.randrange(len(cuts))]
        m = matchings[rng.randrange(len(matchings))]
        trials_by_graph[eid] += 1
        if not matching_cut_parity(g, cut, m):
            odd += 1
            yield _entry(f"{eid}/trial{i}", "odd-sum"), \
                _fail(f"{eid}/trial{i}", f"cut {sorted(cut)} with matching {m.sorted_ids()}")
    for eid, *_ in pools:
        yield _entry(f"{eid}/trials", f"even({trials_by_graph[eid]} trials)"), None


def _campaign_linegraph_pipeline(corpora, seed):
    for entry in corpora["CUBIC_C4"].entries:
        g = entry.graph
        if not is_cyclically_k_edge_connected(g, 4):
            yield _entry(entry.id, "hypothesis-fails"), \
                _fail(entry.id, "corpus graph is not cyclically 4-edge connected")
            continue
        dc, trace = dominating_cycle_via_line_graph(g)
        counts = trace.reduction_steps
        decreasing = all(counts[i] > counts[i + 1] for i in range(len(counts) - 1))
        independent = find_dominating_cycle(g)
        if dc is None:
            yield _entry(entry.id, "pipeline-failed"), \
                _fail(entry.id, "no trail found on the line graph")
        elif not decreasing:
            yield _entry(entry.id, "reduction-not-decreasing"), \
                _fail(entry.id, f"4-valent counts {list(counts)}")
        elif not independent.found:
            yield _entry(entry.id, "cross-check-mismatch"), \
                _fail(entry.id, "pipeline found a cycle the direct search missed")
        else:
            yield _entry(entry.id,
                         f"dominating-cycle(len={len(dc.darts)},steps={len(counts) - 1})",
                         independent.nodes_expanded), None


def _campaign_split_pipeline(corpora, seed):
    for entry in corpora["FOURREG_4C"].entries:
        g = entry.graph
        if not is_k_regular(g, 4) or vertex_connectivity(g)[0] < 4:
            yield _entry(entry.id, "metadata-mismatch"), \
                _fail(entry.id, "host is not 4-regular 4-connected")
            continue
        if g.n > EXHAUSTIVE_T_MAX_N:
            continue
        for t in enumerate_transition_systems(g):
            eid = f"{entry.id}/{_code_str(g, t)}"
            try:
                tt, trace = t_trail_via_triangle_contraction(g, t)
            except (GraphError, AssertionError) as exc:
                yield _entry(eid, "pipeline-error"), _fail(eid, str(exc))
                continue
            audits_ok = all(st.detail.get("ok", True) for st in trace.stages)
            if not audits_ok:
                yield _entry(eid, "audit-violation"), \
                    _fail(eid, "cut-structure audit failed")
            elif tt is None:
                yield _entry(eid, "no-dominating-cycle-downstream"), \
                    _fail(eid, "contracted graph has no dominating cycle")
            else:
                yield _entry(eid, f"t-trail(len={len(tt.trail.darts)})"), None


def _campaign_matching_domination(corpora, seed):
    seen_ids = set()
    cubic_entries = list(corpora["CUBIC_C4"].entries) + list(corpora["NEGATIVES"].entries)
    for entry in cubic_entries:
        if entry.id in seen_ids:
            continue
        seen_ids.add(entry.id)
        g = entry.graph
        if not is_k_regular(g, 3):
            continue
        for i, m in enumerate(enumerate_perfect_matchings(g)):
            eid = f"{entry.id}/pm{i}"
            cm = contract_matching(g, m)
            image = cm.image_graph
            kappa, _ = vertex_connectivity(image)
            if image.n <= 4 or kappa < 4:
                yield _entry(eid, f"skipped(kappa={kappa})"), None
                continue
            out = find_cycle_dominating_matching(g, m)
            # crosswalk: the contracted host with its induced transition
            # system must agree with the direct matching search
            _, induced = matching_contraction_transitions(g, m)
            trail_out = find_t_trail(image, induced)
            nodes = out.nodes_expanded + trail_out.nodes_expanded
            if out.found != trail_out.found:
                yield _entry(eid, "crosswalk-disagreement", nodes), \
                    _fail(eid, f"matching search found={out.found} but induced "
                               f"trail search found={trail_out.found}")
            elif out.found:
                yield _entry(eid, "dominating-cycle-found", nodes), None
            else:
                yield _entry(eid, "no-cycle-dominates", nodes), \
                    _fail(eid, f"matching {m.sorted_ids()} contracts to a 4-connected "
                               "graph but no cycle dominates it")


CAMPAIGNS: dict[str, Callable] = {
    "dcc-check": _campaign_dcc_check,
    "nwcstar-check": _campaign_nwcstar_check,
    "trail-crossoracle": _campaign_trail_crossoracle,
    "split-cuts": _campaign_split_cuts,
    "contraction-cuts": _campaign_contraction_cuts,
    "parity": _campaign_parity,
    "linegraph-pipeline": _campaign_linegraph_pipeline,
    "split-pipeline": _campaign_split_pipeline,
    "matching-domination": _campaign_matching_domination,
}


def run_campaign(name: str, corpora: dict[str, Corpus] | None = None,
                 budget: float | None = None, seed: int = 0) -> CampaignReport:
    """Run one campaign to completion (or until the time budget runs out).

    The report is byte-identical across runs for the same inputs and seed,
    unless the budget interrupts the run.
    """
    if name not in CAMPAIGNS:
        raise PreconditionViolatedError(
            f"unknown campaign {name!r}; choose from {sorted(CAMPAIGNS)}")
    corpora = corpora if corpora is not None else builtin_corpora()
    report = CampaignReport(name, seed)
    deadline = None if budget is None else time.monotonic() + budget
    for entry, failure in CAMPAIGNS[name](corpora, seed):
        if deadline is not None and time.monotonic() > deadline:
            report.budget_exceeded = True
            break
        report.entries.append(entry)
        if failure is not None:
            report.failures.append(failure)
    return report
