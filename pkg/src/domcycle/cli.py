"""Command line interface.

    domcycle check connectivity <file>
    domcycle check cyclic <file> [--k K]
    domcycle check t-trail <graph> <ts> <trail>
    domcycle construct line-graph <g6> [--emit-ts OUT]
    domcycle construct split <g6> <ts> [--emit-matching OUT]
    domcycle construct contract-matching <mg> <matching-file>
    domcycle construct contract-triangles <mg>
    domcycle search {ham|dc|dc-matching|t-trail} <inputs> [--emit-witness OUT]
    domcycle pipeline line-graph <cubic-graph>
    domcycle pipeline split <4reg-graph> <ts>
    domcycle verify <campaign> [--corpus NAME|FILE ...] [--budget 60s] [--seed N] [--json OUT]

Exit codes for verify: 0 all checks passed, 2 failures found, 3 budget ran out.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .campaigns import CAMPAIGNS, run_campaign
from .connectivity import (
    cyclic_edge_connectivity,
    edge_connectivity,
    vertex_connectivity,
)
from .constructions import contract_matching, contract_triangles, line_graph, split
from .core import matching_of
from .corpora import Corpus, CorpusEntry, builtin_corpora
from .errors import GraphError, NoTwoDisjointCyclesError
from .formats import (
    load_graph,
    read_matching_ids,
    read_trail,
    read_transition_codes,
    write_matching_ids,
    write_mg,
    write_trail,
    write_transition_codes,
)
from .reductions import dominating_cycle_via_line_graph, t_trail_via_triangle_contraction
from .search import (
    find_cycle_dominating_matching,
    find_dominating_cycle,
    find_hamiltonian_cycle,
    find_t_trail,
)
from .transitions import is_t_trail, transition_codes, transition_system_from_codes


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _cert_dict(cert) -> dict | None:
    if cert is None:
        return None
    return {
        "kind": cert.kind,
        "members": list(cert.members),
        "side_partition": [list(cert.side_partition[0]), list(cert.side_partition[1])],
    }


def _cmd_check(args) -> int:
    g = load_graph(args.file) if args.what != "t-trail" else load_graph(args.graph)
    if args.what == "connectivity":
        vk, vcert = vertex_connectivity(g)
        ek, ecert = edge_connectivity(g)
        _emit({
            "kind": "connectivity",
            "value": {"vertex": vk, "edge": ek},
            "certificate": {"vertex": _cert_dict(vcert), "edge": _cert_dict(ecert)},
        })
        return 0
    if args.what == "cyclic":
        try:
            value, cert = cyclic_edge_connectivity(g)
            out = {"kind": "cyclic-edge-connectivity", "value": value,
                   "lambda_c": value, "certificate": _cert_dict(cert)}
            if args.k is not None:
                out["cyclically_k_connected"] = value >= args.k
        except NoTwoDisjointCyclesError:
            out = {"kind": "cyclic-edge-connectivity", "value": None,
                   "lambda_c": None, "certificate": None}
            if args.k is not None:
                out["cyclically_k_connected"] = True
        _emit(out)
        return 0
    # t-trail
    codes = read_transition_codes(Path(args.ts).read_text())
    t = transition_system_from_codes(g, codes)
    trail = read_trail(Path(args.trail).read_text())
    check = is_t_trail(g, t, trail)
    _emit({"kind": "t-trail", "value": check.ok,
           "violation": None if check.ok else {"vertex": check.vertex, "reason": check.reason}})
    return 0


def _cmd_construct(args) -> int:
    if args.what == "line-graph":
        lgr = line_graph(load_graph(args.graph))
        if args.emit_ts and lgr.canonical_t is None:
            raise GraphError("source graph is not cubic: no canonical transition system")
        sys.stdout.write(write_mg(lgr.lg))
        if args.emit_ts:
            codes = transition_codes(lgr.lg, lgr.canonical_t)
            Path(args.emit_ts).write_text(write_transition_codes(codes))
        return 0
    if args.what == "split":
        g = load_graph(args.graph)
        codes = read_transition_codes(Path(args.ts).read_text())
        sr = split(g, transition_system_from_codes(g, codes))
        sys.stdout.write(write_mg(sr.g))
        if args.emit_matching:
            Path(args.emit_matching).write_text(write_matching_ids(sr.matching.edge_ids))
        return 0
    if args.what == "contract-matching":
        g = load_graph(args.graph)
        ids = read_matching_ids(Path(args.matching).read_text())
        cm = contract_matching(g, matching_of(g, ids))
        sys.stdout.write(write_mg(cm.image_graph))
        return 0
    # contract-triangles
    g = load_graph(args.graph)
    cm = contract_triangles(g)
    sys.stdout.write(write_mg(cm.image_graph))
    return 0


def _cmd_search(args) -> int:
    g = load_graph(args.graph)
    if args.what == "ham":
        out = find_hamiltonian_cycle(g)
    elif args.what == "dc":
        out = find_dominating_cycle(g)
    elif args.what == "dc-matching":
        ids = read_matching_ids(Path(args.matching).read_text())
        out = find_cycle_dominating_matching(g, matching_of(g, ids))
    else:  # t-trail
        codes = read_transition_codes(Path(args.ts).read_text())
        out = find_t_trail(g, transition_system_from_codes(g, codes))
    _emit({
        "found": out.found,
        "length": None if out.witness is None else len(out.witness.darts),
        "nodes_expanded": out.nodes_expanded,
    })
    if out.found and args.emit_witness:
        Path(args.emit_witness).write_text(write_trail(out.witness))
    return 0 if out.found else 1


def _cmd_pipeline(args) -> int:
    g = load_graph(args.graph)
    if args.what == "line-graph":
        dc, trace = dominating_cycle_via_line_graph(g)
        payload = trace.as_dict()
        payload["found"] = dc is not None
        if dc is not None:
            payload["witness"] = [f"{e},{s}" for e, s in dc.darts]
        _emit(payload)
        return 0 if dc is not None else 1
    codes = read_transition_codes(Path(args.ts).read_text())
    t = transition_system_from_codes(g, codes)
    tt, trace = t_trail_via_triangle_contraction(g, t)
    payload = trace.as_dict()
    payload["found"] = tt is not None
    if tt is not None:
        payload["witness"] = [f"{e},{s}" for e, s in tt.trail.darts]
    _emit(payload)
    return 0 if tt is not None else 1


def _parse_budget(text: str) -> float:
    text = text.strip().lower()
    if text.endswith("s"):
        text = text[:-1]
    return float(text)


def _cmd_verify(args) -> int:
    corpora = builtin_corpora()
    if args.corpus:
        selected: dict[str, Corpus] = {}
        file_entries = []
        for item in args.corpus:
            if item in corpora:
                selected[item] = corpora[item]
            else:
                g = load_graph(item)
                file_entries.append(CorpusEntry(Path(item).stem, g, {}))
        if file_entries:
            selected["FILES"] = Corpus("FILES", tuple(file_entries))
        # campaigns address corpora by role; missing roles fall back to builtins
        merged = dict(corpora)
        merged.update(selected)
        if "FILES" in selected:
            for role in ("CUBIC_C4", "FOURREG_4C"):
                if role not in selected:
                    merged[role] = Corpus(role, selected["FILES"].entries)
        corpora = merged
    budget = _parse_budget(args.budget) if args.budget else None
    report = run_campaign(args.campaign, corpora=corpora, budget=budget, seed=args.seed)
    text = report.to_json()
    if args.json:
        Path(args.json).write_text(text)
    else:
        sys.stdout.write(text)
    if report.budget_exceeded:
        return 3
    return 0 if not report.failures else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domcycle",
                                     description="dominating cycles and transition trails, exactly")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="validate structures and connectivity")
    check_sub = p_check.add_subparsers(dest="what", required=True)
    c1 = check_sub.add_parser("connectivity")
    c1.add_argument("file")
    c2 = check_sub.add_parser("cyclic")
    c2.add_argument("file")
    c2.add_argument("--k", type=int, default=None)
    c3 = check_sub.add_parser("t-trail")
    c3.add_argument("graph")
    c3.add_argument("ts")
    c3.add_argument("trail")
    p_check.set_defaults(func=_cmd_check)

    p_con = sub.add_parser("construct", help="graph transformations")
    con_sub = p_con.add_subparsers(dest="what", required=True)
    g1 = con_sub.add_parser("line-graph")
    g1.add_argument("graph")
    g1.add_argument("--emit-ts", default=None)
    g2 = con_sub.add_parser("split")
    g2.add_argument("graph")
    g2.add_argument("ts")
    g2.add_argument("--emit-matching", default=None)
    g3 = con_sub.add_parser("contract-matching")
    g3.add_argument("graph")
    g3.add_argument("matching")
    g4 = con_sub.add_parser("contract-triangles")
    g4.add_argument("graph")
    p_con.set_defaults(func=_cmd_construct)

    p_search = sub.add_parser("search", help="exact existence searches")
    search_sub = p_search.add_subparsers(dest="what", required=True)
    s1 = search_sub.add_parser("ham")
    s1.add_argument("graph")
    s2 = search_sub.add_parser("dc")
    s2.add_argument("graph")
    s3 = search_sub.add_parser("dc-matching")
    s3.add_argument("graph")
    s3.add_argument("matching")
    s4 = search_sub.add_parser("t-trail")
    s4.add_argument("graph")
    s4.add_argument("ts")
    for sp in (s1, s2, s3, s4):
        sp.add_argument("--emit-witness", default=None)
    p_search.set_defaults(func=_cmd_search)

    p_pipe = sub.add_parser("pipeline", help="end-to-end constructive pipelines")
    pipe_sub = p_pipe.add_subparsers(dest="what", required=True)
    pl1 = pipe_sub.add_parser("line-graph")
    pl1.add_argument("graph")
    pl2 = pipe_sub.add_parser("split")
    pl2.add_argument("graph")
    pl2.add_argument("ts")
    p_pipe.set_defaults(func=_cmd_pipeline)

    p_verify = sub.add_parser("verify", help="run a verification campaign")
    p_verify.add_argument("campaign", choices=sorted(CAMPAIGNS))
    p_verify.add_argument("--corpus", nargs="*", default=None,
                          help="builtin corpus names or graph files")
    p_verify.add_argument("--budget", default=None, help="time limit, e.g. 60s")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--json", default=None, help="write the report here instead of stdout")
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
