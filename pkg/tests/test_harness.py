"""Corpora metadata, campaign wiring, and the command line surface."""

import json
from pathlib import Path

import pytest

from domcycle.campaigns import CAMPAIGNS, run_campaign
from domcycle.cli import main
from domcycle.connectivity import vertex_connectivity
from domcycle.core import is_k_regular
from domcycle.corpora import builtin_corpora, verify_corpus_entry
from domcycle.errors import PreconditionViolatedError
from domcycle.formats import encode_graph6, write_mg, write_transition_codes


def test_builtin_corpora_members():
    corpora = builtin_corpora()
    assert {"CUBIC_C4", "FOURREG_4C", "NEGATIVES"} <= set(corpora)
    cubic_ids = {e.id for e in corpora["CUBIC_C4"].entries}
    assert {"K4", "K3,3", "petersen", "heawood", "mobius-kantor",
            "pappus", "dodecahedron"} == cubic_ids
    fourreg_ids = {e.id for e in corpora["FOURREG_4C"].entries}
    assert {"K5", "octahedron", "C7-complement", "antiprism-4"} == fourreg_ids
    neg_ids = {e.id for e in corpora["NEGATIVES"].entries}
    assert {"prism", "triangles-3join", "K4"} == neg_ids


def test_corpora_metadata_rederives():
    for corpus in builtin_corpora().values():
        for entry in corpus.entries:
            assert verify_corpus_entry(entry) == [], entry.id


def test_fourreg_members_are_four_connected():
    for entry in builtin_corpora()["FOURREG_4C"].entries:
        assert is_k_regular(entry.graph, 4)
        assert vertex_connectivity(entry.graph)[0] == 4


def test_campaign_registry():
    assert set(CAMPAIGNS) == {
        "dcc-check", "nwcstar-check", "trail-crossoracle", "split-cuts",
        "contraction-cuts", "parity", "linegraph-pipeline", "split-pipeline",
        "matching-domination",
    }
    with pytest.raises(PreconditionViolatedError):
        run_campaign("no-such-campaign")


def test_dcc_and_matching_campaigns_green():
    r = run_campaign("dcc-check", seed=1)
    assert r.failures == [] and len(r.entries) == 7
    r = run_campaign("matching-domination", seed=1)
    assert r.failures == []
    assert any(e["result"].startswith("skipped") for e in r.entries)  # K4, K3,3
    assert any(e["result"] == "dominating-cycle-found" for e in r.entries)


def test_campaign_budget_flag():
    r = run_campaign("trail-crossoracle", budget=0.0, seed=0)
    assert r.budget_exceeded
    assert len(r.entries) <= 1


def test_campaign_report_deterministic():
    a = run_campaign("nwcstar-check", seed=7)
    b = run_campaign("nwcstar-check", seed=7)
    assert a.to_json() == b.to_json()
    c = run_campaign("nwcstar-check", seed=8)
    assert c.to_json() != a.to_json()  # the sampled systems move with the seed


def test_parity_campaign_green():
    r = run_campaign("parity", seed=3)
    assert r.failures == []
    skipped = [e for e in r.entries if e["result"].startswith("skipped")]
    assert skipped  # K4 and K3,3 have no matching 2-cut
    trials = [e for e in r.entries if e["result"].startswith("even(")]
    total = sum(int(e["result"].split("(")[1].split(" ")[0]) for e in trials)
    assert total == 10_000


def _write_fixtures(tmp_path: Path):
    from domcycle.corpora import complete_graph, petersen

    g6 = tmp_path / "pet.g6"
    g6.write_text(encode_graph6(petersen()) + "\n")
    k5 = tmp_path / "k5.g6"
    k5.write_text(encode_graph6(complete_graph(5)) + "\n")
    mg = tmp_path / "pet.mg"
    mg.write_text(write_mg(petersen()))
    ts = tmp_path / "k5.ts"
    ts.write_text(write_transition_codes((0,) * 5))
    return g6, k5, mg, ts


def test_cli_check_cyclic(tmp_path, capsys):
    g6, _, _, _ = _write_fixtures(tmp_path)
    assert main(["check", "cyclic", str(g6), "--k", "4"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["lambda_c"] == 5 and out["cyclically_k_connected"] is True


def test_cli_check_cyclic_vacuous(tmp_path, capsys):
    from domcycle.corpora import complete_graph

    f = tmp_path / "k4.g6"
    f.write_text(encode_graph6(complete_graph(4)) + "\n")
    assert main(["check", "cyclic", str(f), "--k", "4"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["lambda_c"] is None and out["cyclically_k_connected"] is True


def test_cli_search_and_witness(tmp_path, capsys):
    _, _, mg, _ = _write_fixtures(tmp_path)
    witness = tmp_path / "dc.trail"
    assert main(["search", "dc", str(mg), "--emit-witness", str(witness)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["found"] and out["length"] == 9
    assert witness.exists() and len(witness.read_text().splitlines()) == 9
    assert main(["search", "ham", str(mg)]) == 1  # Petersen: not found


def test_cli_construct_split_roundtrip(tmp_path, capsys):
    _, k5, _, ts = _write_fixtures(tmp_path)
    matching_out = tmp_path / "m.ids"
    assert main(["construct", "split", str(k5), str(ts),
                 "--emit-matching", str(matching_out)]) == 0
    mg_text = capsys.readouterr().out
    assert mg_text.startswith("10 15\n")
    assert matching_out.read_text() == "10\n11\n12\n13\n14\n"


def test_cli_pipeline_split(tmp_path, capsys):
    _, k5, _, ts = _write_fixtures(tmp_path)
    assert main(["pipeline", "split", str(k5), str(ts)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["found"] is True
    assert [s["name"] for s in out["stages"]][:2] == ["split", "cut-audit"]


def test_cli_verify_report_and_exit_codes(tmp_path, capsys):
    report_path = tmp_path / "r.json"
    code = main(["verify", "dcc-check", "--seed", "7", "--json", str(report_path)])
    assert code == 0
    data = json.loads(report_path.read_text())
    assert data["campaign"] == "dcc-check" and data["failures"] == []
    assert {"id", "result", "timings"} <= set(data["entries"][0])
    code = main(["verify", "trail-crossoracle", "--budget", "0s"])
    assert code == 3
    capsys.readouterr()


def test_cli_verify_byte_identical(tmp_path):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "nwcstar-check", "--seed", "7", "--json", str(p1)]) == 0
    assert main(["verify", "nwcstar-check", "--seed", "7", "--json", str(p2)]) == 0
    assert p1.read_bytes() == p2.read_bytes()


def test_cli_error_path(tmp_path, capsys):
    bad = tmp_path / "bad.g6"
    bad.write_text("not a graph6 line at all\n")
    assert main(["check", "connectivity", str(bad)]) == 4
    capsys.readouterr()


def test_cli_check_t_trail(tmp_path, capsys):
    from domcycle.corpora import complete_graph
    from domcycle.formats import write_trail
    from domcycle.search import find_t_trail
    from domcycle.transitions import transition_system_from_codes

    k5 = complete_graph(5)
    t = transition_system_from_codes(k5, (0,) * 5)
    out = find_t_trail(k5, t)
    graph = tmp_path / "k5.g6"
    graph.write_text(encode_graph6(k5) + "\n")
    ts = tmp_path / "k5.ts"
    ts.write_text(write_transition_codes((0,) * 5))
    trail = tmp_path / "w.trail"
    trail.write_text(write_trail(out.witness))
    assert main(["check", "t-trail", str(graph), str(ts), str(trail)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["value"] is True
    # a non-spanning trail is rejected with the violating vertex
    bad = tmp_path / "bad.trail"
    bad.write_text("0,0\n4,0\n1,1\n")  # triangle 0-1-2 in row-major K5 ids
    assert main(["check", "t-trail", str(graph), str(ts), str(bad)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["value"] is False and payload["violation"]["vertex"] == 3


def test_cli_construct_contractions(tmp_path, capsys):
    from domcycle.corpora import petersen, prism

    mg = tmp_path / "pet.mg"
    mg.write_text(write_mg(petersen()))
    matching = tmp_path / "spokes.ids"
    matching.write_text("".join(f"{e}\n" for e in range(5, 10)))
    assert main(["construct", "contract-matching", str(mg), str(matching)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("5 10\n")  # K5 with petersen-induced edge order

    pr = tmp_path / "prism.mg"
    pr.write_text(write_mg(prism()))
    assert main(["construct", "contract-triangles", str(pr)]) == 0
    assert capsys.readouterr().out.startswith("2 3\n")


def test_cli_construct_line_graph_emits_ts(tmp_path, capsys):
    from domcycle.corpora import complete_graph

    g6 = tmp_path / "k4.g6"
    g6.write_text(encode_graph6(complete_graph(4)) + "\n")
    ts_out = tmp_path / "canonical.ts"
    assert main(["construct", "line-graph", str(g6), "--emit-ts", str(ts_out)]) == 0
    assert capsys.readouterr().out.startswith("6 12\n")
    codes = ts_out.read_text().splitlines()
    assert len(codes) == 6 and set(codes) <= {"0", "1", "2"}


def test_cli_verify_corpus_override(tmp_path, capsys):
    from domcycle.corpora import petersen

    mg = tmp_path / "petersen.mg"
    mg.write_text(write_mg(petersen()))
    assert main(["verify", "dcc-check", "--corpus", str(mg)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert [e["id"] for e in report["entries"]] == ["petersen"]
    assert report["failures"] == []


def test_cli_verify_corpus_override_wrong_regularity(tmp_path, capsys):
    # feeding a cubic graph to a 4-regular campaign reports, not crashes
    from domcycle.corpora import petersen

    mg = tmp_path / "petersen.mg"
    mg.write_text(write_mg(petersen()))
    assert main(["verify", "nwcstar-check", "--corpus", str(mg)]) == 2
    report = json.loads(capsys.readouterr().out)
    assert report["failures"] and "4-regular" in report["failures"][0]["reason"]
