import json

import pytest

from tdtc.certificates import Certificate, coloring_from_json, coloring_to_json, recheck
from tdtc.cli import main
from tdtc.constructions import bipartite_tdtc
from tdtc.families import complete_bipartite, wheel
from tdtc.graph import EdgeObj, VertexObj, total_graph
from tdtc.textio import parse_graph

W5_COLORING = [
    [{"v": 1}, {"v": 3}, {"e": [0, 2]}, {"e": [4, 5]}],
    [{"v": 2}, {"e": [3, 4]}, {"e": [0, 5]}],
    [{"v": 0}, {"e": [1, 5]}],
    [{"v": 4}, {"e": [0, 3]}],
    [{"v": 5}, {"e": [0, 4]}],
    [{"e": [0, 1]}, {"e": [2, 3]}],
    [{"e": [1, 2]}],
]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(data if isinstance(data, str) else json.dumps(data))
    return str(p)


# -------------------------------------------------------------------- solve


def test_solve_wheel5(capsys):
    code, out, _ = run(capsys, "solve", "--family", "wheel", "--n", "5", "--invariant", "chi-dtt", "--json")
    cert = json.loads(out)
    assert code == 0
    assert cert["computed"] == 7
    assert cert["verdict"] == "verified-only"
    assert cert["instance"] == {"family": "wheel", "n": 5}
    assert set(cert) >= {"instance", "invariant", "claimed", "computed", "witness", "verdict", "effort"}


def test_solve_human_summary(capsys):
    code, out, _ = run(capsys, "solve", "--family", "complete", "--n", "5", "--invariant", "gamma-tm")
    assert code == 0
    assert out.startswith("gamma-tm = 4")


def test_solve_isolated_vertex(capsys):
    code, _, err = run(capsys, "solve", "--family", "path", "--n", "1", "--invariant", "gamma-t")
    assert code == 1
    assert "isolated" in err


def test_solve_budget_inconclusive(capsys):
    code, out, _ = run(
        capsys, "solve", "--family", "complete", "--n", "7", "--invariant", "chi-dtt", "--budget", "200", "--json"
    )
    assert code == 2
    assert json.loads(out)["verdict"] == "inconclusive"


def test_solve_edge_list_input(capsys, tmp_path):
    path = write(tmp_path, "g.txt", "4 3\n1 2\n2 3\n3 4\n")
    out_file = tmp_path / "cert.json"
    code, _, _ = run(capsys, "solve", "--in", path, "--invariant", "chi-dtt", "--out", str(out_file))
    cert = json.loads(out_file.read_text())
    assert code == 0
    assert cert["computed"] == 4
    assert cert["instance"]["edge_list"].startswith("sha256:")
    code, out, _ = run(capsys, "verify", "--certificate", str(out_file), "--in", path)
    assert code == 0
    assert "verified-only" in out


def test_missing_graph_is_usage_error(capsys):
    code, _, err = run(capsys, "solve", "--invariant", "chi")
    assert code == 1
    assert "--family" in err


def test_bad_family_parameter(capsys):
    code, _, err = run(capsys, "gen", "--family", "cycle", "--n", "2")
    assert code == 1
    assert "n >= 3" in err


# ------------------------------------------------------------------- verify


def test_verify_w5_reference(capsys, tmp_path):
    path = write(tmp_path, "c.json", {"mode": "tdtc", "classes": W5_COLORING})
    code, out, _ = run(capsys, "verify", "--family", "wheel", "--n", "5", "--coloring", path)
    assert code == 0
    assert "7 classes" in out


def test_verify_merged_classes(capsys, tmp_path):
    merged = [W5_COLORING[0] + W5_COLORING[1]] + W5_COLORING[2:]
    path = write(tmp_path, "c.json", {"mode": "tdtc", "classes": merged})
    code, out, _ = run(capsys, "verify", "--family", "wheel", "--n", "5", "--coloring", path)
    assert code == 3
    assert "conflict: v1, v2" in out


def test_verify_bad_edge_reference(capsys, tmp_path):
    bad = [W5_COLORING[0] + [{"e": [9, 9]}]] + W5_COLORING[1:]
    path = write(tmp_path, "c.json", {"mode": "tdtc", "classes": bad})
    code, _, err = run(capsys, "verify", "--family", "wheel", "--n", "5", "--coloring", path)
    assert code == 1
    assert "[9, 9]" in err


def test_verify_unknown_object(capsys, tmp_path):
    bad = [W5_COLORING[0] + [{"e": [1, 3]}]] + W5_COLORING[1:]
    path = write(tmp_path, "c.json", {"mode": "tdtc", "classes": bad})
    code, _, err = run(capsys, "verify", "--family", "wheel", "--n", "5", "--coloring", path)
    assert code == 1
    assert "not an object" in err


def test_verify_malformed_json_position(capsys, tmp_path):
    path = write(tmp_path, "c.json", '{"mode": "tdtc",\n "classes": [}')
    code, _, err = run(capsys, "verify", "--family", "wheel", "--n", "5", "--coloring", path)
    assert code == 1
    assert "line 2 column 14" in err


def test_verify_label_strings_and_mode_flag(capsys, tmp_path):
    classes = [["v1", "v3", "e_02", "e_45"], ["v2", "e_34", "e_05"], ["v0", "e_15"], ["v4", "e_03"],
               ["v5", "e_04"], ["e_01", "e_23"], ["e_12"]]
    path = write(tmp_path, "c.json", {"classes": classes})
    code, _, _ = run(capsys, "verify", "--family", "wheel", "--n", "5", "--coloring", path, "--mode", "tdtc")
    assert code == 0


def test_verify_proper_mode_on_vertices(capsys, tmp_path):
    path = write(tmp_path, "c.json", {"mode": "proper", "classes": [[{"v": 1}, {"v": 3}], [{"v": 2}]]})
    code, _, _ = run(capsys, "verify", "--family", "path", "--n", "3", "--coloring", path)
    assert code == 0
    path = write(tmp_path, "d.json", {"mode": "proper", "classes": [[{"v": 1}, {"v": 2}], [{"v": 3}]]})
    code, out, _ = run(capsys, "verify", "--family", "path", "--n", "3", "--coloring", path)
    assert code == 3
    assert "conflict: v1, v2" in out


# -------------------------------------------------------------------- sweep


def table(out):
    lines = out.strip().splitlines()
    header = lines[0].split("\t")
    return [dict(zip(header, line.split("\t"))) for line in lines[1:]]


def test_sweep_wheel_constructions(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "wheel", "--range", "3..20", "--check", "formula-vs-construction")
    rows = table(out)
    assert code == 0
    assert len(rows) == 18
    assert all(r["verdict"] == "match" for r in rows)


def test_sweep_cycles_solver(capsys):
    code, out, _ = run(
        capsys, "sweep", "--family", "cycle", "--range", "3..8", "--check", "formula-vs-solver", "--invariant", "chi-dtt"
    )
    rows = table(out)
    assert code == 0
    assert [int(r["computed"]) for r in rows] == list(range(3, 9))
    assert {r["verdict"] for r in rows} == {"match"}


def test_sweep_complete_solver(capsys):
    code, out, _ = run(
        capsys, "sweep", "--family", "complete", "--range", "2..5", "--check", "formula-vs-solver", "--invariant", "chi-dtt"
    )
    assert code == 0
    assert [int(r["computed"]) for r in table(out)] == [3, 3, 5, 7]


def test_sweep_cap_marks_skipped(capsys):
    code, out, _ = run(
        capsys, "sweep", "--family", "complete", "--range", "5..6", "--check", "formula-vs-solver", "--cap", "15"
    )
    rows = table(out)
    assert code == 0
    assert [r["verdict"] for r in rows] == ["match", "skipped"]


def test_sweep_inconclusive_exit(capsys):
    code, out, _ = run(
        capsys, "sweep", "--family", "complete", "--range", "6..6", "--check", "formula-vs-solver", "--budget", "10"
    )
    assert code == 2
    assert table(out)[0]["verdict"] == "inconclusive"


def test_sweep_bipartite_rows_sorted(capsys):
    code, out, _ = run(
        capsys, "sweep", "--family", "complete-bipartite", "--range", "1..4", "--check", "construction-verify"
    )
    rows = table(out)
    assert code == 0
    keys = [(int(r["n"]), int(r["m"])) for r in rows]
    assert keys == sorted(keys)
    assert len(rows) == 10
    assert {r["verdict"] for r in rows} == {"verified-only"}


def test_sweep_parallel_same_rows(capsys):
    args = ["sweep", "--family", "path", "--range", "2..7", "--check", "formula-vs-solver", "--json"]
    _, serial, _ = run(capsys, *args)
    _, parallel, _ = run(capsys, *args, "--jobs", "2")
    strip = lambda rows: [(r["n"], r["claimed"], r["computed"], r["verdict"]) for r in json.loads(rows)]
    assert strip(serial) == strip(parallel)


def test_sweep_certificates_recheck(capsys, tmp_path):
    out_file = tmp_path / "certs.jsonl"
    code, _, _ = run(
        capsys, "sweep", "--family", "wheel", "--range", "3..6", "--check", "formula-vs-construction",
        "--out", str(out_file),
    )
    assert code == 0
    lines = out_file.read_text().splitlines()
    assert len(lines) == 4
    for k, line in enumerate(lines):
        single = write(tmp_path, f"c{k}.json", line)
        code, out, _ = run(capsys, "verify", "--certificate", single)
        assert code == 0
        assert "verdict: match" in out


def test_sweep_formula_pair_not_covered(capsys):
    code, _, err = run(
        capsys, "sweep", "--family", "path", "--range", "3..5", "--check", "formula-vs-solver", "--invariant", "gamma-tm"
    )
    assert code == 1
    assert "closed form" in err


# --------------------------------------------------------------- certificates


def test_tampered_certificate_is_mismatch(capsys, tmp_path):
    _, out, _ = run(capsys, "solve", "--family", "wheel", "--n", "4", "--invariant", "chi-dtt", "--json")
    cert = json.loads(out)
    cert["claimed"] = 5
    cert["verdict"] = "match"
    path = write(tmp_path, "c.json", cert)
    code, out, _ = run(capsys, "verify", "--certificate", path)
    assert code == 3
    assert "mismatch" in out


def test_certificate_with_broken_witness():
    g = wheel(5)
    cert = Certificate({"family": "wheel", "n": 5}, "chi-dtt", 7, 7,
                       {"mode": "tdtc", "classes": W5_COLORING[:-1]}, "match")
    verdict, problems = recheck(cert, g)
    assert verdict == "mismatch"
    assert any("e_12" in p for p in problems)


def test_coloring_json_round_trip():
    g = complete_bipartite(2, 3)
    tg = total_graph(g)
    coloring = bipartite_tdtc(2, 3)
    data = coloring_to_json(coloring, "tdtc", tg)
    back, mode = coloring_from_json(json.loads(json.dumps(data)), g)
    assert mode == "tdtc"
    assert back == coloring


def test_wheel_numbers_follow_labels():
    g = wheel(5)
    data = {"mode": "tdtc", "classes": [[{"v": 0}, {"e": [0, 2]}]]}
    coloring, _ = coloring_from_json(data, g)
    assert coloring.classes == ((VertexObj(0), EdgeObj(0, 2)),)


# -------------------------------------------------------------- gen / total


def test_gen_cycle(capsys):
    code, out, _ = run(capsys, "gen", "--family", "cycle", "--n", "4")
    assert code == 0
    assert out == "4 4\n1 2\n1 4\n2 3\n3 4\n"


def test_total_output_parses(capsys):
    code, out, _ = run(capsys, "total", "--family", "path", "--n", "3")
    assert code == 0
    g = parse_graph(out)
    assert (g.n, g.m) == (5, 7)
    assert "# object 4: e_12" in out


def test_formula_command(capsys):
    code, out, _ = run(capsys, "formula", "--family", "path", "--n", "13", "--invariant", "chi-dtt")
    assert (code, out.strip()) == (0, "10")
    code, _, _ = run(capsys, "formula", "--family", "path", "--n", "13", "--invariant", "gamma-tm")
    assert code == 1


@pytest.mark.parametrize(
    "argv, size",
    [
        (["--construction", "wheel-tdtc", "--n", "9"], 10),
        (["--construction", "bipartite-tdtc", "--m", "2", "--n", "5"], 7),
        (["--construction", "complete-tdtc-fixture", "--n", "11"], 18),
        (["--construction", "extremal-order-n", "--n", "10"], 10),
    ],
)
def test_construct_colorings(capsys, argv, size):
    code, out, _ = run(capsys, "construct", *argv)
    data = json.loads(out)
    assert code == 0
    assert data["size"] == len(data["classes"]) == size
    assert data["mode"] == "tdtc"


def test_construct_structures(capsys):
    code, out, _ = run(capsys, "construct", "--construction", "tkn-parts", "--n", "5")
    assert code == 0
    assert len(json.loads(out)["parts"]) == 6
    code, out, _ = run(capsys, "construct", "--construction", "tkn-automorphism", "--n", "3", "--i", "1")
    assert code == 0
    pairs = {tuple(p["labels"]) for p in json.loads(out)["map"]}
    assert ("v2", "e_12") in pairs


def test_construct_missing_parameter(capsys):
    code, _, err = run(capsys, "construct", "--construction", "bipartite-tdtc", "--n", "4")
    assert code == 1
    assert "--m" in err
