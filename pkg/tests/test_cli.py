import json
import subprocess
import sys

import pytest

from qtoric.cli import main

PY = [sys.executable, "-m", "qtoric"]


def run_cli(args, stdin=None):
    proc = subprocess.run(PY + args, input=stdin, capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_generate_chi_pipe():
    code, out, _ = run_cli(["generate", "cube:3"])
    assert code == 0
    code, out2, _ = run_cli(["chi", "--format", "text"], stdin=out)
    assert code == 0 and out2.strip() == "8"


def test_generate_product_family():
    code, out, _ = run_cli(["generate", "cube:2*polygon:6"])
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 4 and len(data["vertices"]) == 4 * 6


def test_generate_unknown_family_exits_2():
    code, _, err = run_cli(["generate", "dodecahedron:5"])
    assert code == 2 and "unknown family" in err


def test_validate_bad_input_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "dim": 2, "vertices": [[0, 1, 2], [0, 1], [1, 2]],
    }))
    code, out, _ = run_cli(["validate", "--manifold", str(bad)])
    assert code == 2
    report = json.loads(out)
    assert not report["ok"]


def test_malformed_json_exit_2(tmp_path):
    bad = tmp_path / "broken.json"
    bad.write_text("{nope")
    code, _, err = run_cli(["chi", "--manifold", str(bad)])
    assert code == 2


def test_analyze_joswig_fields():
    _, pair, _ = run_cli(["generate", "cube:3"])
    code, out, _ = run_cli(["analyze"], stdin=pair)
    assert code == 0
    data = json.loads(out)
    assert data["is_even"] and data["vertex_graph_bipartite"]
    assert data["facet_chromatic"] == 3 and data["joswig_consistent"]


def test_index_series_json():
    _, pair, _ = run_cli(["generate", "s2"])
    code, out, _ = run_cli(["index", "--V", "[[1,1]]"], stdin=pair)
    assert code == 0
    data = json.loads(out)
    assert data["series"] == ["2", "0", "0", "0", "0"]
    assert data["admissibility"]["hypotheses_met"]


def test_index_q_order_flag_after_subcommand():
    _, pair, _ = run_cli(["generate", "s2"])
    code, out, _ = run_cli(["index", "--V", "[[1,1]]", "--q-order", "2"], stdin=pair)
    assert code == 0
    assert len(json.loads(out)["series"]) == 3


def test_genus_elliptic_refusal_exit_3():
    _, pair, _ = run_cli(["generate", "cp:2"])
    code, _, err = run_cli(["genus", "--kind", "elliptic"], stdin=pair)
    assert code == 3 and "Spin" in err


def test_genus_witten():
    _, pair, _ = run_cli(["generate", "s2xs2"])
    code, out, _ = run_cli(["genus", "--kind", "witten"], stdin=pair)
    assert code == 0
    assert all(c == "0" for c in json.loads(out)["series"])


def test_color_index_hirzebruch():
    _, pair, _ = run_cli(["generate", "hirzebruch:2"])
    code, out, _ = run_cli(["color-index", "--signs", "++++"], stdin=pair)
    assert code == 0
    data = json.loads(out)
    assert data["series"] == ["4", "0", "0", "0", "0"]
    assert data["predicted_constant"] == "4"


def test_color_index_uncolorable_exit_3():
    _, pair, _ = run_cli(["generate", "cp:2"])
    code, _, err = run_cli(["color-index"], stdin=pair)
    assert code == 3


def test_verify_split():
    _, pair, _ = run_cli(["generate", "cp:3"])
    code, out, _ = run_cli(["verify", "--theorem", "split", "--S", "0,1"], stdin=pair)
    assert code == 0
    assert json.loads(out)["is_zero"]


def test_verify_split_hypothesis_unmet_exit_3():
    _, pair, _ = run_cli(["generate", "cp:3"])
    code, out, _ = run_cli(["verify", "--theorem", "split", "--S", "0"], stdin=pair)
    assert code == 3


def test_verify_product(tmp_path):
    _, pair, _ = run_cli(["generate", "s2"])
    other = tmp_path / "s2.json"
    other.write_text(pair)
    code, out, _ = run_cli([
        "verify", "--theorem", "product", "--other", str(other),
        "--V1", "[[1,1]]", "--V2", "[[1,1]]"], stdin=pair)
    assert code == 0 and json.loads(out)["equal"]


def test_verify_connsum(tmp_path):
    _, pair, _ = run_cli(["generate", "cube:2"])
    other = tmp_path / "c2.json"
    other.write_text(pair)
    V = "[[1,0,1,0],[0,1,0,1]]"
    code, out, _ = run_cli([
        "verify", "--theorem", "connsum", "--other", str(other),
        "--V1", V, "--V2", V], stdin=pair)
    assert code == 0
    data = json.loads(out)
    assert data["equal"] and data["lhs"][0] == "8"


def test_symmetry_report_cube():
    _, pair, _ = run_cli(["generate", "cube:3"])
    code, out, _ = run_cli(["symmetry-report"], stdin=pair)
    assert code == 0
    data = json.loads(out)
    assert data["index_nonvanishing"] is True
    assert data["N_max"] == 9
    assert [g["name"] for g in data["simple_candidates"]] == ["SU(2)", "Spin(5)"]


def test_alpha_dump():
    code, out, _ = run_cli(["alpha", "--max-rank", "6"])
    assert code == 0
    rows = json.loads(out)["alpha"]
    assert rows[0] == {"l": 1, "alpha": "3", "witnesses": ["SU(2)"]}
    assert rows[4]["witnesses"] == []


def test_determinism_byte_identical():
    _, pair, _ = run_cli(["generate", "hirzebruch:1"])
    outs = set()
    for _ in range(2):
        code, out, _ = run_cli(["index", "--V", "[[1,0,1,0]]", "--seed", "7"],
                               stdin=pair)
        assert code == 0
        outs.add(out)
    assert len(outs) == 1


def test_round_trip_file_vs_pipe(tmp_path):
    _, pair, _ = run_cli(["generate", "cube:2"])
    path = tmp_path / "c2.json"
    path.write_text(pair)
    _, via_file, _ = run_cli(["chi", "--manifold", str(path)])
    _, via_pipe, _ = run_cli(["chi"], stdin=pair)
    assert via_file == via_pipe


def test_main_callable_in_process(capsys):
    assert main(["alpha", "--max-rank", "2", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "G2" in out
