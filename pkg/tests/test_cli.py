import io
import json
import subprocess
import sys

import pytest

from chromabij.cli import main

FIG1_EL = "4 4\n0 2\n0 1\n1 2\n1 3\n"


@pytest.fixture
def fig1_file(tmp_path):
    path = tmp_path / "fig1.el"
    path.write_text(FIG1_EL)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_chi_examples(capsys, fig1_file):
    code, out, _ = run(capsys, "chi", "--graph", fig1_file)
    assert code == 0 and out == '{"coeffs":[0,-2,5,-4,1]}'
    assert run(capsys, "chi", "--graph", fig1_file, "--at", "4")[1] == "72"
    for method in ("count", "subgraphs", "nbc", "delcon"):
        assert run_json(capsys, "chi", "--graph", fig1_file, "--method", method) == {
            "coeffs": [0, -2, 5, -4, 1]}
        assert run_json(capsys, "chi", "--graph", fig1_file, "--method", method, "--at", "-2") == 72
    assert run(capsys, "--pretty", "chi", "--graph", "fig1")[1] == "t^4 - 4t^3 + 5t^2 - 2t"


def test_output_is_byte_identical(capsys, fig1_file):
    first = run(capsys, "csf", "--graph", fig1_file)[1]
    assert run(capsys, "csf", "--graph", fig1_file)[1] == first


def test_csf(capsys):
    out = run_json(capsys, "csf", "--graph", "fig1")
    parts = [tuple(t["partition"]) for t in out["terms"]]
    assert parts == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert run_json(capsys, "csf", "--graph", "fig1", "--method", "subgraphs") == out
    w = run_json(capsys, "csf", "--graph", "fig1", "--omega")
    assert [t["coeff"] for t in w["terms"]] == [2, 4, 1, 4, 1]


def test_csf_expand_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("2 1\n0 1\n"))
    out = run_json(capsys, "csf", "--graph", "-", "--expand", "2")
    assert out == {"mu": 2, "terms": [{"coeff": 2, "exponents": [1, 1]}]}


def test_acyclic(capsys):
    out = run_json(capsys, "acyclic", "--graph", "fig1", "--list")
    assert out["count"] == 12 and len(set(out["orientations"])) == 12
    assert run_json(capsys, "acyclic", "--graph", "fig1") == {"count": 12}


def test_compat(capsys):
    out = run_json(capsys, "compat", "--graph", "fig1", "--t", "2", "--check")
    assert out == {"agrees": True, "count": 72, "expected": 72, "t": 2}


def test_bijection_phi_psi(capsys):
    assert run_json(capsys, "bijection", "--graph", "fig1", "--phi", "++++") == {"nbc": [2, 3, 4]}
    assert run_json(capsys, "bijection", "--graph", "fig1", "--psi", "2,3,4") == {"orientation": "++++"}
    out = run_json(capsys, "bijection", "--graph", "fig1", "--phi", "++++", "--normal", "+-++", "--trace")
    assert out["nbc"] == [3, 4]
    assert [s["rule"] for s in out["trace"]] == [None, "B", "A", "unoriented", "unoriented"]
    assert out["trace"][0]["arcs"] == [[0, 2], [0, 1], [1, 2], [1, 3]]
    code, text, _ = run(capsys, "--pretty", "bijection", "--graph", "fig1", "--psi", "3,4",
                        "--normal", "+-++", "--trace")
    assert code == 0 and "A'" in text and text.endswith("result: ++++")


@pytest.mark.parametrize("argv", [
    ["bijection", "--graph", "fig1", "--phi", "++"],
    ["bijection", "--graph", "fig1", "--phi", "+--+"],   # u->w->v->u
    ["bijection", "--graph", "fig1", "--psi", "1,2"],    # contains a broken circuit
    ["bijection", "--graph", "fig1", "--psi", "9"],
    ["bijection", "--graph", "fig1", "--trace"],
    ["chi", "--graph", "no-such-file"],
    ["chi", "--graph", "fig1", "--method", "magic"],
    ["verify"],
    ["compat", "--graph", "fig1", "--t", "0"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_parse_error_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.el"
    bad.write_text("2 1\n0 0\n")
    code, _, err = run(capsys, "chi", "--graph", str(bad))
    assert code == 2 and "line 2" in err


def test_budget_exit_3(capsys, monkeypatch):
    monkeypatch.setenv("CHROMABIJ_BUDGET", "10")
    assert run(capsys, "chi", "--graph", "kite", "--method", "subgraphs")[0] == 3
    assert run(capsys, "trees", "--n", "12")[0] == 3


def test_verify_graph_against(capsys):
    out = run_json(capsys, "verify", "--graph", "butterfly", "--against", "kite")
    assert out["passed"] and out["against"]["X_equal"] is True
    assert len(out["checks"]) == 13


def test_verify_sweep(capsys):
    out = run_json(capsys, "verify", "--n", "3")
    assert out["graphs"] == 8 and out["passed"] and out["failed_graphs"] == 0


def test_trees(capsys):
    out = run_json(capsys, "trees", "--n", "6")
    assert out == {"classes": 6, "collisions": [], "labeled_trees": 1296, "n": 6, "passed": True}


def test_bench(capsys):
    out = run_json(capsys, "bench", "--graph", "kite")
    assert out["agree"]
    assert out["nbc"]["subsets_visited"] < out["subgraphs"]["subsets_visited"] == 2 ** 6
    code, text, _ = run(capsys, "--pretty", "bench", "--graph", "kite")
    assert code == 0 and "agree: True" in text


def test_graph6_input(capsys, tmp_path):
    path = tmp_path / "k4.g6"
    path.write_text("C~\n")
    assert run_json(capsys, "acyclic", "--graph", str(path)) == {"count": 24}


def test_module_entry_point(fig1_file):
    proc = subprocess.run([sys.executable, "-m", "chromabij", "chi", "--graph", fig1_file, "--at", "4"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "72"
