from __future__ import annotations

import json
import subprocess
import sys

import pytest
from hypothesis import given

from conftest import bundles
from hnpoly.cli import main, run
from hnpoly.textio import bundle_to_json, parse_bundle

CHALLENGE = ["--f1", "O(-1/2)^2", "--f2", "O(9/4)", "--e", "O(1/3)+O(6/5)"]


def test_ext_check_json():
    status, doc = run(["ext-check", *CHALLENGE, "--format", "json"])
    assert status == 0
    assert json.loads(doc) == {"exists": True}


def test_ext_check_text_and_json_input():
    assert run(["ext-check", *CHALLENGE]) == (0, "true")
    status, doc = run(
        ["ext-check", "--json", "--f1", "[[-1,2,2]]", "--f2", "[[9,4,1]]", "--e", "[[3,1,1],[4,7,1]]"]
    )
    assert (status, doc) == (0, "false")


def test_dim_ext():
    assert run(["dim", "--ext", *CHALLENGE]) == (0, "31")
    status, doc = run(["dim", "--ext", *CHALLENGE, "--format", "json"])
    data = json.loads(doc)
    assert data["value"] == 31 and data["nonempty"] == "yes" and data["formula"]


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["dim", "--h0", "--e", "O(2/3)"], "2"),
        (["dim", "--hom", "--e", "O(0)", "--f", "O(1)"], "1"),
        (["dim", "--aut", "--e", "O(1/3)+O(6/5)"], "13"),
        (["dim", "--hom-stratum", "--e", "O(0)^2", "--f", "O(1)", "--q", "O(0)"], "1"),
        (["dim", "--surj-kernel", "--e", "O(1)+O(1/2)", "--f", "O(2)", "--k", "O(1)+O(-1)"], "3"),
    ],
)
def test_dim_variants(argv, expected):
    assert run(argv) == (0, expected)


def test_tensor_and_hom():
    assert run(["tensor", "O(1/2)", "O(1/3)"]) == (0, "O(5/6)")
    assert run(["hom", "O(1)", "O(1)"]) == (0, "O(0)")
    status, doc = run(["tensor", "O(1/2)", "O(1/2)", "--format", "json"])
    assert json.loads(doc) == [[1, 1, 4]]


def test_info():
    status, doc = run(["info", "O(1/3) + O(6/5)", "--format", "json"])
    data = json.loads(doc)
    assert data["polygon"] == [[0, 0], [5, 6], [8, 7]]
    assert data["instability"] == 13 and data["semistable"] is False
    assert run(["info", "0"])[0] == 0


def test_ext_enum_and_filtration():
    status, doc = run(["ext-enum", "--f1", "O(0)^2", "--f2", "O(2)", "--format", "json"])
    data = json.loads(doc)
    assert data["count"] == 4 and data["exists"]
    assert data["witness"][0] == [[0, 0], [1, 2], [3, 2]]
    status, doc = run(["filtration", "--e", "O(0)^3", "--graded", "O(-1)", "O(0)", "O(1)"])
    assert doc.splitlines() == ["E_0 = 0", "E_1 = O(-1)", "E_2 = O(-1/2)", "E_3 = O(0)^3"]
    status, doc = run(["filtration", "--e", "O(1)^3", "--graded", "O(-1)", "O(0)", "O(1)", "--format", "json"])
    assert json.loads(doc) == {"exists": False, "witness": [], "count": 0}


def test_closure_and_poset():
    assert run(["closure", "--target", "O(9/4)+O(-1/2)^2", "--stratum", "O(1/3)+O(6/5)"]) == (0, "true")
    assert run(["closure", "--target", "[[0,0],[5,6],[8,7]]", "--stratum", "[[0,0],[4,9],[8,7]]"]) == (0, "false")
    status, doc = run(["poset", "--ceiling", "[[0,0],[1,2],[3,2]]", "--format", "json"])
    data = json.loads(doc)
    assert len(data["nodes"]) == 4 and data["edges"] == [[1, 0], [2, 1], [3, 2]]
    status, dot = run(["poset", "--ceiling", "[[0,0],[1,1],[2,1]]", "--format", "dot"])
    assert dot.startswith("digraph strata {") and '"P1" -> "P0";' in dot


def test_render_deterministic():
    argv = ["render", "--lower", "O(1/3)+O(6/5)", "--upper", "O(-1/2)^2+O(9/4)"]
    for fmt in ("svg", "tikz"):
        a = run([*argv, "--format", fmt])
        b = run([*argv, "--format", fmt])
        assert a == b and a[0] == 0
    assert run([*argv, "--format", "json"])[0] == 1


def test_verify_single_and_sweep():
    status, doc = run(["verify", "step1", "--e", "O(1/3)+O(6/5)", "--f", "O(9/4)", "--format", "json"])
    assert status == 0 and json.loads(doc)["passed"]
    status, doc = run(["verify", "step2", "--max-rank", "3", "--max-den", "2", "--max-num", "2"])
    assert status == 0 and doc.startswith("passed")
    status, _ = run(["verify", "dims", "--f1", "O(0)", "--f2", "O(1)"])
    assert status == 0


def test_verify_violation_exits_2(monkeypatch):
    import hnpoly.oracles as oracles

    monkeypatch.setattr(oracles, "deg_hom_nonneg", lambda a, b: 0)
    status, doc = run(["verify", "step1", "--e", "O(0)^2", "--f", "O(1)", "--format", "json"])
    assert status == 2
    assert json.loads(doc)["violations"]


def test_errors_exit_1():
    status, doc = run(["tensor", "O(1/0)", "O(1)"])
    assert status == 1 and "position 4" in doc
    status, doc = run(["ext-check", "--f1", "O(1)", "--f2", "O(0)", "--e", "O(1)+O(0)"])
    assert status == 1 and "mu(f1) < mu(f2)" in doc
    assert run(["dim", "--ext", "--f1", "O(0)"])[0] == 1
    assert run(["tensor", "O(1)", "O(1)", "--format", "dot"])[0] == 1


def test_rank_cap(monkeypatch):
    monkeypatch.setenv("HNPOLY_MAX_RANK", "2")
    status, doc = run(["ext-enum", "--f1", "O(0)^2", "--f2", "O(2)"])
    assert status == 1 and "HNPOLY_MAX_RANK" in doc
    monkeypatch.setenv("HNPOLY_MAX_RANK", "x")
    assert run(["ext-enum", "--f1", "O(0)", "--f2", "O(2)"])[0] == 1


def test_main_prints(capsys):
    assert main(["tensor", "O(1/2)", "O(1/3)"]) == 0
    assert capsys.readouterr().out == "O(5/6)\n"
    assert main(["tensor", "O(1/2", "O(1/3)"]) == 1
    assert "position" in capsys.readouterr().err


@given(bundles(allow_zero=True))
def test_round_trip_through_cli(b):
    status, doc = run(["hom", "O(0)", str(b)])
    assert status == 0 and parse_bundle(doc) == b
    status, doc = run(["hom", "--json", "[[0,1,1]]", json.dumps(bundle_to_json(b)), "--format", "json"])
    assert json.loads(doc) == bundle_to_json(b)


def test_console_script_entry():
    out = subprocess.run(
        [sys.executable, "-m", "hnpoly.cli", "tensor", "O(1/2)", "O(1/3)"],
        capture_output=True, text=True, check=True,
    )
    assert out.stdout == "O(5/6)\n"
