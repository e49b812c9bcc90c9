import io
import json

import pytest

from cubiclat.cli import run

PI = {"gram": [[3, 4, 1], [4, 10, -1], [1, -1, 3]],
      "labels": ["h2", "T", "P"],
      "distinguished": {"h2": 0}, "marking": {"T": 1}}


def write(tmp_path, doc, name="l.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def out_json(capsys):
    return json.loads(capsys.readouterr().out)


def test_cubic_sigma(tmp_path, capsys):
    assert run(["cubic", "sigma", write(tmp_path, PI)]) == 0
    doc = out_json(capsys)
    assert doc["gram"] == [[14, 7], [7, 2]]
    assert (doc["alpha"], doc["beta"]) == (7, 2)


def test_cubic_normal_form(tmp_path, capsys):
    assert run(["cubic", "normal-form", write(tmp_path, PI)]) == 0
    doc = out_json(capsys)
    assert (doc["b"], doc["c"]) == (7, 12)


def test_cubic_roots_and_markings(tmp_path, capsys):
    path = write(tmp_path, PI)
    assert run(["cubic", "roots", path]) == 0
    doc = out_json(capsys)
    assert doc["short"] == [] and doc["long"] == []
    assert run(["cubic", "markings", path]) == 0
    assert [0, 1, 0] in out_json(capsys)["markings"]


def test_marking_inferred_when_unique(tmp_path, capsys):
    doc = {"gram": [[3, 4], [4, 10]], "distinguished": {"h2": 0}}
    assert run(["cubic", "normal-form", write(tmp_path, doc)]) != 0  # rank 3 only
    assert run(["cubic", "markings", write(tmp_path, doc)]) == 0


def test_lattice_info(tmp_path, capsys):
    doc = {"gram": [[14, 2], [2, 0]]}
    assert run(["lattice", "info", write(tmp_path, doc)]) == 0
    info = out_json(capsys)
    assert info["det"] == -4
    assert info["signature"] == [1, 1, 0]
    assert info["even"] is True
    assert info["discriminant_group"] == [2, 2]


def test_lattice_overlattices(tmp_path, capsys):
    doc = {"gram": [[14, 3], [3, 0]]}
    assert run(["lattice", "overlattices", write(tmp_path, doc)]) == 0
    overs = out_json(capsys)["overlattices"]
    assert sorted(o["index"] for o in overs) == [1, 3]


def test_lattice_easy_test(tmp_path, capsys):
    doc = {"gram": [[3, 0, 0], [0, 2, 0], [0, 0, 1]]}
    assert run(["--text", "lattice", "easy-test", write(tmp_path, doc)]) == 0
    assert capsys.readouterr().out.startswith("Reject(3)")


def test_k3_classify(tmp_path, capsys):
    doc = {"gram": [[14, 7], [7, 2]], "distinguished": {"H": 0}}
    assert run(["k3", "classify", write(tmp_path, doc)]) == 0
    rep = out_json(capsys)
    assert rep["verdict"] == "Special(3)"
    assert rep["gamma_bound"] == 3


def test_scan(capsys):
    assert run(["cubic", "scan", "--bmax", "7", "--cmax", "4"]) == 0
    rows = out_json(capsys)["rows"]
    assert any(r["b"] == 4 and r["c"] == 4 and r["long_roots"] for r in rows)


def test_paper_check_exit_codes(capsys):
    assert run(["paper", "all", "--check"]) == 0
    capsys.readouterr()
    assert run(["paper", "table1"]) == 0
    doc = out_json(capsys)
    assert doc["reports"][0]["passed"] is True


def test_stdin_input(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(PI)))
    assert run(["cubic", "sigma", "-"]) == 0
    assert out_json(capsys)["alpha"] == 7


def test_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["lattice", "info", str(bad)]) == 1
    assert "malformed JSON" in capsys.readouterr().err
    assert run(["lattice", "info",
                write(tmp_path, {"gram": [[1, 2], [3, 4]]})]) == 1
    assert "symmetric" in capsys.readouterr().err
    assert run(["lattice", "info", str(tmp_path / "missing.json")]) == 1
    capsys.readouterr()
    assert run(["cubic", "sigma",
                write(tmp_path, {"gram": [[3]]})]) == 1  # no distinguished h2
    assert "distinguished" in capsys.readouterr().err


def test_big_integers_roundtrip(tmp_path, capsys):
    big = 2**60
    doc = {"gram": [[str(big)]]}
    assert run(["lattice", "info", write(tmp_path, doc)]) == 0
    info = out_json(capsys)
    assert info["det"] == str(big)
    assert int(info["det"]) == big


def test_text_rendering(tmp_path, capsys):
    assert run(["--text", "cubic", "sigma", write(tmp_path, PI)]) == 0
    out = capsys.readouterr().out
    assert "alpha: 7" in out
    assert run(["--text", "paper", "table1"]) == 0
    assert "== table1 [PASS] ==" in capsys.readouterr().out


def test_byte_identical_output(tmp_path, capsys):
    path = write(tmp_path, PI)
    run(["cubic", "sigma", path])
    first = capsys.readouterr().out
    run(["cubic", "sigma", path])
    assert capsys.readouterr().out == first
