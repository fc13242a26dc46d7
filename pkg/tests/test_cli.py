import json

import pytest

from synchromata import b_series, m_series
from synchromata.cli import main
from synchromata.io import from_json, to_json, to_text
from synchromata.replication import ClaimResult


@pytest.fixture
def b8_path(tmp_path):
    path = tmp_path / "b8.json"
    path.write_text(to_json(b_series(4)))
    return str(path)


def test_gen_json_round_trips(capsys):
    assert main(["gen", "--family", "m-series", "--size", "5"]) == 0
    out = capsys.readouterr().out
    assert from_json(out) == m_series(5)


def test_gen_to_file_and_formats(tmp_path):
    out = tmp_path / "m5.dot"
    assert main(["gen", "--family", "m-series", "--size", "5",
                 "--format", "dot", "-o", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("digraph")
    out2 = tmp_path / "m5.txt"
    assert main(["gen", "--family", "m-series", "--size", "5",
                 "--format", "text", "-o", str(out2)]) == 0
    assert out2.read_text() == to_text(m_series(5))


def test_gen_rejects_bad_parameters(capsys):
    assert main(["gen", "--family", "b-series", "--size", "2"]) == 2
    assert "parameter" in capsys.readouterr().err


def test_analyze(b8_path, capsys):
    assert main(["analyze", b8_path]) == 0
    out = capsys.readouterr().out
    assert "states: 8" in out
    assert "strongly connected: yes" in out
    assert "synchronizing: yes" in out
    assert "reset length:" in out


def test_analyze_text_input(tmp_path, capsys):
    path = tmp_path / "m4.txt"
    path.write_text(to_text(m_series(4)))
    assert main(["analyze", str(path)]) == 0
    assert "reset length: 7" in capsys.readouterr().out


def test_analyze_non_synchronizing_input(tmp_path, capsys):
    path = tmp_path / "spin.txt"
    path.write_text("2 1\n2 1\n")
    assert main(["analyze", str(path)]) == 0
    out = capsys.readouterr().out
    assert "synchronizing: no" in out
    assert "reset length" not in out


def test_extend(b8_path, capsys):
    assert main(["extend", b8_path, "--set", "1,2"]) == 0
    out = capsys.readouterr().out
    assert "shortest extending length: 11" in out
    assert "word: " in out


def test_extend_rejects_bad_subset(b8_path, capsys):
    assert main(["extend", b8_path, "--set", "1,x"]) == 2
    assert main(["extend", b8_path, "--set", "1,99"]) == 2


def test_profile(tmp_path, capsys):
    path = tmp_path / "m4.json"
    path.write_text(to_json(m_series(4)))
    assert main(["profile", str(path)]) == 0
    out = capsys.readouterr().out
    assert "cardinality 1:" in out
    assert "profile:" in out
    assert main(["profile", str(path), "--bound", "3"]) == 2
    assert "bound" in capsys.readouterr().err


def test_avoid(b8_path, capsys):
    assert main(["avoid", b8_path, "--state", "8"]) == 0
    assert "shortest avoiding length: 10" in capsys.readouterr().out


def test_images(b8_path, capsys):
    assert main(["images", b8_path]) == 0
    assert "reachable images: 240" in capsys.readouterr().out
    assert main(["images", b8_path, "--list"]) == 0
    assert "{q1, q2}" in capsys.readouterr().out


def test_conjecture(b8_path, capsys):
    assert main(["conjecture", b8_path]) == 0
    out = capsys.readouterr().out
    assert "worst length: 11" in out
    assert "11/8" in out


def test_layers(tmp_path, capsys):
    path = tmp_path / "m5.json"
    path.write_text(to_json(m_series(5)))
    assert main(["layers", str(path)]) == 0
    assert "full set reached at layer 13" in capsys.readouterr().out
    assert main(["layers", str(path), "--trace"]) == 0
    out = capsys.readouterr().out
    assert "L_0: {q2}" in out
    assert main(["layers", str(path), "--limit", "3"]) == 0
    assert "limit reached" in capsys.readouterr().out


def test_verify_paper(tmp_path, capsys):
    report = tmp_path / "report.json"
    assert main(["verify-paper", "--max-m", "5", "--max-n", "5",
                 "--json", str(report)]) == 0
    out = capsys.readouterr().out
    assert "claims passed" in out
    assert "FAIL" not in out
    data = json.loads(report.read_text())
    assert all(r["status"] in ("pass", "bound-ok") for r in data)
    assert {"claim_id", "parameter", "expected", "computed", "status", "witness"} \
        <= set(data[0])


def test_verify_paper_reports_failures(monkeypatch, capsys):
    import synchromata.cli as cli_mod

    def fake_run_all(max_m, max_n):
        return [ClaimResult("demo", 3, 7, 5, "fail", None)]

    monkeypatch.setattr(cli_mod, "run_all", fake_run_all)
    assert main(["verify-paper"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_usage_errors():
    assert main([]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["gen", "--family", "nosuch", "--size", "3"]) == 2


def test_missing_and_malformed_files(tmp_path, capsys):
    assert main(["analyze", str(tmp_path / "nope.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{broken")
    assert main(["analyze", str(bad)]) == 2
    assert "error:" in capsys.readouterr().err
