import json

import pytest

from stickgraph.cli import main

from conftest import G1_TEXT, G2_TEXT


@pytest.fixture
def files(tmp_path):
    g1 = tmp_path / "g1.txt"
    g1.write_text(G1_TEXT)
    g2 = tmp_path / "g2.txt"
    g2.write_text(G2_TEXT)
    iso = tmp_path / "iso.txt"
    iso.write_text("p astick 2 2\ne 1 2\n")
    return tmp_path, str(g1), str(g2), str(iso)


def test_recognize(files, capsys):
    _, g1, g2, _ = files
    assert main(["recognize", g1]) == 0
    assert capsys.readouterr().out.strip() == "a1 a2 b4 a3 a4 b2 a5 b1 b3"
    assert main(["recognize", g2, "--certificate"]) == 1
    assert "step 3" in capsys.readouterr().err
    assert main(["recognize", "missing.txt"]) == 2


def test_recognize_trace(files, capsys):
    _, g1, _, _ = files
    assert main(["recognize", g1, "--trace"]) == 0
    out = capsys.readouterr().out
    assert "3.3.5 D: A1 -> A2 -> b4(2) -> S3* -> b2(4) -> s'1 -> b3(4.5) -> S0" in out


def test_round_trip_recognize_then_verify(files, capsys):
    tmp, g1, _, _ = files
    out = tmp / "order.txt"
    assert main(["recognize", g1, "--order-out", str(out)]) == 0
    assert main(["verify", g1, "--order", out.read_text()]) == 0
    assert "VALID length 38" in capsys.readouterr().out


def test_verify_reports_violation(files, capsys):
    _, g1, _, _ = files
    assert main(["verify", g1, "--order", "a1 a2 a3 a4 a5 b3 b4 b2 b1"]) == 1
    assert "a2 crosses B-segment of b3" in capsys.readouterr().err
    assert main(["verify", g1, "--order", "a1 a2"]) == 2


def test_json_matches_text_verdicts(files, capsys):
    _, g1, g2, _ = files
    for argv, code in ((["recognize", g1], 0), (["recognize", g2], 1), (["closure", g1], 0),
                       (["closure", g2], 1), (["minlen", g1, "--mode", "noverlap"], 0),
                       (["oracle", g2, "recognize"], 1)):
        assert main(["--json", *argv]) == code
        data = json.loads(capsys.readouterr().out)
        assert data.get("accepted", data.get("acyclic", data.get("ok"))) == (code == 0)
    assert main(["recognize", g1, "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["order"] == "a1 a2 b4 a3 a4 b2 a5 b1 b3"


def test_strip_isolated(files, capsys):
    _, _, _, iso = files
    assert main(["recognize", iso]) == 2
    assert main(["recognize", iso, "--strip-isolated"]) == 0
    captured = capsys.readouterr()
    assert "b1" in captured.err and captured.out.strip() == "a1 b1 a2"


def test_closure_output(files, capsys):
    _, g1, _, _ = files
    assert main(["closure", g1]) == 0
    out = capsys.readouterr().out
    assert "forced: b1<b3 b2<b3 b4<b3" in out and "m: b1=5 b2=4 b3=5 b4=2" in out


def test_render_and_minlen(files, capsys):
    tmp, g1, g2, _ = files
    svg = tmp / "g1.svg"
    assert main(["render", g1, "-o", str(svg)]) == 0
    assert svg.read_text().startswith("<svg")
    rep = tmp / "rep.txt"
    assert main(["minlen", g1, "--mode", "ab", "--b-order", "b4 b2 b1 b3", "-o", str(rep)]) == 0
    assert "length: 38" in rep.read_text()
    assert main(["minlen", g1, "--mode", "brute"]) == 0
    assert main(["minlen", g2, "--mode", "heuristic"]) == 1
    assert main(["minlen", g1, "--mode", "ab"]) == 2


def test_oracle_enumerate(files, capsys):
    _, g1, g2, _ = files
    assert main(["oracle", g1, "enumerate"]) == 0
    assert "a1 a2 b4 a3 a4 b2 a5 b1 b3" in capsys.readouterr().out
    assert main(["oracle", g2, "enumerate"]) == 1


def test_gen_and_bench(tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert main(["gen", "--stick", "--na", "6", "--nb", "4", "--seed", "3", "-o", str(out)]) == 0
    assert main(["recognize", str(out)]) == 0
    assert main(["--seed", "2", "gen", "--random", "0.5", "--na", "3", "--nb", "2"]) == 0
    assert capsys.readouterr().out.count("p astick 3 2") == 1
    csv = tmp_path / "b.csv"
    assert main(["bench", "--sizes", "500,1000", "--reps", "1", "--csv", str(csv)]) == 0
    assert csv.read_text().splitlines()[0] == "n_a,n_b,edges,cso_ms,closure_ms,accepted"


def test_usage_errors(capsys):
    assert main([]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["gen", "--na", "2", "--nb", "2"]) == 2
