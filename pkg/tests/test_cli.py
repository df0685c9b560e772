import json
import os
from pathlib import Path

import pytest

from tiltkit.cli import run

GOLDEN = Path(__file__).parent / "golden"


def _run(capsys, argv, expect_code=0):
    code = run(argv)
    out = capsys.readouterr().out
    assert code == expect_code, out
    return out


def test_analyze_golden(capsys):
    out = _run(
        capsys, ["analyze", "--cartan", str(GOLDEN / "four_vertex_cartan_input.json")]
    )
    assert out == (GOLDEN / "analyze_four_vertex.json").read_text()


def test_brauer_decide_golden(capsys):
    out = _run(capsys, ["brauer", "decide", "--graph", str(GOLDEN / "digon_input.json")])
    assert out == (GOLDEN / "brauer_decide_digon.json").read_text()
    assert json.loads(out)["tilting_discrete"] is False


def test_brauer_certify_golden(capsys):
    out = _run(capsys, ["brauer", "certify", "--graph", str(GOLDEN / "digon_input.json")])
    assert out == (GOLDEN / "brauer_certify_digon.json").read_text()


def test_family_golden_and_pipe(capsys, monkeypatch, tmp_path):
    out = _run(capsys, ["family", "--name", "kronecker_te", "--l", "2"])
    assert out == (GOLDEN / "family_kronecker_te_l2.json").read_text()
    # feed the family output into analyze via a file standing in for the pipe
    f = tmp_path / "c.json"
    f.write_text(out)
    report = json.loads(_run(capsys, ["analyze", "--cartan", str(f)]))
    assert report["symmetrized_definiteness"] == "positive_semidefinite_singular"
    assert report["regular"] is False


def test_alternating_golden(capsys):
    out = _run(capsys, ["explore", "alternating", "--m", "4"])
    assert out == (GOLDEN / "alternating_m4.json").read_text()


def test_lattice_golden(capsys):
    out = _run(capsys, ["lattice", "--family", "c3c3_c2", "--z", "5"])
    assert out == (GOLDEN / "lattice_c3c3_z5.json").read_text()


def test_brauer_dot_golden(capsys):
    out = _run(capsys, ["brauer", "dot", "--graph", str(GOLDEN / "digon_input.json")])
    assert out == (GOLDEN / "digon.dot").read_text()


def test_analyze_identity_trivial(capsys, tmp_path):
    f = tmp_path / "id2.json"
    f.write_text('{"entries": [["1", "0"], ["0", "1"]]}')
    report = json.loads(_run(capsys, ["analyze", "--cartan", str(f)]))
    assert report["symmetrized_definiteness"] == "positive_definite"
    assert report["coxeter"] == [["-1", "0"], ["0", "-1"]]


def test_json_outputs_reparse(capsys):
    # round-trip: every emitted JSON re-parses to an equal value
    for argv in (
        ["family", "--list"],
        ["family", "--name", "bgs", "--n", "4", "--r", "2", "--m", "1", "--full"],
        ["explore", "delta", "--m", "3", "--l", "2", "--t", "5"],
        ["selfinjective", "--cycles", "[[1,2,3]]"],
    ):
        out = _run(capsys, argv)
        data = json.loads(out)
        assert json.loads(json.dumps(data, sort_keys=True)) == data


def test_te_subcommand(capsys, tmp_path):
    f = tmp_path / "c.json"
    f.write_text('{"entries": [["1", "0"], ["1", "1"]]}')
    out = json.loads(_run(capsys, ["te", "--cartan", str(f)]))
    assert out["entries"] == [["2", "1"], ["1", "2"]]


def test_kauer_roundtrip_through_json(capsys, tmp_path):
    out = _run(
        capsys,
        ["brauer", "kauer", "--graph", str(GOLDEN / "digon_input.json"), "--edge", "1"],
    )
    f = tmp_path / "moved.json"
    f.write_text(out)
    verdict = json.loads(_run(capsys, ["brauer", "decide", "--graph", str(f)]))
    assert verdict["tilting_discrete"] is False


def test_exit_code_malformed(capsys, tmp_path):
    out = _run(capsys, ["analyze", "--cartan", "/nonexistent.json"], expect_code=2)
    assert json.loads(out)["error"]["kind"] == "malformed_input"
    f = tmp_path / "bad.json"
    f.write_text("{not json")
    out = _run(capsys, ["analyze", "--cartan", str(f)], expect_code=2)
    assert json.loads(out)["error"]["kind"] == "malformed_input"


def test_exit_code_domain(capsys):
    # leaf-edge mutation is a domain error
    line = {
        "vertices": [
            {"id": "u", "order": ["a1"]},
            {"id": "v", "order": ["a2", "b1"]},
            {"id": "w", "order": ["b2"]},
        ],
        "edges": [
            {"id": "1", "halves": ["a1", "a2"]},
            {"id": "2", "halves": ["b1", "b2"]},
        ],
    }
    import tempfile

    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
        json.dump(line, fh)
        path = fh.name
    out = _run(capsys, ["brauer", "mutate", "--graph", path, "--edge", "1"], expect_code=1)
    assert json.loads(out)["error"]["kind"] == "domain"
    os.unlink(path)
    out = _run(capsys, ["family", "--name", "nope"], expect_code=1)
    assert json.loads(out)["error"]["kind"] == "domain"


def test_env_depth_override(capsys, monkeypatch, tmp_path):
    gens = {
        "T": {"entries": [["-1", "0"], ["1", "1"]]},
        "U": {"entries": [["1", "1"], ["0", "-1"]]},
    }
    f = tmp_path / "gens.json"
    f.write_text(json.dumps(gens))
    monkeypatch.setenv("TILTKIT_DEPTH", "1")
    out = json.loads(_run(capsys, ["explore", "reach-shift", "--gens", str(f)]))
    assert out["status"] == "not_found_within_depth"
    assert out["depth_searched"] == 1
    monkeypatch.setenv("TILTKIT_DEPTH", "3")
    out = json.loads(_run(capsys, ["explore", "reach-shift", "--gens", str(f)]))
    assert out["status"] == "found"
    monkeypatch.setenv("TILTKIT_DEPTH", "oops")
    _run(capsys, ["explore", "reach-shift", "--gens", str(f)], expect_code=2)


def test_determinism(capsys):
    a = _run(capsys, ["family", "--list"])
    b = _run(capsys, ["family", "--list"])
    assert a == b
