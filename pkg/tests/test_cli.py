import json
from fractions import Fraction

import pytest

from tnnflag.cli import run
from tnnflag.plucker import phi

EX_V, EX_W = "1324", "4213"
EX_A = {1: Fraction(2), 2: Fraction(3), 4: Fraction(5)}


def _json_out(capsys):
    return json.loads(capsys.readouterr().out)


def test_cell_identity(capsys):
    assert run(["cell", "1234", "1234"]) == 0
    out = _json_out(capsys)
    assert out["dimension"] == 0 and out["edges"] == []


def test_cell_example_cell(capsys):
    assert run(["cell", EX_V, EX_W]) == 0
    out = _json_out(capsys)
    assert out["dimension"] == 3
    assert out["weight_ids"] == [1, 2, 4]
    assert out["source_labels_bottom_to_top"] == [1, 3, 2, 4]


def test_cell_rejects_non_bruhat(capsys):
    assert run(["cell", "213", "132"]) == 2
    assert "Bruhat" in capsys.readouterr().err


def test_cell_respects_max_n(capsys):
    assert run(["--max-n", "3", "cell", "12345", "12345"]) == 2


def test_plucker_and_decide_roundtrip(tmp_path, capsys):
    weights = tmp_path / "a.json"
    weights.write_text(json.dumps({"1": "2", "2": "3", "4": "5"}))
    assert run(["plucker", EX_V, EX_W, "--weights", str(weights)]) == 0
    vec = capsys.readouterr().out
    vector_file = tmp_path / "vec.json"
    vector_file.write_text(vec)

    assert run(["decide", str(vector_file)]) == 0
    cert = _json_out(capsys)
    assert cert["verdict"] == "member"
    assert cert["v"] == EX_V and cert["w"] == EX_W
    assert cert["weights"] == {"1": "2", "2": "3", "4": "5"}


def test_decide_non_member_exits_1(tmp_path, capsys):
    p = phi((1, 3, 2, 4), (4, 2, 1, 3), EX_A)
    p.coords[(2, 3)] = -p.coords[(2, 3)]
    vector_file = tmp_path / "neg.json"
    vector_file.write_text(json.dumps(p.to_json_dict()))
    assert run(["decide", str(vector_file)]) == 1
    cert = _json_out(capsys)
    assert cert["verdict"] == "non-member"
    assert cert["witness"]["type"] == "negative-coordinate"


def test_trop_decide(tmp_path, capsys):
    weights = tmp_path / "x.json"
    weights.write_text(json.dumps({"1": "2", "2": "3", "4": "5"}))
    assert run(["plucker", EX_V, EX_W, "--weights", str(weights),
                "--tropical"]) == 0
    vec = capsys.readouterr().out
    vector_file = tmp_path / "trop.json"
    vector_file.write_text(vec)
    assert run(["trop-decide", str(vector_file)]) == 0
    cert = _json_out(capsys)
    assert cert["verdict"] == "member"
    # mode mismatch is malformed input, not a verdict
    assert run(["decide", str(vector_file)]) == 2


def test_extremal_subcommand(tmp_path, capsys):
    p = phi((1, 3, 2, 4), (4, 2, 1, 3), EX_A)
    vector_file = tmp_path / "vec.json"
    vector_file.write_text(json.dumps(p.to_json_dict()))
    assert run(["extremal", str(vector_file)]) == 0
    out = _json_out(capsys)
    assert out["chains"] == [
        {"size": 1, "chain": ["1", "3"]},
        {"size": 2, "chain": ["1,3", "2,3"]},
        {"size": 3, "chain": ["1,2,3", "1,3,4", "2,3,4"]},
    ]


def test_relations_subcommand(capsys):
    assert run(["relations", "3", "--three-term"]) == 0
    out = _json_out(capsys)
    assert out["count"] == 1
    assert out["relations"][0]["terms"] == [
        [1, "1", "2,3"], [-1, "2", "1,3"], [1, "3", "1,2"]]


def test_malformed_inputs(tmp_path, capsys):
    assert run(["decide", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["decide", str(bad)]) == 2
    bad.write_text(json.dumps({"n": 3, "mode": "classical",
                               "coords": {"1,2,3": "1"}}))
    assert run(["decide", str(bad)]) == 2
    capsys.readouterr()


def test_output_is_byte_identical_across_runs(capsys):
    run(["cell", EX_V, EX_W])
    first = capsys.readouterr().out
    run(["cell", EX_V, EX_W])
    assert capsys.readouterr().out == first


def test_verify_small(capsys):
    assert run(["--seed", "1", "verify", "2"]) == 0
    out = _json_out(capsys)
    assert out["depth"] == "full"
    assert out["cells_checked"] == out["total_cells"] == 3
    assert out["top_cell_extremal"]["with_full_set"] == \
        out["top_cell_extremal"]["expected_with_full_set"]
