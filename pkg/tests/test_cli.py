import json

import pytest

from laminations.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_coords_six_values(capsys):
    code, out, _ = run(capsys, "coords", "--example", "vandermonde-m2-n4", "--triangulation", "all")
    assert code == 0
    edges = json.loads(out)["edges"]
    values = {k: v["coeffs"][0] for k, v in edges.items()}
    assert values == {"edge:0-1:1-1": "1/1", "edge:0-2:1-1": "3/1", "edge:0-3:1-1": "7/1",
                      "edge:1-2:1-1": "2/1", "edge:1-3:1-1": "6/1", "edge:2-3:1-1": "4/1"}


def test_coords_tropical_zeros(capsys):
    code, out, _ = run(capsys, "coords", "--example", "vandermonde-m2-n4", "--triangulation", "all", "--tropical")
    assert code == 0
    assert set(json.loads(out)["edges"].values()) == {0}


def test_coords_csv_and_x_kind(capsys):
    code, out, _ = run(capsys, "coords", "--example", "vandermonde-m2-n4", "--kind", "X", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "label,value" and lines[1].startswith("edge:0-2:1-1,")


def test_missing_file_is_input_error(capsys, tmp_path):
    code, _, err = run(capsys, "coords", "--input", str(tmp_path / "nope.json"))
    assert code == 2 and "no such file" in err


def test_unknown_suite_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nonsense")
    assert code == 2 and "unknown suite" in err


def test_precision_exhausted_exit_code(capsys, tmp_path):
    # second flag starts on the first flag's line up to an unknown O(t^3)
    doc = {"unimodular": False, "flags": [
        [[1, 0], [0, 1]],
        [[1, {"lo": 0, "coeffs": [], "trunc": 3}], [0, 1]],
        [[1, 1], [0, 1]]]}
    path = tmp_path / "c.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "coords", "--input", str(path), "--tropical")
    assert code == 3 and "precision" in err


def test_equivalence_failure_exit_code(capsys):
    code, out, _ = run(capsys, "equiv", "--example", "equiv-pair")
    payload = json.loads(out)
    assert code == (0 if payload["equivalent"] else 1)
    if not payload["equivalent"]:
        assert payload["witness"]["values"][0] != payload["witness"]["values"][1]


def test_distance_and_goodlift(capsys):
    code, out, _ = run(capsys, "distance", "--example", "lattice-pair")
    assert code == 0 and json.loads(out)["distance"]["entries"] == [1, -1]
    code, out, _ = run(capsys, "goodlift", "--example", "twisted-m3-n5")
    assert code == 0 and json.loads(out)["ok"] is True


def test_monodromy_example(capsys):
    code, out, _ = run(capsys, "monodromy", "--example", "annulus-diagonal")
    payload = json.loads(out)
    assert code == 0 and payload["length"]["entries"] == [3, -3] and payload["c_lengths"] == [3]
    code, out, _ = run(capsys, "monodromy", "--example", "annulus-diagonal", "--power", "0")
    assert json.loads(out)["length"]["entries"] == [0, 0]


def test_flip_command(capsys, tmp_path):
    target = tmp_path / "tri.json"
    target.write_text(json.dumps({"n": 4, "triangles": [[0, 1, 3], [1, 2, 3]]}))
    code, out, _ = run(capsys, "flip", "--example", "vandermonde-m2-n4", "--to", str(target))
    payload = json.loads(out)
    assert code == 0 and payload["ok"] and len(payload["audits"]) == 1


def test_deterministic_output(capsys):
    outs = [run(capsys, "goodlift", "--generate", "3,5", "--seed", "4")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_compactify_writes_report(capsys, tmp_path):
    code, out, _ = run(capsys, "compactify", "--example", "path-basic", "--samples", "4",
                       "--out", str(tmp_path / "fig"))
    payload = json.loads(out)
    assert code == 0
    assert payload["euclidean_deviations"][1] < 5e-2
    for kind in ("csv", "gnuplot"):
        assert (tmp_path / "fig").joinpath(payload["files"][kind].rsplit("/", 1)[-1]).exists()
    pytest.importorskip("matplotlib")
    assert (tmp_path / "fig" / "compactify.png").stat().st_size > 0


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "monodromy", "--cases", "5")
    payload = json.loads(out)
    assert code == 0 and payload["passed"] and payload["suites"][0]["cases"] == 5


def test_examples_listing(capsys):
    code, out, _ = run(capsys, "examples")
    assert code == 0 and "path-basic" in out.split()


def test_bad_trunc(capsys):
    code, _, _ = run(capsys, "coords", "--generate", "2,4", "--trunc", "0")
    assert code == 2
