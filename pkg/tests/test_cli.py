import dataclasses
import importlib
import json

import pytest

import gbei.cli
from gbei.cli import main


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(argv, capsys):
    code, out, err = run(argv, capsys)
    return code, json.loads(out), err


# ---------------------------------------------------------------------------
# predict

def test_predict(capsys):
    code, doc, _ = run_json(["predict", "--m", "3", "--parts", "2,2"], capsys)
    assert code == 0
    assert doc["dim"] == 6 and doc["mult"] == 12
    assert doc["cd"] == {"exact": 7}


def test_predict_char_zero(capsys):
    code, doc, _ = run_json(
        ["predict", "--m", "3", "--parts", "2,2", "--char-zero"], capsys)
    assert code == 0
    assert doc["cd"] == {"lower": 7, "upper": 9}


def test_predict_to_file(tmp_path, capsys):
    out = tmp_path / "prediction.json"
    code, stdout, _ = run(
        ["predict", "--m", "2", "--parts", "1,2", "--output", str(out)], capsys)
    assert code == 0 and stdout == ""
    assert json.loads(out.read_text())["dim"] == 4


def test_parts_reordered_with_note(capsys):
    code, doc, err = run_json(["predict", "--m", "2", "--parts", "2,1"], capsys)
    assert code == 0
    assert "reordered ascending to 1,2" in err
    assert doc["dim"] == 4


# ---------------------------------------------------------------------------
# verify and sweep

def test_verify(capsys):
    code, doc, _ = run_json(["verify", "--m", "2", "--parts", "1,2"], capsys)
    assert code == 0
    assert len(doc["invariants"]) == 9
    assert all(row["status"] == "match" for row in doc["invariants"])


def test_verify_exit_one_on_mismatch(capsys, monkeypatch):
    # "gbei.verify" the attribute is the re-exported function; grab the module
    verify_mod = importlib.import_module("gbei.verify")
    real = verify_mod.predict

    def skewed(spec, char_zero=False):
        pred = real(spec, char_zero)
        return dataclasses.replace(pred, dim=pred.dim + 1)

    monkeypatch.setattr(verify_mod, "predict", skewed)
    code, doc, _ = run_json(["verify", "--m", "2", "--parts", "1,1"], capsys)
    assert code == 1
    assert doc["invariants"][0]["status"] == "mismatch"


def test_verify_respects_caps(capsys):
    code, doc, _ = run_json(
        ["verify", "--m", "2", "--parts", "2,2", "--groebner-max-vars", "4"],
        capsys)
    assert code == 0
    assert doc["invariants"][0]["status"] == "skipped(groebner-cap)"


def test_sweep(capsys):
    code, doc, _ = run_json(["sweep", "--max-m", "2", "--max-n", "3"], capsys)
    assert code == 0
    assert len(doc["reports"]) == 3
    assert doc["summary"] == {"match": 27, "mismatch": 0, "skipped": 0}


def test_sweep_bounds_validated(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["sweep", "--max-m", "1", "--max-n", "3"])
    assert exc.value.code == 2


# ---------------------------------------------------------------------------
# hilbert

def test_hilbert(capsys):
    code, doc, _ = run_json(["hilbert", "--m", "2", "--parts", "1,2"], capsys)
    assert code == 0
    assert doc["match"] is True
    assert doc["predicted"] == doc["computed"]
    assert doc["predicted"]["numerator"] == [1, 2, 1]


def test_hilbert_over_cap(capsys):
    code, doc, err = run_json(
        ["hilbert", "--m", "2", "--parts", "1,2", "--groebner-max-vars", "4"],
        capsys)
    assert code == 0
    assert doc["computed"] is None and doc["match"] is None
    assert "oracle series skipped" in err


# ---------------------------------------------------------------------------
# cutsets

def test_cutsets(tmp_path, capsys):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"n": 3, "edges": [[1, 2], [2, 3]]}))
    code, doc, _ = run_json(["cutsets", "--graph", str(path)], capsys)
    assert code == 0
    assert doc == {"n": 3, "cutSets": [[], [2]]}


def test_cutsets_missing_file(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["cutsets", "--graph", "/no/such/file.json"])
    assert exc.value.code == 2


def test_cutsets_cap_is_a_usage_error(tmp_path, capsys):
    path = tmp_path / "big.json"
    path.write_text(json.dumps({"n": 17, "edges": []}))
    with pytest.raises(SystemExit) as exc:
        main(["cutsets", "--graph", str(path)])
    assert exc.value.code == 2


# ---------------------------------------------------------------------------
# argument handling

@pytest.mark.parametrize("argv", [
    [],
    ["predict", "--m", "2", "--parts", "a,b"],
    ["predict", "--m", "2", "--parts", "0,2"],
    ["predict", "--m", "1", "--parts", "1,2"],
    ["predict", "--m", "2", "--parts", "1,2", "--prime", "1"],
    ["verify", "--m", "2", "--parts", "1,2", "--order", "grevlex"],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_prime_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("GBEI_PRIME", "101")
    code, doc, _ = run_json(["verify", "--m", "2", "--parts", "1,1"], capsys)
    assert code == 0
    assert doc["prime"] == 101


def test_bad_environment_prime(capsys, monkeypatch):
    monkeypatch.setenv("GBEI_PRIME", "banana")
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--m", "2", "--parts", "1,1"])
    assert exc.value.code == 2


def test_explicit_prime_wins_over_environment(capsys, monkeypatch):
    monkeypatch.setenv("GBEI_PRIME", "101")
    code, doc, _ = run_json(
        ["verify", "--m", "2", "--parts", "1,1", "--prime", "7"], capsys)
    assert code == 0
    assert doc["prime"] == 7


def test_internal_error_is_exit_three(capsys, monkeypatch):
    def boom(*args, **kwargs):
        raise RuntimeError("synthetic failure")

    monkeypatch.setattr(gbei.cli, "verify", boom)
    code, _, err = run(["verify", "--m", "2", "--parts", "1,1"], capsys)
    assert code == 3
    assert "synthetic failure" in err
