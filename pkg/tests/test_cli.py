import json

import pytest

from invcensus.cli import main
from invcensus.series import Series, write_series_file

TWO_BY_TWO = [1, 1, 4, 6, 16, 23, 52, 77, 150, 224, 396, 583]


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def run_json(capsys, *argv):
    status, out, err = run(capsys, *argv)
    assert status == 0, err
    return json.loads(out)


def test_census_text_golden(capsys):
    status, out, err = run(capsys, "census", "--n1", "2", "--n2", "2", "--max-degree", "11")
    assert status == 0
    assert "396 q^10 + 583 q^11" in out
    assert out.strip() == (
        "1 + q + 4 q^2 + 6 q^3 + 16 q^4 + 23 q^5 + 52 q^6 + 77 q^7"
        " + 150 q^8 + 224 q^9 + 396 q^10 + 583 q^11"
    )


def test_census_text_trivial(capsys):
    status, out, _ = run(capsys, "census", "--n1", "1", "--n2", "1", "--max-degree", "3")
    assert status == 0
    assert out.strip() == "1 + q + q^2 + q^3"


def test_census_json_envelope(capsys):
    doc = run_json(
        capsys, "census", "--n1", "2", "--n2", "2", "--max-degree", "4", "--format", "json"
    )
    assert list(doc) == ["command", "input", "result", "versions", "timing_ms"]
    assert doc["command"] == "census"
    assert doc["input"]["n1"] == 2
    assert doc["input"]["max_degree"] == 4
    assert doc["result"] == {"truncation_degree": 4, "coefficients": [1, 1, 4, 6, 16]}
    assert doc["versions"]["cache_format"] == 1
    assert isinstance(doc["timing_ms"], int)


def test_census_json_corrected_degree_twelve(capsys):
    doc = run_json(
        capsys, "census", "--n1", "2", "--n2", "2", "--max-degree", "12", "--format", "json"
    )
    assert doc["result"]["coefficients"] == TWO_BY_TWO + [964]


def test_census_degree_limit_error(capsys):
    status, out, err = run(capsys, "census", "--n1", "1", "--n2", "1", "--max-degree", "13")
    assert status == 1
    assert out == ""
    assert "exceeds the configured limit" in err


def test_census_rejects_bad_dimension(capsys):
    with pytest.raises(SystemExit):
        main(["census", "--n1", "0", "--n2", "2", "--max-degree", "3"])
    assert "positive integer" in capsys.readouterr().err


def test_molien_check_agreement(capsys):
    status, out, _ = run(
        capsys, "molien", "--n1", "2", "--n2", "2", "--max-degree", "5", "--check"
    )
    assert status == 0
    assert "1 + q + 4 q^2 + 6 q^3 + 16 q^4 + 23 q^5" in out
    assert "census agreement: OK" in out


def test_molien_trivial(capsys):
    status, out, _ = run(capsys, "molien", "--n1", "1", "--n2", "1", "--max-degree", "2")
    assert status == 0
    assert out.strip() == "1 + q + q^2"


def test_molien_json_with_check(capsys):
    doc = run_json(
        capsys,
        "molien", "--n1", "2", "--n2", "1", "--max-degree", "6",
        "--check", "--format", "json",
    )
    assert doc["result"]["coefficients"] == [1, 1, 2, 2, 3, 3, 4]
    assert doc["result"]["census_agreement"] == "OK"


def test_molien_check_disagreement_exits_nonzero(capsys, monkeypatch):
    monkeypatch.setattr(
        "invcensus.cli.molien_series", lambda *args, **kwargs: Series([1, 2])
    )
    status, out, err = run(capsys, "molien", "--n1", "1", "--n2", "1", "--max-degree", "1", "--check")
    assert status == 1
    assert out == ""
    assert "census disagreement at degree 1" in err


def test_kron_golden_expansion(capsys):
    status, out, _ = run(capsys, "kron", "6,2", "6,2")
    assert status == 0
    assert out.splitlines() == [
        "{8}: 1",
        "{7,1}: 1",
        "{6,2}: 2",
        "{6,1,1}: 1",
        "{5,3}: 1",
        "{5,2,1}: 2",
        "{5,1,1,1}: 1",
        "{4,4}: 1",
        "{4,3,1}: 1",
        "{4,2,2}: 1",
    ]


def test_kron_sign_twist(capsys):
    status, out, _ = run(capsys, "kron", "2,1", "1,1,1")
    assert status == 0
    assert out.strip() == "{2,1}: 1"


def test_kron_with_trivial_representation(capsys):
    status, out, _ = run(capsys, "kron", "3", "2,1")
    assert status == 0
    assert out.strip() == "{2,1}: 1"


def test_kron_weight_mismatch(capsys):
    status, out, err = run(capsys, "kron", "4", "2,1")
    assert status == 1
    assert out == ""
    assert "weights differ" in err


def test_kron_parse_error(capsys):
    status, out, err = run(capsys, "kron", "1,2", "2,1")
    assert status == 1
    assert out == ""
    assert "weakly decreasing" in err


def test_kron_json(capsys):
    doc = run_json(capsys, "kron", "2,1", "2,1", "--format", "json")
    assert doc["result"]["weight"] == 3
    assert doc["result"]["terms"] == [
        {"partition": [3], "multiplicity": 1},
        {"partition": [2, 1], "multiplicity": 1},
        {"partition": [1, 1, 1], "multiplicity": 1},
    ]


def test_char_values(capsys):
    status, out, _ = run(capsys, "char", "2,1", "3")
    assert status == 0
    assert out.strip() == "-1"
    status, out, _ = run(capsys, "char", "3", "1,1,1")
    assert status == 0
    assert out.strip() == "1"


def test_table_text(capsys):
    status, out, _ = run(capsys, "table", "3")
    assert status == 0
    lines = out.splitlines()
    assert lines[0].split() == ["3", "2,1", "1,1,1"]
    assert lines[1].split() == ["3", "1", "1", "1"]
    assert lines[2].split() == ["2,1", "-1", "0", "2"]
    assert lines[3].split() == ["1,1,1", "1", "-1", "1"]


def test_table_json(capsys):
    doc = run_json(capsys, "table", "3", "--format", "json")
    assert doc["result"]["partitions"] == [[3], [2, 1], [1, 1, 1]]
    assert doc["result"]["values"] == [[1, 1, 1], [-1, 0, 2], [1, -1, 1]]


def test_table_resource_limit(capsys):
    status, out, err = run(capsys, "table", "17")
    assert status == 1
    assert out == ""
    assert "too large" in err


def test_factor_rediscovers_saturated_denominator(capsys, tmp_path):
    path = tmp_path / "target.json"
    write_series_file(path, Series(TWO_BY_TWO))
    status, out, _ = run(
        capsys,
        "factor", "--series-file", str(path),
        "--free-generators", "9", "--max-factor-degree", "9", "--limit", "1",
    )
    assert status == 0
    assert "num {4,5,6,6,6,6,7,7,8,8,9,9} / den {1,2,2,2,3,3,4,4,4}" in out
    assert "match through degree 9" in out
    assert "first mismatch at degree 10 (candidate 398, target 396)" in out


def test_factor_all_ones(capsys, tmp_path):
    path = tmp_path / "ones.json"
    write_series_file(path, Series([1] * 7))
    status, out, _ = run(capsys, "factor", "--series-file", str(path), "--free-generators", "1")
    assert status == 0
    assert "num {} / den {1}" in out
    assert "matches the target through degree 6 (full truncation)" in out


def test_factor_json(capsys, tmp_path):
    path = tmp_path / "single_qubit.json"
    write_series_file(path, Series([1, 1, 2, 2, 3, 3, 4, 4, 5]))
    doc = run_json(
        capsys,
        "factor", "--series-file", str(path),
        "--free-generators", "2", "--format", "json",
    )
    top = doc["result"]["candidates"][0]
    assert top["numerator_degrees"] == []
    assert top["denominator_degrees"] == [1, 2]
    assert top["free_generator_count"] == 2
    assert top["match_degree"] == 8
    assert top["first_mismatch"] is None
    assert top["fully_factored"] is True


def test_factor_missing_file(capsys):
    status, out, err = run(
        capsys, "factor", "--series-file", "/nonexistent/series.json", "--free-generators", "1"
    )
    assert status == 1
    assert out == ""
    assert "/nonexistent/series.json" in err


def test_factor_malformed_file(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    status, out, err = run(capsys, "factor", "--series-file", str(path), "--free-generators", "1")
    assert status == 1
    assert out == ""
    assert "line 1" in err
    path.write_text('{"truncation_degree": 1, "coefficients": [1, 1.5]}', encoding="utf-8")
    status, _, err = run(capsys, "factor", "--series-file", str(path), "--free-generators", "1")
    assert status == 1
    assert "coefficients" in err


def test_json_determinism(capsys):
    first = run_json(
        capsys, "census", "--n1", "2", "--n2", "2", "--max-degree", "6", "--format", "json"
    )
    second = run_json(
        capsys, "census", "--n1", "2", "--n2", "2", "--max-degree", "6", "--format", "json"
    )
    del first["timing_ms"], second["timing_ms"]
    assert json.dumps(first) == json.dumps(second)


def test_cache_dir_from_environment(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("INVCENSUS_CACHE", str(tmp_path))
    doc = run_json(capsys, "table", "5", "--format", "json")
    assert doc["input"]["cache_dir"] == str(tmp_path)
    assert (tmp_path / "sym-characters-n5.v1.json").exists()
    again = run_json(capsys, "table", "5", "--format", "json")
    assert again["result"] == doc["result"]


def test_cache_dir_flag_beats_environment(capsys, tmp_path, monkeypatch):
    env_dir = tmp_path / "env"
    flag_dir = tmp_path / "flag"
    env_dir.mkdir()
    flag_dir.mkdir()
    monkeypatch.setenv("INVCENSUS_CACHE", str(env_dir))
    doc = run_json(capsys, "table", "4", "--cache-dir", str(flag_dir), "--format", "json")
    assert doc["input"]["cache_dir"] == str(flag_dir)
    assert (flag_dir / "sym-characters-n4.v1.json").exists()
    assert not (env_dir / "sym-characters-n4.v1.json").exists()


def test_threads_flag_echoed(capsys):
    doc = run_json(
        capsys,
        "census", "--n1", "1", "--n2", "1", "--max-degree", "2",
        "--threads", "4", "--format", "json",
    )
    assert doc["input"]["threads"] == 4


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "invcensus" in capsys.readouterr().out
