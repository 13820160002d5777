import json

import pytest

from uqcentre.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_hilb_text(capsys):
    code, out, _ = run(capsys, "hilb", "--type", "A", "--rank", "2")
    assert code == 0
    assert "3 elements" in out
    assert "[1, 1]" in out


def test_hilb_json_schema_and_determinism(capsys):
    code, out1, _ = run(capsys, "hilb", "--type", "B", "--rank", "3", "--format", "json")
    assert code == 0
    data = json.loads(out1)
    assert data["type"] == "B" and data["rank"] == 3
    assert sorted(data["elements"]) == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
    assert data["s"] == [1, 1, 1]
    code, out2, _ = run(capsys, "hilb", "--type", "B", "--rank", "3", "--format", "json")
    assert out1 == out2


def test_hilb_invalid_rank(capsys):
    code, _, err = run(capsys, "hilb", "--type", "A", "--rank", "0")
    assert code == 2
    assert "rank" in err


def test_presentation_e6(capsys):
    code, out, _ = run(capsys, "presentation", "--type", "E", "--rank", "6")
    assert code == 0
    assert "14 generators, 8 relations" in out


def test_presentation_g2(capsys):
    code, out, _ = run(capsys, "presentation", "--type", "G", "--rank", "2")
    assert code == 0
    assert "2 generators, 0 relations" in out


def test_presentation_invalid(capsys):
    code, _, _ = run(capsys, "presentation", "--type", "D", "--rank", "2")
    assert code == 2


def test_verify_a3(capsys):
    code, out, _ = run(capsys, "verify", "--type", "A", "--rank", "3")
    assert code == 0
    assert "all checks passed" in out


def test_verify_d5_character_level(capsys):
    code, out, _ = run(capsys, "verify", "--type", "D", "--rank", "5", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True
    names = [c["name"] for r in data["reports"] for c in r["checks"]]
    assert any("character identity" in n for n in names)


def test_verify_type_i(capsys):
    code, out, _ = run(capsys, "verify", "--type", "G", "--rank", "2")
    assert code == 0
    assert "independent" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    import uqcentre.cli as cli
    from uqcentre.report import Report

    def broken(rsys, pres=None):
        rep = Report(title="forced failure")
        rep.add("corrupted golden data", False, "fixture")
        return rep

    monkeypatch.setattr(cli, "verify_relations", broken)
    code, out, _ = run(capsys, "verify", "--type", "A", "--rank", "3")
    assert code == 1
    assert "FAILURES" in out


def test_casimir_m1_k1(capsys):
    code, out, _ = run(capsys, "casimir", "--m", "1", "--k", "1")
    assert code == 0
    assert "central: yes" in out
    assert "K^-1" in out
    assert "Harish-Chandra image: K^1 + K^-1" in out


def test_casimir_k2_expression_in_c(capsys):
    code, out, _ = run(capsys, "casimir", "--m", "1", "--k", "2")
    assert code == 0
    assert "as a polynomial in C = C^(1):" in out
    assert "(q^-1)*C^2" in out and "(-q^-1 - q^-3)" in out


def test_casimir_m0(capsys):
    code, out, _ = run(capsys, "casimir", "--m", "0", "--k", "1")
    assert code == 0
    assert "1" in out


def test_casimir_json_round_trip(capsys):
    code, out, _ = run(capsys, "casimir", "--m", "1", "--k", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["central"] is True
    assert data["m"] == 1 and data["k"] == 2
    assert all(len(term) == 2 for term in data["element"])


def test_casimir_bad_args(capsys):
    code, _, _ = run(capsys, "casimir", "--m", "-1", "--k", "1")
    assert code == 2
    code, _, _ = run(capsys, "casimir", "--m", "1", "--k", "0")
    assert code == 2


def test_resource_cap_exit_3(capsys, monkeypatch):
    import uqcentre.cli as cli
    from uqcentre.errors import ResourceLimitError

    def exhausted(rsys):
        raise ResourceLimitError("orbit cap")

    monkeypatch.setattr(cli, "hilbert_basis", exhausted)
    code, _, err = run(capsys, "hilb", "--type", "E", "--rank", "8")
    assert code == 3
    assert "resource cap" in err


def test_usage_error_exit_2(capsys):
    assert main(["hilb", "--type", "A"]) == 2  # missing --rank
    assert main(["nonsense"]) == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "basis.json"
    code, out, _ = run(
        capsys, "hilb", "--type", "A", "--rank", "2",
        "--format", "json", "--out", str(target),
    )
    assert code == 0 and out == ""
    data = json.loads(target.read_text())
    assert data["rank"] == 2


def test_verify_jobs_flag(capsys):
    code, out, _ = run(capsys, "verify", "--type", "A", "--rank", "2", "--jobs", "2")
    assert code == 0


def test_cache_dir(tmp_path, capsys):
    import uqcentre.character_ring as cr

    cache = tmp_path / "chartables"
    cache.mkdir()
    try:
        code, _, _ = run(
            capsys, "verify", "--type", "A", "--rank", "2",
            "--cache-dir", str(cache),
        )
        assert code == 0
        # character tables were computed, so files should appear
        cr._table_cache.clear()
        cr._full_cache.clear()
        from uqcentre import build_root_system, weight_multiplicities

        t = weight_multiplicities(build_root_system("A", 2), (1, 1))
        assert t.dim == 8
        assert any(cache.iterdir())
    finally:
        cr.set_cache_dir(None)
        cr._table_cache.clear()
        cr._full_cache.clear()
