import io
import json

import pytest

from cubicforms.cli import main


def run_cli(args, tmp_path):
    out = tmp_path / "out.txt"
    code = main(args + ["--output", str(out)])
    return code, out.read_text()


def test_enumerate_json_lines(tmp_path):
    code, text = run_cli(
        ["enumerate", "--lattice", "1", "--sign", "pos", "--max", "1"], tmp_path
    )
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "schema:1"
    assert len(lines) == 2
    rec = json.loads(lines[1])
    assert rec["lattice"] == 1 and rec["sign"] == "+" and rec["n"] == 1
    assert rec["stab"] == 3 and rec["irreducible"] is False


def test_enumerate_left_column_summary(tmp_path):
    code, text = run_cli(
        ["enumerate", "--lattice", "1", "--sign", "neg", "--max", "51"], tmp_path
    )
    assert code == 0
    recs = [json.loads(l) for l in text.strip().splitlines()[1:]]
    ns = sorted({r["n"] for r in recs})
    assert len(ns) == 25  # 25 populated rows of the left table


def test_enumerate_empty(tmp_path):
    code, text = run_cli(
        ["enumerate", "--lattice", "4", "--sign", "pos", "--max", "2"], tmp_path
    )
    assert code == 0
    assert text.strip() == "schema:1"


def test_coeffs_csv(tmp_path):
    code, text = run_cli(
        ["coeffs", "--lattice", "1", "--sign", "pos", "--max", "16"], tmp_path
    )
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "schema:1"
    assert lines[1] == "n,weighted,unweighted,irreducible_weighted,reducible_weighted"
    rows = {l.split(",")[0]: l for l in lines[2:]}
    assert rows["1"].split(",")[1] == "1/3"
    assert rows["16"].split(",")[1] == "4/3"


def test_table_dump_golden(tmp_path):
    code, text = run_cli(["table", "--side", "right", "--dump-golden"], tmp_path)
    assert code == 0
    lines = text.strip().splitlines()
    assert len(lines) == 27  # schema + header + 25 rows
    assert lines[2] == "1,1,1,1,0,1,1,1,1,0,0"


def test_table_computed_matches_golden(tmp_path):
    _, computed = run_cli(["table", "--side", "left"], tmp_path)
    _, golden = run_cli(["table", "--side", "left", "--dump-golden"], tmp_path)
    assert computed == golden


def test_workers_byte_identical(tmp_path):
    _, a = run_cli(
        ["enumerate", "--lattice", "3", "--sign", "neg", "--max", "40"], tmp_path
    )
    _, b = run_cli(
        ["enumerate", "--lattice", "3", "--sign", "neg", "--max", "40", "--workers", "3"],
        tmp_path,
    )
    assert a == b


def test_verify_suite_exit_codes(tmp_path):
    code, text = run_cli(["verify", "--suite", "congruence"], tmp_path)
    assert code == 0
    assert "[PASS]" in text


def test_verify_rank(tmp_path):
    code, text = run_cli(["verify", "--suite", "rank"], tmp_path)
    assert code == 0
    assert "rank = 14" in text


def test_density_csv(tmp_path):
    code, text = run_cli(
        ["density", "--lattice", "1", "--sign", "pos", "--max", "1000",
         "--checkpoints", "3"],
        tmp_path,
    )
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "schema:1"
    assert lines[1].startswith("X,S_unweighted,S_weighted,prediction")
    assert len(lines) >= 4


def test_usage_errors():
    assert (
        main(
            ["density", "--lattice", "1", "--sign", "pos", "--max", "1000",
             "--checkpoints", "0"]
        )
        == 2
    )
    assert (
        main(["density", "--lattice", "1", "--sign", "pos", "--max", str(10 ** 8)])
        == 2
    )
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "bogus"])
    assert exc.value.code == 2


def test_mutation_flips_verify(tmp_path, monkeypatch):
    # perturbing a single golden entry must flip the tables suite to FAIL
    import cubicforms.golden as gold

    rows = list(gold.RIGHT_ROWS)
    n, vals = rows[0]
    rows[0] = (n, tuple(v + 1 for v in vals[:1]) + vals[1:])
    monkeypatch.setattr(gold, "GOLDEN_RIGHT", gold.GoldenTable("right", tuple(rows)))
    code = main(["verify", "--suite", "tables", "--output", str(tmp_path / "o")])
    assert code == 1
