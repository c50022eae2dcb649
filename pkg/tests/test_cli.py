"""CLI contract: exit codes, output schemas, determinism, frozen comparisons."""

from __future__ import annotations

import json

import pytest

from delpezzo._freeze import DEFAULT_FROZEN_PATH


def _strip_elapsed(csv_text: str) -> list[str]:
    lines = csv_text.strip().splitlines()
    return [line.rsplit(",", 1)[0] for line in lines]


def test_list_shows_all_twenty_surfaces(run_cli):
    run = run_cli("list")
    assert run.code == 0
    rows = run.stdout.strip().splitlines()
    assert rows[0] == "id,degree,singularity,lines,rho"
    assert len(rows) == 21
    assert any(row.startswith("q-v,4,3A1,6,6") for row in rows)


def test_verify_passes(run_cli):
    run = run_cli("verify")
    assert run.code == 0
    assert "verify: 6/6 checks passed" in run.stdout
    assert "FAIL" not in run.stdout


def test_count_brute_spec_example(run_cli):
    run = run_cli("count", "--surface", "q-v-work", "--B", "40", "--method", "brute")
    assert run.code == 0
    header, row = run.stdout.strip().splitlines()
    assert header == "surface_id,method,B,N,elapsed_ms"
    assert row.startswith("q-v-work,brute,40,796,")


def test_torsor_count_equals_divisor_oracle(run_cli):
    torsor = run_cli("torsor-count", "--B", "100")
    divisor = run_cli("count", "--surface", "q-v-work", "--B", "100", "--method", "divisor")
    assert torsor.code == divisor.code == 0
    n_torsor = torsor.stdout.strip().splitlines()[-1].split(",")[3]
    n_divisor = divisor.stdout.strip().splitlines()[-1].split(",")[3]
    assert n_torsor == n_divisor == "3992"


def test_lines_spec_example(run_cli):
    run = run_cli("lines", "--surface", "c-cayley", "--coord-bound", "2")
    assert run.code == 0
    rows = run.stdout.strip().splitlines()
    assert rows[-1] == "n=9"
    assert len(rows) == 10


def test_byte_identical_outputs_modulo_elapsed(run_cli):
    first = run_cli("count", "--surface", "q-v-work", "--B", "10", "20", "--method", "brute")
    second = run_cli("count", "--surface", "q-v-work", "--B", "10", "20", "--method", "brute")
    assert first.code == second.code == 0
    assert _strip_elapsed(first.stdout) == _strip_elapsed(second.stdout)


def test_output_file_matches_stdout(run_cli, tmp_path):
    path = tmp_path / "out.csv"
    to_file = run_cli("torsor-count", "--B", "40", "--output", str(path))
    to_stdout = run_cli("torsor-count", "--B", "40")
    assert to_file.code == 0 and to_file.stdout == ""
    assert _strip_elapsed(path.read_text(encoding="utf-8")) == _strip_elapsed(to_stdout.stdout)


def test_json_format(run_cli):
    run = run_cli("torsor-count", "--B", "10", "20", "--format", "json")
    rows = json.loads(run.stdout)
    assert [r["N"] for r in rows] == [104, 286]
    assert rows[0]["method"] == "torsor"


def test_exit_code_unknown_surface(run_cli):
    run = run_cli("count", "--surface", "q-nope", "--B", "5")
    assert run.code == 2
    assert "q-nope" in run.stderr


def test_exit_code_infeasible_b(run_cli):
    run = run_cli("count", "--surface", "q-v", "--B", "500", "--method", "brute")
    assert run.code == 3


def test_exit_code_budget_exceeded(run_cli):
    run = run_cli("ternary", "--box", "64x64x64x64x64x64x64")
    assert run.code == 3


def test_exit_code_io_failure(run_cli):
    missing = run_cli("fit", "--csv", "/nonexistent/series.csv", "--model", "exponent")
    assert missing.code == 4
    unwritable = run_cli("torsor-count", "--B", "10", "--output", "/nonexistent/dir/out.csv")
    assert unwritable.code == 4


def test_exit_code_bad_b_grid(run_cli):
    run = run_cli("torsor-count", "--B", "40", "20")
    assert run.code == 2


def test_method_restricted_to_working_model(run_cli):
    run = run_cli("count", "--surface", "q-v", "--B", "10", "--method", "torsor")
    assert run.code == 2


def test_frozen_comparison_detects_drift(run_cli, tmp_path):
    source = DEFAULT_FROZEN_PATH.read_text(encoding="utf-8")
    assert "count:q-v-work|brute|40=796" in source
    tampered = tmp_path / "frozen.txt"
    tampered.write_text(
        source.replace("count:q-v-work|brute|40=796", "count:q-v-work|brute|40=797"),
        encoding="utf-8",
    )
    run = run_cli(
        "--frozen-file", str(tampered),
        "count", "--surface", "q-v-work", "--B", "40", "--method", "brute",
    )
    assert run.code == 1
    assert "frozen mismatch" in run.stderr


def test_freeze_records_new_keys(run_cli, tmp_path):
    path = tmp_path / "frozen.txt"
    first = run_cli("--frozen-file", str(path), "--freeze", "torsor-count", "--B", "16")
    assert first.code == 0
    assert "count:q-v-work|torsor|16=210" in path.read_text(encoding="utf-8")
    # a normal run now compares cleanly against the recorded value
    second = run_cli("--frozen-file", str(path), "torsor-count", "--B", "16")
    assert second.code == 0


def test_shipped_frozen_file_agrees_with_recomputation(run_cli):
    # the packaged regression constants are live: normal runs compare
    run = run_cli("count", "--surface", "q-v-work", "--B", "2", "3", "4", "8", "--method", "brute")
    assert run.code == 0
    run = run_cli("ternary", "--box", "1x2x1x1x1x1x3")
    assert run.code == 0
    assert run.stdout.strip().splitlines()[-1] == "1x2x1x1x1x1x3,0,2,0.0"


@pytest.mark.slow
def test_fit_pipeline_from_cli_csv(run_cli, tmp_path):
    path = tmp_path / "series.csv"
    series = run_cli(
        "torsor-count", "--B", "1000", "10000", "100000", "1000000", "--output", str(path)
    )
    assert series.code == 0
    fit = run_cli(
        "fit", "--csv", str(path), "--surface", "q-v-work", "--method", "torsor",
        "--model", "exponent",
    )
    assert fit.code == 0
    payload = json.loads(fit.stdout)
    assert 0.9 <= payload["fitted_exponent"] <= 1.3
    constant = run_cli("fit", "--csv", str(path), "--model", "constant", "--rho", "6")
    assert constant.code == 0
    assert json.loads(constant.stdout)["fitted_c"] > 0


def test_fit_constant_requires_rho(run_cli, tmp_path):
    path = tmp_path / "series.csv"
    run_cli("torsor-count", "--B", "10", "20", "30", "40", "--output", str(path))
    run = run_cli("fit", "--csv", str(path), "--model", "constant")
    assert run.code == 2


def test_dyadic_partition_subcommand(run_cli):
    run = run_cli("dyadic", "--partition", "--B", "100")
    assert run.code == 0
    assert run.stdout == "partition=3992\ntorsor=3992\nmatch=true\n"
