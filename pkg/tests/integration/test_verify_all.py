"""Integration tests for the acceptance suite."""

import json

import pytest

from orbitkit.cli.main import run
from orbitkit.verification import run_acceptance_suite


def test_selected_criteria_pass():
    result = run_acceptance_suite(seed=0, only={1, 2, 3, 4})
    assert [c.id for c in result.criteria] == [1, 2, 3, 4]
    assert result.passed
    assert all(c.worst_residual == c.worst_residual for c in result.criteria)


def test_verify_all_subset_from_the_cli(capsys, tmp_path):
    metrics = tmp_path / "metrics.prom"
    code = run(["verify-all", "--seed", "3", "--only", "6", "7", "--metrics-file", str(metrics)])
    out, _ = capsys.readouterr()
    assert code == 0
    envelope = json.loads(out)
    assert envelope["residual_summary"]["failed_criteria"] == []
    assert "orbitkit_checks_total" in metrics.read_text()


@pytest.mark.slow
def test_full_suite_passes():
    result = run_acceptance_suite(seed=2024)
    assert len(result.criteria) == 10
    failed = [(c.id, c.name, c.worst_residual) for c in result.criteria if not c.passed]
    assert failed == []


@pytest.mark.slow
def test_verify_all_is_reproducible(capsys):
    assert run(["verify-all", "--seed", "11"]) == 0
    first, _ = capsys.readouterr()
    assert run(["verify-all", "--seed", "11"]) == 0
    second, _ = capsys.readouterr()
    assert first == second
