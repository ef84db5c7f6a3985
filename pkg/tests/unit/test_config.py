"""Tests for settings."""

from orbitkit.config import Settings


def test_defaults(monkeypatch):
    monkeypatch.delenv("ORBITKIT_TOL", raising=False)
    s = Settings(_env_file=None)
    assert s.tol == 1e-9
    assert s.jacobi_tol == 1e-10
    assert s.fd_step_flat == 1e-5
    assert s.float_digits == 17
    assert s.haar_workers == 1


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("ORBITKIT_TOL", "1e-6")
    monkeypatch.setenv("ORBITKIT_HAAR_WORKERS", "4")
    s = Settings(_env_file=None)
    assert s.tol == 1e-6
    assert s.haar_workers == 4
