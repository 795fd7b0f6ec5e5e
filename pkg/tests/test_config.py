import pytest
from pydantic import ValidationError

from pinpoint.core.config import Settings


def test_defaults():
    s = Settings(_env_file=None)
    assert s.reasoner.node_budget == 1_000_000
    assert s.brute_force_cap == 20
    assert s.sat_backend == "dpll"


def test_nested_environment_override(monkeypatch):
    monkeypatch.setenv("PINPOINT_REASONER__NODE_BUDGET", "500")
    monkeypatch.setenv("PINPOINT_SAT_BACKEND", "pysat")
    s = Settings(_env_file=None)
    assert s.reasoner.node_budget == 500
    assert s.sat_backend == "pysat"


def test_invalid_values_rejected():
    with pytest.raises(ValidationError):
        Settings(_env_file=None, sat_backend="minisat-by-hand")
    with pytest.raises(ValidationError):
        Settings(_env_file=None, bench_workers=0)
