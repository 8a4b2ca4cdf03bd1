from __future__ import annotations

import pytest

from mcalc import verify

ALL_CHECKS = [(suite, check) for suite, checks in verify.SUITES.items() for check in checks]


@pytest.mark.parametrize(("suite", "check"), ALL_CHECKS, ids=[f"{s}:{c.__name__}" for s, c in ALL_CHECKS])
def test_check_passes(suite, check):
    result = check()
    assert result.cases > 0
    assert result.passed, f"{result.name}: {result.max_residual:.3e} > {result.tol:.0e}"


@pytest.mark.parametrize("seed", ["1", "424242"])
@pytest.mark.parametrize(
    "check",
    [verify.check_chain_rule, verify.check_quotient_rule, verify.check_integration_by_parts, verify.check_inequalities],
)
def test_randomized_checks_under_other_seeds(monkeypatch, seed, check):
    monkeypatch.setenv("MCALC_SEED", seed)
    assert verify.seed_from_env() == int(seed)
    assert check().passed


def test_default_seed(monkeypatch):
    monkeypatch.delenv("MCALC_SEED", raising=False)
    assert verify.seed_from_env() == verify.DEFAULT_SEED


def test_run_suite_all_covers_every_suite():
    assert [c.name for c in verify.run_suite("special")] == [c().name for c in verify.SUITES["special"]]
