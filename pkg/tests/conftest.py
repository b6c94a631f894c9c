from __future__ import annotations

from functools import lru_cache

import pytest

from mayrmeyer import verifier
from mayrmeyer.field import Field
from mayrmeyer.poly import VarTable


@lru_cache(maxsize=None)
def report(check: str, n: int | None = None, d: int | None = None, r: int | None = None):
    """Verifier reports are pure functions of their inputs; share them across test modules."""
    if check == "facts":
        return verifier.check_facts(seed=1, trials=200)
    params = verifier.default_params(n, d)
    reports = verifier.run_check(check, params, r=r)
    return reports[0]


@pytest.fixture
def xy():
    return VarTable(["x", "y"], Field(13))


@pytest.fixture
def xyz():
    return VarTable(["x", "y", "z"], Field(13))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
