"""Acceptance suite: one test per exit criterion, each printing a verdict
line and enforcing both correctness and the stated runtime budget."""

import pytest

from glcdist.selftest import CRITERIA, run_criterion


@pytest.mark.parametrize(
    "index", range(1, len(CRITERIA) + 1), ids=[name for name, _, _ in CRITERIA]
)
def test_acceptance_criterion(index, capsys):
    result = run_criterion(index)
    with capsys.disabled():
        print()
        print(result.line())
    assert result.passed, f"criterion {index} failed: {result.detail}"
    assert result.within_budget, (
        f"criterion {index} exceeded its budget: {result.elapsed:.2f}s "
        f">= {result.budget:.0f}s"
    )
