"""The twelve acceptance criteria, each printing one PASS/FAIL line.

Every criterion is implemented in :mod:`gent.verify` so that ``gent verify``
and this file run identical checks; criterion 7 runs here over the whole
graph atlas up to seven vertices rather than the CLI's default sample.
"""

from __future__ import annotations

import pytest

from gent import verify


def _run(check):
    print(check.line())
    assert check.passed, check.line()


@pytest.mark.parametrize("criterion", [1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12])
def test_criterion(criterion):
    _run(verify.CRITERIA[criterion](seed=0))


@pytest.mark.slow
def test_criterion_7_full_atlas():
    _run(verify.criterion_7(seed=0, sample=None))
