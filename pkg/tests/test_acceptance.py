"""Full-scale acceptance run: one pass/fail line per verification criterion.

Runs every criterion at its full published scale (the same code path as
`overpoly verify --suite all`) and records wall-clock time.  Budgets mirror
the documented limits for the time-bounded suites; the remaining suites are
exact-arithmetic identities with no stated budget.
"""

import time

import pytest

from overpoly.cli import CRITERIA

# name -> wall-clock budget in seconds (None: no stated budget)
_BUDGETS = {
    "digit-recursion table": 1.0,
    "enumeration oracle": 120.0,
    "specialization tables": None,
    "identity suites": 60.0,
    "counting closed forms": None,
    "fibonacci coefficients": None,
    "combinatorial statistics": None,
    "zero loci numerics": 30.0,
    "curve suite": 30.0,
}

assert set(_BUDGETS) == {name for name, _fn in CRITERIA}


@pytest.mark.parametrize("name,fn", CRITERIA, ids=[n for n, _ in CRITERIA])
def test_acceptance_criterion(name, fn):
    start = time.monotonic()
    rep = fn(None)
    elapsed = time.monotonic() - start
    verdict = "PASS" if rep.ok else "FAIL"
    print(f"{verdict} {name} ({elapsed:.1f}s)")
    assert rep.ok, f"{name}: " + "; ".join(rep.failures[:5])
    budget = _BUDGETS[name]
    if budget is not None:
        assert elapsed < budget, \
            f"{name} took {elapsed:.1f}s, budget {budget:.0f}s"
