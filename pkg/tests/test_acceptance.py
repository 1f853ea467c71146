"""Acceptance checklist: one test per criterion, one pass/fail line each.

Run with -v (or -rA) to see the per-criterion lines; reproduce-all in the
CLI executes the same functions.
"""

import time

import pytest

from cuspidal.checks import CRITERIA, criterion_surface_suite, run_all


@pytest.mark.parametrize("name,fn", CRITERIA, ids=[n for n, _ in CRITERIA])
def test_criterion(name, fn, capsys):
    start = time.perf_counter()
    if fn is criterion_surface_suite:
        passed, witness = fn(seed=0)
    else:
        passed, witness = fn()
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        status = "PASS" if passed else "FAIL"
        print(f"[{status}] {name} ({elapsed:.2f}s)")
    assert passed, witness


def test_runtime_budgets():
    t0 = time.perf_counter()
    results = run_all(seed=0)
    total = time.perf_counter() - t0
    times = {r.name: r.seconds for r in results}
    assert all(r.passed for r in results), [r.name for r in results if not r.passed]
    assert times["discriminant_identity"] < 1.0
    assert times["scaling_identity"] < 1.0
    assert times["braid_monodromy"] < 30.0
    assert times["s4_uniqueness"] < 1.0
    assert times["surface_suite"] < 60.0
    assert total < 180.0
