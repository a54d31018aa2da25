"""Acceptance gate: every published numerical claim in scope, recomputed
from first definitions at its stated runtime budget, one pass/fail line per
criterion (run with -s to see them on success)."""

import time

import pytest

from upsilonkit.expr import expected_generators, parse_expr
from upsilonkit import verify

CRITERIA = [
    # (check, budget in seconds)
    (verify.check_alexander_agreement, 1),
    (lambda fast=False: verify.check_t34_golden(), 1),
    (verify.check_fastpath_vs_engine, 30),
    (verify.check_recursion, 10),
    (verify.check_first_jump, 30),
    (verify.check_adjacent_torus, 30),
    (verify.check_small_k, 30),
    (verify.check_large_k, 30),
    (verify.check_non_jump, 30),
    (verify.check_mirror_trivial, 10),
    (verify.check_stable_inequivalence, 120),
    (verify.check_vanishing_family, 300),
    (verify.check_property_battery, 120),
]

IDS = [
    "alexander-oracle-agreement",
    "t34-golden-values",
    "staircase-fast-path",
    "torus-recursion",
    "first-jump-value",
    "secondary-value-adjacent-torus",
    "secondary-value-small-k",
    "secondary-value-large-k",
    "non-jump-at-4-over-q",
    "mirror-secondary-trivial",
    "stable-inequivalence",
    "vanishing-upsilon-family",
    "property-battery",
]


@pytest.mark.parametrize("check,budget", CRITERIA, ids=IDS)
def test_criterion(check, budget):
    start = time.perf_counter()
    result = check(False)
    elapsed = time.perf_counter() - start
    print(f"{'PASS' if result.ok else 'FAIL'} {result.name} "
          f"[{elapsed:.2f}s]: {result.detail}")
    assert result.ok, f"{result.name}: {result.detail}"
    assert elapsed < budget, (
        f"{result.name} took {elapsed:.2f}s, budget {budget}s")


def test_vanishing_family_sizes():
    # tensor sizes follow from the staircase generator counts
    # (2*runs+1 per torus factor)
    assert expected_generators(
        parse_expr("T(5,6) # T(2,5) # -T(5,7)")) == 9 * 5 * 17 == 765
    assert expected_generators(
        parse_expr("T(7,8) # T(2,7) # -T(7,9)")) == 13 * 7 * 31 == 2821


def test_full_suite_exit_status():
    results = verify.run_all(fast=True)
    assert all(r.ok for r in results)
    assert len(results) == 13
