"""Smoke tests for the verification suites at small limits.

The acceptance tests run the same suites at their full limits; here we
only pin the plumbing (dispatch, result shape, determinism, counting).
"""

import pytest

from congprimes.criteria import classify
from congprimes.errors import PreconditionViolation
from congprimes.modmath import primes_in_range
from congprimes.verify import (
    DEFAULT_LIMITS,
    SUITES,
    SuiteResult,
    density_lines,
    level_counts,
    run_suite,
)


def test_suite_registry_consistent():
    assert set(SUITES) == set(DEFAULT_LIMITS)


def test_unknown_suite_rejected():
    with pytest.raises(PreconditionViolation):
        run_suite("no-such-suite")


SMALL_LIMITS = {
    "class-numbers": 500,
    "three-squares": 500,
    "tunnell": 500,
    "lemmas": 40,
    "els": 2000,
    "delta": 600,
    "invariants": 2000,
}


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_suites_pass_at_small_limits(suite):
    res = run_suite(suite, limit=SMALL_LIMITS[suite])
    assert isinstance(res, SuiteResult)
    assert res.suite == suite
    assert res.passed, res.counterexample
    assert res.checked > 0
    assert res.counterexample is None


def test_lemmas_deterministic_per_seed():
    a = run_suite("lemmas", limit=25, seed=7)
    b = run_suite("lemmas", limit=25, seed=7)
    assert (a.passed, a.checked, a.lines) == (b.passed, b.checked, b.lines)


def test_level_counts_match_classify():
    counts = level_counts(3, 100)
    assert sum(counts.values()) == 24
    rebuilt: dict = {}
    for p in primes_in_range(3, 100):
        c = classify(p)
        key = (c.v_level, c.w_level)
        rebuilt[key] = rebuilt.get(key, 0) + 1
    assert counts == rebuilt


def test_density_lines_fraction_present():
    lines = density_lines(level_counts(3, 600))
    assert lines[0].startswith("primes classified:")
    assert any(line.startswith("V(4)/V(3) fraction:") for line in lines)
    # 41 is the first prime with v_level 3, 257 the first with v_level 4
    assert any("NA (no V(3)" in line for line in density_lines(level_counts(3, 30)))
