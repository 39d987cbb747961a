"""Shared session-scoped artifacts for the test suite.

The full verification run, the mutation sweep, and the randomized
property campaigns are each executed once per session and shared across
test modules (including the acceptance gate).
"""

from __future__ import annotations

import pytest

from godeaux.fixtures import load_fixtures
from godeaux.suite import MUTATIONS, PASS, report, run_all

import property_helpers


@pytest.fixture(scope="session")
def fixtures():
    return load_fixtures()


@pytest.fixture(scope="session")
def suite_results():
    """One full default verification run (seed 1, default budget)."""
    return run_all(seed=1)


@pytest.fixture(scope="session")
def suite_report_json(suite_results):
    return report(suite_results, "json")


@pytest.fixture(scope="session")
def mutation_outcomes():
    """Mapping mutation name -> list of non-pass check ids under it."""
    outcomes = {}
    for mutation in MUTATIONS:
        fx = load_fixtures(mutation.overrides())
        results = run_all(seed=1, budget=2000, fixtures=fx)
        outcomes[mutation.name] = [r.id for r in results if r.status != PASS]
    return outcomes


@pytest.fixture(scope="session")
def property_outcomes():
    """Mapping suite name -> (cases run, list of failure descriptions)."""
    return property_helpers.run_all_property_suites()
