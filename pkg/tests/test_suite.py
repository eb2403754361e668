"""Lemma suites and acceptance profiles."""

import pytest

from arclab.core.config import get_settings
from arclab.core.exceptions import ConfigurationError, NoValidConfigurationError
from arclab.schemas.identity import IdentityReport, SamplingPolicy
from arclab.services.suite_service import (
    LAPLACE_GRID,
    laplace_plan,
    run_laplace_suite,
    run_profile,
    run_suite,
    summarize,
)
from arclab.utils.gf import field_new


def test_exhaustive_tangents_on_conic5(conic5_bundle):
    result = run_suite(conic5_bundle, "tangents", SamplingPolicy(exhaustive=True))
    assert result.summary.line() == "PASS 120/120"
    assert result.summary.exhaustive
    assert result.summary.seed is None
    assert len(result.reports) == 120


def test_small_counts_are_exhaustive(conic5_bundle):
    result = run_suite(conic5_bundle, "interpolation", SamplingPolicy(budget=1000, samples=5))
    assert result.summary.exhaustive
    assert result.summary.total == 60


def test_sampled_suites_are_reproducible(conic5_bundle):
    policy = SamplingPolicy(budget=10, samples=25, seed=4)
    first = run_suite(conic5_bundle, "main", policy)
    second = run_suite(conic5_bundle, "main", policy)
    assert first.reports == second.reports
    assert first.summary.total == 25
    assert not first.summary.exhaustive
    assert first.summary.seed == 4
    assert first.summary.ok


def test_parallel_suite_keeps_order(conic5_bundle):
    policy = SamplingPolicy(exhaustive=True)
    serial = run_suite(conic5_bundle, "switch", policy, jobs=1)
    parallel = run_suite(conic5_bundle, "switch", policy, jobs=2)
    assert parallel.reports == serial.reports
    assert parallel.summary == serial.summary


def test_suite_without_configurations(conic5_bundle):
    with pytest.raises(NoValidConfigurationError):
        run_suite(conic5_bundle, "twotothen", SamplingPolicy())


def test_summary_lines():
    failing = IdentityReport(lemma="main", configuration={"A": [0]}, lhs=1, rhs=2, passed=False)
    passing = IdentityReport(lemma="main", lhs=3, rhs=3, passed=True)
    summary = summarize("main", "arc", [passing, failing], exhaustive=True, seed=None)
    assert not summary.ok
    assert summary.line() == "FAIL 1/2 (first counterexample: main(A=[0]): lhs=1, rhs=2)"

    informational = IdentityReport(lemma="twotothen", sum=4, passed=False, informational=True)
    summary = summarize("twotothen", "arc", [passing, informational], exhaustive=True, seed=None)
    assert summary.ok
    assert summary.line() == "PASS 1/2 (1 informational)"


def test_laplace_suite():
    result = run_laplace_suite(field_new(7, 1), 4, samples=150, seed=2)
    assert result.summary.ok
    assert result.summary.total == 150
    assert {report.configuration["basis"] for report in result.reports} <= {True, False}
    assert run_laplace_suite(field_new(7, 1), 4, samples=150, seed=2).reports == result.reports


def test_laplace_suite_in_characteristic_two():
    assert run_laplace_suite(field_new(2, 3), 5, samples=100, seed=9).summary.ok


@pytest.mark.parametrize("total", [1, 29, 30, 31, 10**4])
def test_laplace_plan_covers_the_total(total):
    plan = laplace_plan(total)
    assert [(q, k) for q, k, _ in plan] == list(LAPLACE_GRID)
    assert total <= sum(count for _, _, count in plan) < total + len(LAPLACE_GRID)


def test_full_profile_draws_the_configured_laplace_count():
    total = get_settings().LAPLACE_SAMPLES
    assert sum(count for _, _, count in laplace_plan(total)) >= total


def test_unknown_profile():
    with pytest.raises(ConfigurationError):
        run_profile("nightly")


def test_quick_profile(configure):
    configure(EXHAUSTIVE_BUDGET=30, SAMPLE_COUNT=12, LAPLACE_SAMPLES=40)
    report = run_profile("quick")
    assert report.ok
    names = [entry.name for entry in report.entries]
    assert any(name.startswith("tangents nrc(q=5") for name in names)
    assert any(name.startswith("laplace GF(8)") for name in names)
    assert not any(name.startswith("twotothen ") for name in names)
