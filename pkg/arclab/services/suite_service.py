"""
Suite service: run a lemma over many configurations and the acceptance profiles.

This service handles:
- Exhaustive or seeded-sampled verification of one lemma on one arc
- The Laplace suite on random vectors
- The quick and full acceptance profiles
"""

import random
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from arclab.core.config import get_settings
from arclab.core.exceptions import ArcLabError, ConfigurationError, NoValidConfigurationError
from arclab.core.logging import get_logger
from arclab.models.arc import Arc
from arclab.schemas.identity import (
    IdentityReport,
    ProfileEntry,
    ProfileReport,
    SamplingPolicy,
    SuiteResult,
    SuiteSummary,
)
from arclab.schemas.search import SearchTask
from arclab.services import arc_service, search_service
from arclab.services.config_service import (
    ARC_LEMMAS,
    Configuration,
    count_configurations,
    enumerate_configurations,
    sample_configurations,
    verify_configuration,
)
from arclab.services.identity_service import check_laplace
from arclab.services.tangent_service import TangentBundle
from arclab.utils.gf import FieldSpec, field_new, field_of_order
from arclab.utils.linalg import Vek

logger = get_logger(__name__)

PROFILES = ("quick", "full")

# Maximum arc sizes by (k, q)
SEARCH_TABLE: dict[tuple[int, int], int] = {
    (3, 2): 4,
    (3, 3): 4,
    (3, 4): 6,
    (3, 5): 6,
    (3, 7): 8,
    (3, 8): 10,
    (3, 9): 10,
    (4, 3): 5,
    (4, 5): 6,
    (4, 7): 8,
}

# Largest q cross-checked against the naive search
NAIVE_CROSS_CHECK_MAX_Q = 4

# Laplace instances of the full profile, by (q, k)
LAPLACE_GRID: tuple[tuple[int, int], ...] = tuple((q, k) for q in (2, 3, 4, 5, 7, 9) for k in range(2, 7))


# =============================================================================
# SUITES
# =============================================================================

def _verify_chunk(arc: Arc, scale_seed: int | None, chunk: list[Configuration]) -> list[IdentityReport]:
    bundle = TangentBundle(arc, scale_seed=scale_seed)
    return [verify_configuration(bundle, configuration) for configuration in chunk]


def summarize(lemma: str, arc_label: str, reports: list[IdentityReport], exhaustive: bool, seed: int | None) -> SuiteSummary:
    """Aggregate reports; informational failures never fail the summary."""
    failure = next((r for r in reports if not r.passed and not r.informational), None)
    return SuiteSummary(
        lemma=lemma,
        arc=arc_label,
        total=len(reports),
        passed=sum(r.passed for r in reports),
        informational=sum(r.informational for r in reports),
        exhaustive=exhaustive,
        seed=seed,
        first_failure=failure.describe() if failure else None,
    )


def run_suite(bundle: TangentBundle, tag: str, policy: SamplingPolicy, jobs: int = 1) -> SuiteResult:
    """
    Verify a lemma on every configuration, or on a seeded sample.

    Exhaustive when the policy forces it or the configuration count is at
    most policy.budget. Reports keep configuration order for every jobs value.

    Args:
        bundle: Tangent bundle of the arc.
        tag: Arc lemma tag.
        policy: Sampling policy.
        jobs: Worker processes.

    Returns:
        SuiteResult with reports and a summary.

    Raises:
        NoValidConfigurationError: The arc is too small for the lemma.
    """
    arc = bundle.arc
    total = count_configurations(arc, tag)
    if total == 0:
        raise NoValidConfigurationError(f"no valid configuration of '{tag}' on {arc.label()}")

    exhaustive = policy.exhaustive or total <= policy.budget
    if exhaustive:
        configurations = list(enumerate_configurations(arc, tag))
    else:
        configurations = sample_configurations(arc, tag, policy.samples, policy.seed)
    logger.info(
        f"Suite '{tag}' on {arc.label()}: {len(configurations)} of {total} configurations"
        f" ({'exhaustive' if exhaustive else f'seed {policy.seed}'})"
    )

    if jobs > 1 and len(configurations) > jobs:
        size = -(-len(configurations) // jobs)
        chunks = [configurations[i : i + size] for i in range(0, len(configurations), size)]
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            parts = executor.map(_verify_chunk, [arc] * len(chunks), [bundle.scale_seed] * len(chunks), chunks)
            reports = [report for part in parts for report in part]
    else:
        reports = [verify_configuration(bundle, configuration) for configuration in configurations]

    summary = summarize(tag, arc.label(), reports, exhaustive, None if exhaustive else policy.seed)
    logger.info(f"Suite '{tag}' on {arc.label()}: {summary.line()}")
    return SuiteResult(reports=reports, summary=summary)


def _random_vector(field: FieldSpec, k: int, rng: random.Random) -> Vek:
    return tuple(rng.randrange(field.q) for _ in range(k))


def _combination(field: FieldSpec, vectors: list[Vek], k: int, rng: random.Random) -> Vek:
    result = [field.zero] * k
    for v in vectors:
        c = rng.randrange(field.q)
        result = [field.add(a, field.mul(c, b)) for a, b in zip(result, v)]
    return tuple(result)


def run_laplace_suite(field: FieldSpec, k: int, samples: int, seed: int) -> SuiteResult:
    """
    The Laplace identity on random instances of F_q^k.

    n is drawn from 0..k-1; about a quarter of the instances take y in the
    span of X + L.
    """
    if k < 1:
        raise ConfigurationError("the Laplace suite needs k >= 1")
    rng = random.Random(seed)
    reports = []
    for _ in range(samples):
        n = rng.randrange(k)
        W = [_random_vector(field, k, rng) for _ in range(n + 1)]
        X = [_random_vector(field, k, rng) for _ in range(n)]
        L = [_random_vector(field, k, rng) for _ in range(k - n - 1)]
        if rng.random() < 0.25:
            y = _combination(field, X + L, k, rng)
        else:
            y = _random_vector(field, k, rng)
        reports.append(check_laplace(field, W, X, L, y))
    summary = summarize("laplace", f"GF({field.q})^{k}", reports, exhaustive=False, seed=seed)
    logger.info(f"Laplace suite on GF({field.q})^{k}: {summary.line()}")
    return SuiteResult(reports=reports, summary=summary)


# =============================================================================
# PROFILES
# =============================================================================

def _entry(name: str, check: Callable[[], tuple[bool, str]]) -> ProfileEntry:
    try:
        ok, detail = check()
    except ArcLabError as e:
        ok, detail = False, f"{type(e).__name__}: {e}"
    logger.info(f"[{'ok' if ok else 'FAIL'}] {name}: {detail}")
    return ProfileEntry(name=name, ok=ok, detail=detail)


def _suite_entry(arc: Arc, tag: str, policy: SamplingPolicy, jobs: int) -> ProfileEntry:
    def check() -> tuple[bool, str]:
        summary = run_suite(TangentBundle(arc), tag, policy, jobs).summary
        return summary.ok, summary.line()

    return _entry(f"{tag} {arc.label()}", check)


def _lemma_suites(arcs: list[Arc], tags: tuple[str, ...], policy: SamplingPolicy, jobs: int) -> list[ProfileEntry]:
    entries = []
    for arc in arcs:
        for tag in tags:
            if count_configurations(arc, tag) == 0:
                logger.debug(f"Skipping '{tag}' on {arc.label()}: no configuration")
                continue
            entries.append(_suite_entry(arc, tag, policy, jobs))
    return entries


def _laplace_entry(q: int, k: int, samples: int, seed: int) -> ProfileEntry:
    def check() -> tuple[bool, str]:
        summary = run_laplace_suite(field_of_order(q), k, samples, seed).summary
        return summary.ok, summary.line()

    return _entry(f"laplace GF({q})^{k}", check)


def laplace_plan(total: int) -> list[tuple[int, int, int]]:
    """Spread at least total Laplace instances evenly over LAPLACE_GRID."""
    per_case = -(-total // len(LAPLACE_GRID))
    return [(q, k, per_case) for q, k in LAPLACE_GRID]


def _census_entry(arc: Arc) -> ProfileEntry:
    def check() -> tuple[bool, str]:
        census = arc_service.census_all(arc)
        return census.consistent, f"t={census.t} on {len(census.per_Y)} subsets"

    return _entry(f"census {arc.label()}", check)


def _dual_entry(arc: Arc, expected_k: int | None = None) -> ProfileEntry:
    def check() -> tuple[bool, str]:
        dual = arc_service.dual_arc(arc)
        verdict = arc_service.mds_check(dual.field, dual.k, dual.points)
        ok = verdict.passed and (expected_k is None or dual.k == expected_k)
        return ok, f"{dual.label()} mds={'pass' if verdict.passed else verdict.witness}"

    return _entry(f"dual {arc.label()}", check)


def _twotothen_entry(arc: Arc, policy: SamplingPolicy, jobs: int) -> ProfileEntry:
    def check() -> tuple[bool, str]:
        summary = run_suite(TangentBundle(arc), "twotothen", policy, jobs).summary
        return True, f"informational: {summary.passed}/{summary.total} vanish"

    return _entry(f"twotothen {arc.label()}", check)


def _search_entry(k: int, q: int, expected: int, jobs: int) -> ProfileEntry:
    settings = get_settings()
    field = field_of_order(q)

    def check() -> tuple[bool, str]:
        task = SearchTask(
            p=field.p,
            h=field.h,
            k=k,
            node_budget=settings.SEARCH_NODE_BUDGET,
            time_budget=settings.SEARCH_TIME_BUDGET,
            jobs=jobs,
        )
        result = search_service.max_arc_size(task)
        witness = search_service.witness_arc(result)
        ok = result.size == expected and arc_service.mds_check_full(field, k, witness.points).passed
        detail = f"max={result.size} (expected {expected}), nodes={result.nodes}"
        if q <= NAIVE_CROSS_CHECK_MAX_Q:
            naive = search_service.max_arc_size(task.model_copy(update={"naive": True}))
            ok = ok and naive.size == result.size
            detail += f", naive max={naive.size}"
        return ok, detail

    return _entry(f"search q={q} k={k}", check)


def run_profile(profile: str, jobs: int = 1) -> ProfileReport:
    """
    Run an acceptance profile.

    quick runs every arc lemma on the normal rational curves of
    (q, k) in {(5, 3), (7, 3), (8, 3)} plus Laplace instances; full adds
    the larger curves, the q + 2 sums on hyperovals, duality, the tangent
    census and the search table.

    Raises:
        ConfigurationError: Unknown profile name.
    """
    if profile not in PROFILES:
        raise ConfigurationError(f"unknown profile '{profile}', expected one of {list(PROFILES)}")
    settings = get_settings()
    policy = SamplingPolicy.from_settings()
    entries: list[ProfileEntry] = []

    quick_arcs = [arc_service.nrc(field_of_order(q), k) for q, k in ((5, 3), (7, 3), (8, 3))]
    entries += _lemma_suites(quick_arcs, ARC_LEMMAS, policy, jobs)
    laplace_samples = min(settings.LAPLACE_SAMPLES, 1000)
    entries += [_laplace_entry(arc.q, arc.k, laplace_samples, policy.seed) for arc in quick_arcs]

    if profile == "full":
        nrc = {(q, k): arc_service.nrc(field_of_order(q), k) for q, k in ((7, 3), (9, 4), (11, 4), (11, 5))}
        nrc[(8, 3)] = quick_arcs[2]
        entries += _lemma_suites([nrc[(9, 4)], nrc[(11, 4)], nrc[(11, 5)]], ("tangents",), policy, jobs)
        entries += _lemma_suites([nrc[(11, 4)]], ("interpolation",), policy, jobs)

        exhaustive = policy.model_copy(update={"exhaustive": True})
        entries += _lemma_suites([nrc[(7, 3)], nrc[(11, 4)]], ("numerator", "denominator", "switch"), exhaustive, jobs)
        entries += _lemma_suites([nrc[(11, 5)], nrc[(9, 4)], nrc[(8, 3)]], ("main",), policy, jobs)
        entries += _lemma_suites([nrc[(11, 4)], nrc[(7, 3)]], ("appendix", "appendix-reduction"), policy, jobs)

        entries += [_laplace_entry(q, k, count, policy.seed) for q, k, count in laplace_plan(settings.LAPLACE_SAMPLES)]

        hyperovals = [arc_service.hyperoval(field_new(2, h)) for h in (1, 2, 3)]
        for arc in hyperovals[:2]:
            entries.append(_twotothen_entry(arc, policy, jobs))
        entries += _lemma_suites(hyperovals[:2], ("twotothen-reduction",), policy, jobs)

        constructed = list(nrc.values()) + hyperovals + [arc_service.bush_frame(field_of_order(5), 3)]
        entries += [_dual_entry(arc) for arc in constructed if arc.size > arc.k]
        entries.append(_dual_entry(hyperovals[2], expected_k=7))
        entries += [_census_entry(arc) for arc in constructed]

        entries += [_search_entry(k, q, size, jobs) for (k, q), size in SEARCH_TABLE.items()]

    report = ProfileReport(profile=profile, entries=entries)
    failed = sum(not entry.ok for entry in entries)
    logger.info(f"Profile '{profile}': {len(entries) - failed}/{len(entries)} checks passed")
    return report
