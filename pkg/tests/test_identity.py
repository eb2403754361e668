"""Lemma verifiers on classical arcs."""

from itertools import islice

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arclab.core.exceptions import ConfigurationError
from arclab.schemas.identity import IdentityReport, MainLemmaConfig, TwoToTheNConfig
from arclab.services import arc_service
from arclab.services import identity_service as identities
from arclab.services.config_service import enumerate_configurations, sample_configurations, verify_configuration
from arclab.services.tangent_service import TangentBundle
from arclab.utils.gf import field_new, field_of_order


def nrc_bundle(q: int, k: int, scale_seed: int | None = None) -> TangentBundle:
    return TangentBundle(arc_service.nrc(field_of_order(q), k), scale_seed=scale_seed)


def failures(bundle: TangentBundle, tag: str, samples: int | None = None, seed: int = 1) -> list[IdentityReport]:
    if samples is None:
        configurations = enumerate_configurations(bundle.arc, tag)
    else:
        configurations = sample_configurations(bundle.arc, tag, samples, seed)
    reports = [verify_configuration(bundle, configuration) for configuration in configurations]
    assert reports
    return [report for report in reports if not report.passed]


# =============================================================================
# LEMMA OF TANGENTS
# =============================================================================

def test_tangents_on_conic5(conic5_bundle):
    assert failures(conic5_bundle, "tangents") == []


@pytest.mark.parametrize("q", [7, 8])
def test_tangents_on_conics(q):
    assert failures(nrc_bundle(q, 3), "tangents") == []


def test_tangents_on_nrc_gf11_k4():
    assert failures(nrc_bundle(11, 4), "tangents", samples=60) == []


def test_tangents_report_fields(conic5_bundle):
    report = identities.check_lemma_of_tangents(conic5_bundle, [], 0, 1, 2)
    assert report.lemma == "tangents"
    assert report.configuration == {"D": [], "x": 0, "y": 1, "z": 2}
    assert report.passed and report.lhs == report.rhs


def test_tangents_needs_a_tangent():
    bundle = TangentBundle(arc_service.hyperoval(field_new(2, 2)))
    with pytest.raises(ConfigurationError):
        identities.check_lemma_of_tangents(bundle, [], 0, 1, 2)


def test_tangents_rejects_overlaps(conic5_bundle):
    with pytest.raises(ConfigurationError):
        identities.check_lemma_of_tangents(conic5_bundle, [], 0, 0, 2)
    with pytest.raises(ConfigurationError):
        identities.check_lemma_of_tangents(conic5_bundle, [3], 0, 1, 2)


# =============================================================================
# INTERPOLATION
# =============================================================================

def test_interpolation_on_conic5(conic5_bundle):
    assert failures(conic5_bundle, "interpolation") == []


def test_interpolation_on_nrc_gf11_k4():
    assert failures(nrc_bundle(11, 4), "interpolation", samples=40) == []


def test_interpolation_ignores_representatives(conic5):
    rescaled = TangentBundle(conic5.rescaled(3, 4).rescaled(0, 2))
    assert failures(rescaled, "interpolation") == []


def test_interpolation_needs_tangents():
    bundle = TangentBundle(arc_service.hyperoval(field_new(2, 2)))
    with pytest.raises(ConfigurationError):
        identities.check_interpolation(bundle, [0], [1, 2])


def test_interpolation_sizes(conic5_bundle):
    with pytest.raises(ConfigurationError):
        identities.check_interpolation(conic5_bundle, [0], [1, 2])
    with pytest.raises(ConfigurationError):
        identities.check_interpolation(conic5_bundle, [0], [0, 1, 2])


# =============================================================================
# SIGN LEMMAS
# =============================================================================

@pytest.mark.parametrize("tag", ["numerator", "denominator", "switch"])
def test_sign_lemmas_on_conic7(tag):
    assert failures(nrc_bundle(7, 3), tag) == []


@pytest.mark.parametrize("tag", ["numerator", "denominator", "switch"])
def test_sign_lemmas_on_nrc_gf7_k4(tag):
    assert failures(nrc_bundle(7, 4), tag, samples=80) == []


def test_transpositions_of_three_factors():
    bundle = nrc_bundle(11, 4)
    A, B = (0, 1, 2), (3, 4, 5)
    for i, j in [(0, 1), (1, 2), (0, 2)]:
        assert identities.check_numerator_sign(bundle, A, B, (), i, j).passed
        assert identities.check_denominator_sign(bundle, A, B, (), i, j).passed


def test_sign_lemma_in_characteristic_two():
    bundle = nrc_bundle(8, 3)
    report = identities.check_numerator_sign(bundle, (1, 2), (3, 4), (), 0, 1)
    assert report.passed


def test_swap_needs_two_positions(conic5_bundle):
    with pytest.raises(ConfigurationError):
        identities.check_numerator_sign(conic5_bundle, (1, 2), (3, 4), (), 0, 0)


def test_switch_sizes(conic5_bundle):
    with pytest.raises(ConfigurationError):
        identities.check_switch(conic5_bundle, [], (1,), (2,), 3, 4)


# =============================================================================
# MAIN LEMMA
# =============================================================================

def test_main_lemma_nrc_gf11_k5():
    bundle = nrc_bundle(11, 5)
    cfg = MainLemmaConfig(A=[0], L=[1, 2], D=[3, 4], Omega=[5, 6, 7])
    report = identities.check_main_lemma(bundle, cfg)
    assert report.passed
    assert report.configuration["n"] == 1 and report.configuration["r"] == 2


def test_main_lemma_nrc_gf9_k4_tight_range():
    bundle = nrc_bundle(9, 4)
    cfg = MainLemmaConfig(A=[], L=[4, 1], D=[7], Omega=[0, 2, 9])
    assert identities.check_main_lemma(bundle, cfg).passed


def test_main_lemma_r_equals_n_is_syntactic():
    bundle = nrc_bundle(7, 3)
    A, L, D, Omega = (0,), (1,), (2,), (3,)
    lhs = identities.main_lemma_lhs_terms(bundle, A, L, D, Omega)
    rhs = identities.main_lemma_rhs_terms(bundle, A, L, D, Omega)
    assert len(lhs) == len(rhs) == 1
    assert lhs == rhs


@pytest.mark.parametrize("q, k", [(5, 3), (7, 3), (8, 3), (9, 4)])
def test_main_lemma_suites(q, k):
    assert failures(nrc_bundle(q, k), "main", samples=40) == []


def test_main_lemma_with_rescaled_tangents():
    assert failures(nrc_bundle(11, 4, scale_seed=5), "main", samples=30) == []


def test_main_lemma_hypotheses():
    bundle = nrc_bundle(5, 3)
    with pytest.raises(ConfigurationError):
        identities.check_main_lemma(bundle, MainLemmaConfig(A=[], L=[0, 1, 2, 3], D=[], Omega=[4, 5]))
    with pytest.raises(ConfigurationError):
        identities.check_main_lemma(bundle, MainLemmaConfig(A=[0], L=[1], D=[2], Omega=[2]))


def test_main_lemma_range_in_small_characteristic():
    bundle = nrc_bundle(4, 3)
    with pytest.raises(ConfigurationError):
        identities.check_main_lemma(bundle, MainLemmaConfig(A=[], L=[0, 1], D=[], Omega=[2, 3]))


# =============================================================================
# SUMS FOR |S| = q + 2
# =============================================================================

@pytest.mark.parametrize("h", [1, 2])
def test_twotothen_on_hyperovals_is_informational(h):
    bundle = TangentBundle(arc_service.hyperoval(field_new(2, h)))
    cfg = TwoToTheNConfig(A=[], L=[0], Omega=[], X=[1], Y=[2], n=1)
    report = identities.check_twotothen(bundle, cfg)
    assert report.informational
    assert report.sum is not None
    assert report.configuration["m"] == 1


def test_twotothen_needs_q_plus_two_points(conic5_bundle):
    cfg = TwoToTheNConfig(A=[], L=[0], Omega=[], X=[1], Y=[2], n=1)
    with pytest.raises(ConfigurationError):
        identities.check_twotothen(conic5_bundle, cfg)


def test_twotothen_term_order():
    bundle = TangentBundle(arc_service.hyperoval(field_new(2, 2)))
    terms = identities.twotothen_terms(bundle, (), (0,), (), (1,), (2,), 1)
    # B = () only, tau in {(), (0,)}
    assert len(terms) == 2


@pytest.mark.parametrize(
    "arc",
    [arc_service.hyperoval(field_new(2, 2)), arc_service.nrc(field_of_order(5), 3), arc_service.nrc(field_of_order(7), 4)],
    ids=["hyperoval4", "conic5", "nrc7-4"],
)
def test_twotothen_reduces_to_main_lemma(arc):
    samples = None if arc.k == 3 else 150
    assert failures(TangentBundle(arc), "twotothen-reduction", samples=samples) == []


def test_twotothen_reduction_carries_terms(conic5_bundle):
    report = identities.check_twotothen_reduction(conic5_bundle, (0,), (1, 2), ())
    assert report.passed
    assert report.terms == identities.main_lemma_lhs_terms(conic5_bundle, (0,), (1, 2), (), ())
    assert report.sum is None


@pytest.mark.parametrize("h", [1, 2, 3])
def test_twotothen_reduction_vanishes_on_hyperovals(h):
    bundle = TangentBundle(arc_service.hyperoval(field_new(2, h)))
    for A, L in [((0,), (1, 2)), ((3,), (2, 0)), ((1,), (3, 0))]:
        report = identities.check_twotothen_reduction(bundle, A, L, ())
        assert report.sum == 0
        assert report.passed
        assert "lhs" not in report.describe()

    # n = 0 is below k - p, so only the term structure is compared
    report = identities.check_twotothen_reduction(bundle, (), (0, 1), (2,))
    assert report.passed and report.sum is None
    assert report.describe().endswith(": passed")


# =============================================================================
# APPENDIX LEMMA
# =============================================================================

def test_appendix_nrc_gf11_k4():
    bundle = nrc_bundle(11, 4)
    report = identities.check_appendix(bundle, [0, 1], [2], [3, 4, 5, 6])
    assert report.passed and report.sum == 0


def test_appendix_conic8():
    bundle = nrc_bundle(8, 3)
    assert identities.check_appendix(bundle, [0], [1], [2, 3, 4]).passed


@pytest.mark.parametrize("q, k", [(5, 3), (7, 3), (11, 4)])
def test_appendix_suites(q, k):
    assert failures(nrc_bundle(q, k), "appendix", samples=40) == []


def test_appendix_hypotheses():
    bundle = nrc_bundle(8, 3)
    with pytest.raises(ConfigurationError):
        identities.check_appendix(bundle, [0, 1], [], [2, 3, 4])


@pytest.mark.parametrize("q, k", [(5, 3), (11, 4)])
def test_appendix_reduces_to_interpolation(q, k):
    bundle = nrc_bundle(q, k)
    configurations = list(islice(enumerate_configurations(bundle.arc, "appendix-reduction"), 200))
    assert all(verify_configuration(bundle, c).passed for c in configurations)


# =============================================================================
# LAPLACE EXPANSION
# =============================================================================

def vectors(q: int, k: int, count: int):
    return st.lists(st.tuples(*[st.integers(0, q - 1)] * k), min_size=count, max_size=count)


@given(data=st.data(), n=st.integers(0, 3))
def test_laplace_on_random_vectors(data, n):
    field, k = field_new(7, 1), 4
    W = data.draw(vectors(7, k, n + 1))
    X = data.draw(vectors(7, k, n))
    L = data.draw(vectors(7, k, k - n - 1))
    y = data.draw(vectors(7, k, 1))[0]
    report = identities.check_laplace(field, W, X, L, y)
    assert report.passed


@given(data=st.data())
def test_laplace_with_y_in_the_span(data):
    field, k, n = field_new(3, 2), 3, 1
    W = data.draw(vectors(9, k, n + 1))
    X = data.draw(vectors(9, k, n))
    L = data.draw(vectors(9, k, k - n - 1))
    a, b = data.draw(st.integers(0, 8)), data.draw(st.integers(0, 8))
    y = tuple(field.add(field.mul(a, u), field.mul(b, v)) for u, v in zip(X[0], L[0]))
    report = identities.check_laplace(field, W, X, L, y)
    assert report.rhs == 0
    assert report.lhs == 0


def test_laplace_with_n_zero(gf5):
    report = identities.check_laplace(gf5, [(1, 2, 3)], [], [(0, 1, 0), (0, 0, 1)], (4, 4, 1))
    assert report.passed
    assert report.configuration["basis"] is True


def test_laplace_sizes(gf5):
    with pytest.raises(ConfigurationError):
        identities.check_laplace(gf5, [(1, 0, 0)], [(0, 1, 0)], [(0, 0, 1)], (1, 1, 1))


def test_report_verdict_must_match_values():
    with pytest.raises(ValueError):
        IdentityReport(lemma="main", lhs=1, rhs=2, passed=True)
    assert not IdentityReport(lemma="appendix", sum=3, passed=False).passed
