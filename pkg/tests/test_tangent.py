"""Tangent functions, Segre products and the sigma parity."""

from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

import pytest

from arclab.core.exceptions import ConfigurationError, DimensionError
from arclab.services import arc_service
from arclab.services.tangent_service import (
    SegreQuery,
    TangentBundle,
    segre,
    segre_product,
    sigma,
    tangent_forms,
    tangent_value,
)
from arclab.utils.gf import field_new, field_of_order


def test_conic_tangent_through_first_point(conic5_bundle):
    forms = tangent_forms(conic5_bundle, [0])
    assert [form.covector for form in forms] == [(0, 0, 1)]
    assert tangent_value(conic5_bundle, [0], (0, 0, 1)) == 1


def test_tangent_vanishes_on_its_base(conic5_bundle):
    assert conic5_bundle.at([0], 0) == 0


def test_tangent_is_nonzero_on_the_arc(conic5_bundle):
    for y in range(6):
        for x in range(6):
            if x != y:
                assert conic5_bundle.at([y], x) != 0


def test_hyperoval_has_no_tangents():
    bundle = TangentBundle(arc_service.hyperoval(field_new(2, 2)))
    assert tangent_forms(bundle, [0]) == []
    assert tangent_value(bundle, [0], (1, 2, 3)) == 1


def test_nrc_gf7_k4_has_two_tangents_per_pair():
    bundle = TangentBundle(arc_service.nrc(field_of_order(7), 4))
    for Y in [(0, 1), (2, 7), (5, 6)]:
        assert len(tangent_forms(bundle, Y)) == 2


def test_bundle_caches_by_sorted_subset():
    bundle = TangentBundle(arc_service.nrc(field_of_order(7), 4))
    first = bundle.forms((3, 1))
    assert bundle.forms([1, 3]) is first
    assert bundle.cached == 1


def test_prebuild_covers_every_subset(conic5_bundle):
    assert conic5_bundle.prebuild() == 6
    assert conic5_bundle.cached == 6


def test_concurrent_readers_share_one_build():
    bundle = TangentBundle(arc_service.nrc(field_of_order(8), 3))
    with ThreadPoolExecutor(max_workers=4) as executor:
        results = list(executor.map(lambda _: bundle.forms([2]), range(16)))
    assert all(forms is results[0] for forms in results)


def test_bundle_rejects_bad_subsets(conic5_bundle):
    with pytest.raises(DimensionError):
        conic5_bundle.forms([0, 1])
    with pytest.raises(DimensionError):
        conic5_bundle.forms([6])


def test_empty_segre_product_is_one(conic5_bundle):
    assert segre(conic5_bundle, [0, 1], (), ()) == 1


def test_single_factor_segre_product(conic5_bundle):
    field = conic5_bundle.field
    expected = field.div(conic5_bundle.at([0], 1), conic5_bundle.at([0], 2))
    assert segre(conic5_bundle, [0], (1,), (2,)) == expected


def test_two_factor_segre_product_bases():
    query = SegreQuery.of(A=(0, 1), B=(2, 3), D=())
    assert query.bases() == [(3,), (0,)]


def test_segre_product_is_nonzero_on_the_arc():
    bundle = TangentBundle(arc_service.nrc(field_of_order(7), 3))
    for a, b, d in [(1, 2, 0), (3, 5, 7), (6, 4, 2)]:
        assert segre(bundle, [d], (a,), (b,)) != 0


def test_malformed_query_reports_the_factor(conic5_bundle):
    with pytest.raises(ConfigurationError) as exc:
        segre(conic5_bundle, [0], (0,), (2,))
    assert exc.value.index == 1

    with pytest.raises(ConfigurationError) as exc:
        segre_product(conic5_bundle, SegreQuery.of(A=(0, 0), B=(1, 2), D=()))
    assert exc.value.index == 2


def test_malformed_query_sizes(conic5_bundle):
    with pytest.raises(ConfigurationError):
        segre(conic5_bundle, [0], (1, 2), (3,))
    with pytest.raises(ConfigurationError):
        segre(conic5_bundle, [0, 4], (1,), (2,))
    with pytest.raises(ConfigurationError):
        segre(conic5_bundle, [0], (1,), (9,))


def test_segre_product_survives_rescaled_tangents():
    arc = arc_service.nrc(field_of_order(11), 4)
    plain, rescaled = TangentBundle(arc), TangentBundle(arc, scale_seed=7)
    queries = [((1, 2), (3, 4), (0,)), ((5,), (6,), (7, 8)), ((9, 10), (0, 1), (2,))]
    for A, B, D in queries:
        assert segre(plain, D, A, B) == segre(rescaled, D, A, B)


def test_rescaled_bundle_scales_forms():
    bundle = TangentBundle(arc_service.nrc(field_of_order(11), 4))
    rescaled = bundle.rescaled(3)
    assert rescaled.scale_seed == 3
    for plain_form, scaled_form in zip(bundle.forms([0, 1]), rescaled.forms([0, 1])):
        ratio = None
        for a, b in zip(plain_form.covector, scaled_form.covector):
            if a:
                ratio = ratio or bundle.field.div(b, a)
                assert bundle.field.mul(ratio, a) == b


def _swap_count(B, L) -> int:
    """Adjacent swaps performed while bubbling every element of B to the end."""
    members = set(B)
    order = list(L)
    swaps = 0
    changed = True
    while changed:
        changed = False
        for i in range(len(order) - 1):
            if order[i] in members and order[i + 1] not in members:
                order[i], order[i + 1] = order[i + 1], order[i]
                swaps += 1
                changed = True
    return swaps


@pytest.mark.parametrize(
    "B, L, t, expected",
    [
        ((), (0, 1, 2), 1, 0),
        ((2, 3), (0, 1, 2, 3), 4, 0),
        ((0,), (0, 1), 1, 2),
        ((0, 2), (0, 1, 2, 3), 2, 9),
    ],
)
def test_sigma_examples(B, L, t, expected):
    assert sigma(B, L, t) == expected


def test_sigma_matches_bubbling():
    L = (4, 0, 7, 2, 5, 1)
    for size in range(len(L) + 1):
        for B in combinations(L, size):
            assert sigma(B, L, 0) == _swap_count(B, L)
            assert sigma(B, L, 2) == 3 * _swap_count(B, L)


def test_sigma_requires_a_subset():
    with pytest.raises(ConfigurationError):
        sigma((9,), (0, 1), 1)
