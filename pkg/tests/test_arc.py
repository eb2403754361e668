"""Constructions, MDS checks, duality and the tangent census."""

import pytest

from arclab.core.exceptions import DimensionError, NotAnArcError
from arclab.models.arc import Arc
from arclab.services import arc_service
from arclab.utils.gf import field_new, field_of_order


def test_nrc_over_gf5(conic5):
    assert conic5.points == ((1, 0, 0), (1, 1, 1), (1, 2, 4), (1, 3, 4), (1, 4, 1), (0, 0, 1))
    assert conic5.size == 6
    assert conic5.t == 1
    assert arc_service.mds_check(conic5.field, 3, conic5.points).passed


def test_nrc_over_gf2():
    arc = arc_service.nrc(field_new(2, 1), 2)
    assert arc.points == ((1, 0), (1, 1), (0, 1))


@pytest.mark.parametrize("q, k", [(4, 3), (7, 4), (8, 3), (9, 4), (11, 5)])
def test_nrc_is_an_arc(q, k):
    arc = arc_service.nrc(field_of_order(q), k)
    assert arc.size == q + 1
    assert arc.t == k - 2
    assert arc_service.mds_check_full(arc.field, k, arc.points).passed


def test_nrc_dimension_range(gf5):
    with pytest.raises(DimensionError):
        arc_service.nrc(gf5, 6)
    with pytest.raises(DimensionError):
        arc_service.nrc(gf5, 1)


@pytest.mark.parametrize("h", [1, 2, 3])
def test_hyperoval(h):
    field = field_new(2, h)
    arc = arc_service.hyperoval(field)
    assert arc.size == field.q + 2
    assert arc.t == 0
    assert arc_service.mds_check_full(field, 3, arc.points).passed


def test_hyperoval_of_gf2_is_the_frame():
    field = field_new(2, 1)
    assert set(arc_service.hyperoval(field).points) == set(arc_service.bush_frame(field, 3).points)


def test_hyperoval_needs_characteristic_two(gf5):
    with pytest.raises(DimensionError):
        arc_service.hyperoval(gf5)


@pytest.mark.parametrize("q, k", [(2, 3), (3, 4), (5, 3), (4, 5)])
def test_frame_is_an_arc(q, k):
    arc = arc_service.bush_frame(field_of_order(q), k)
    assert arc.size == k + 1
    assert arc_service.mds_check(arc.field, k, arc.points).passed


def test_construct_dispatch(gf5):
    assert arc_service.construct("nrc", gf5, 3).size == 6
    with pytest.raises(DimensionError):
        arc_service.construct("conic", gf5, 3)


def test_repeated_point_is_reported(gf5):
    points = [(1, 0, 0), (0, 1, 0), (1, 1, 1), (0, 1, 0)]
    result = arc_service.mds_check(gf5, 3, points)
    assert not result.passed
    assert result.witness == [0, 1, 3]


def test_incremental_and_full_checks_agree_on_the_first_witness(gf5):
    points = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 0), (1, 4, 1)]
    full = arc_service.mds_check_full(gf5, 3, points)
    assert arc_service.mds_check(gf5, 3, points) == full
    assert full.witness == [0, 1, 4]


def test_require_arc_raises_with_witness(gf5):
    arc = Arc(gf5, 3, ((1, 0, 0), (0, 1, 0), (1, 1, 0)))
    with pytest.raises(NotAnArcError) as exc:
        arc_service.require_arc(arc)
    assert exc.value.witness == (0, 1, 2)
    assert exc.value.exit_code == 1


def test_wrong_point_length(gf5):
    with pytest.raises(DimensionError):
        arc_service.mds_check(gf5, 3, [(1, 0)])


def test_dual_of_conic(conic5):
    dual = arc_service.dual_arc(conic5)
    assert dual.k == 3
    assert dual.size == 6
    assert arc_service.mds_check_full(dual.field, 3, dual.points).passed

    # G H^T = 0
    for i in range(conic5.k):
        for j in range(dual.k):
            column = conic5.field.dot([p[i] for p in conic5.points], [p[j] for p in dual.points])
            assert column == 0


def test_dual_round_trip_dimensions():
    arc = arc_service.nrc(field_of_order(7), 3)
    twice = arc_service.dual_arc(arc_service.dual_arc(arc))
    assert (twice.k, twice.size) == (arc.k, arc.size)
    assert arc_service.mds_check(twice.field, twice.k, twice.points).passed


def test_dual_of_gf8_hyperoval():
    dual = arc_service.dual_arc(arc_service.hyperoval(field_new(2, 3)))
    assert (dual.k, dual.size) == (7, 10)
    assert arc_service.mds_check(dual.field, 7, dual.points).passed


def test_dual_needs_more_points_than_dimension(gf5):
    with pytest.raises(DimensionError):
        arc_service.dual_arc(Arc(gf5, 3, ((1, 0, 0), (0, 1, 0), (0, 0, 1))))


def test_normalized_points_count():
    field = field_new(3, 1)
    points = arc_service.normalized_points(field, 3)
    assert len(points) == 13
    assert points == sorted(points)
    assert points[0] == (0, 0, 1)


@pytest.mark.parametrize(
    "arc",
    [
        arc_service.nrc(field_of_order(5), 3),
        arc_service.nrc(field_of_order(7), 4),
        arc_service.hyperoval(field_of_order(4)),
        arc_service.bush_frame(field_of_order(5), 4),
    ],
    ids=["conic5", "nrc7-4", "hyperoval4", "frame5-4"],
)
def test_census_counts_exactly_t_tangents(arc):
    census = arc_service.census_all(arc)
    assert census.consistent
    for entry in census.per_Y:
        assert entry.tangent_count == arc.t
        assert len(entry.unisecants) == arc.size - arc.k + 2


def test_census_of_nrc_gf7_k4_has_two_tangents():
    arc = arc_service.nrc(field_of_order(7), 4)
    entry = arc_service.secant_tangent_census(arc, [0, 1])
    assert entry.tangent_count == 2


def test_census_reports_non_arcs(gf5):
    arc = Arc(gf5, 3, ((1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)))
    with pytest.raises(NotAnArcError) as exc:
        arc_service.secant_tangent_census(arc, [0])
    assert exc.value.witness == (0, 1, 2)


def test_census_validates_the_subset(conic5):
    with pytest.raises(DimensionError):
        arc_service.secant_tangent_census(conic5, [0, 1])
    with pytest.raises(DimensionError):
        arc_service.secant_tangent_census(conic5, [9])


def test_rescaled_representative_keeps_the_arc(conic5):
    rescaled = conic5.rescaled(2, 3)
    assert rescaled.points[2] == (3, 1, 2)
    assert arc_service.mds_check(rescaled.field, 3, rescaled.points).passed
    assert arc_service.normalize_arc(rescaled).points == conic5.points
