"""Determinants, nullspaces and pencils over F_q."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arclab.core.exceptions import DependentPointsError, DimensionError
from arclab.utils.gf import field_new
from arclab.utils.linalg import (
    LinearForm,
    det_cofactor,
    det_seq,
    is_independent,
    normalize,
    nullspace_forms,
    pencil,
    pencil_members,
    pencil_parameter,
    rank,
)


def matrices(q: int, k: int):
    row = st.tuples(*[st.integers(0, q - 1)] * k)
    return st.lists(row, min_size=k, max_size=k)


def test_identity_determinant():
    field = field_new(7, 1)
    for k in range(1, 6):
        rows = [tuple(int(i == j) for j in range(k)) for i in range(k)]
        assert det_seq(field, rows) == 1


def test_hand_computed_determinant(gf5):
    assert det_seq(gf5, [(1, 0, 0), (1, 1, 1), (1, 2, 4)]) == 2


def test_grouped_rows_follow_argument_order(gf5):
    z, a, d = (1, 0, 0), (1, 1, 1), (1, 2, 4)
    assert det_seq(gf5, (z, [a, d])) == det_seq(gf5, [z, a, d])
    assert det_seq(gf5, (z, [d, a])) == gf5.neg(det_seq(gf5, [z, a, d]))


def test_size_mismatch_is_an_error(gf5):
    with pytest.raises(DimensionError):
        det_seq(gf5, [(1, 0, 0), (0, 1, 0)], 3)


@pytest.mark.parametrize("p, h, k", [(5, 1, 3), (2, 2, 4), (3, 2, 3), (7, 1, 4), (2, 3, 3)])
@given(data=st.data())
def test_elimination_matches_cofactor_expansion(p, h, k, data):
    field = field_new(p, h)
    rows = data.draw(matrices(field.q, k))
    det = det_seq(field, rows)
    assert det == det_cofactor(field, rows)
    assert (det != 0) == (rank(field, rows) == k)


@given(rows=matrices(7, 4), scale=st.integers(1, 6), i=st.integers(0, 3), j=st.integers(0, 3))
def test_multilinear_and_alternating(rows, scale, i, j):
    field = field_new(7, 1)
    det = det_seq(field, rows)

    scaled = list(rows)
    scaled[i] = tuple(field.mul(scale, c) for c in rows[i])
    assert det_seq(field, scaled) == field.mul(scale, det)

    if i != j:
        swapped = list(rows)
        swapped[i], swapped[j] = swapped[j], swapped[i]
        assert det_seq(field, swapped) == field.neg(det)

        repeated = list(rows)
        repeated[j] = repeated[i]
        assert det_seq(field, repeated) == 0


def test_normalize(gf5):
    assert normalize(gf5, (0, 3, 1)) == (0, 1, 2)
    with pytest.raises(DimensionError):
        normalize(gf5, (0, 0, 0))


def test_nullspace_forms_of_coordinate_points(gf5):
    forms = nullspace_forms(gf5, [(1, 0, 0)])
    assert {form.covector for form in forms} == {(0, 1, 0), (0, 0, 1)}
    assert [form.covector for form in nullspace_forms(gf5, [(1, 0, 0), (0, 1, 0)])] == [(0, 0, 1)]


def test_nullspace_forms_annihilate_their_points(gf5):
    forms = nullspace_forms(gf5, [(1, 1, 1)])
    assert len(forms) == 2
    assert all(form.evaluate(gf5, (1, 1, 1)) == 0 for form in forms)
    assert all(form.normalized and normalize(gf5, form.covector) == form.covector for form in forms)
    assert is_independent(gf5, [form.covector for form in forms])


def test_nullspace_forms_rejects_dependent_points(gf5):
    with pytest.raises(DependentPointsError):
        nullspace_forms(gf5, [(1, 2, 3), (2, 4, 1)])
    with pytest.raises(DimensionError):
        nullspace_forms(gf5, [])


def test_pencil_through_a_point(gf5):
    alpha1, alpha2 = pencil(gf5, [(1, 0, 0)], 3)
    members = pencil_members(gf5, alpha1, alpha2)
    assert len(members) == 6
    assert len({form.covector for form in members}) == 6
    assert all(form.evaluate(gf5, (1, 0, 0)) == 0 for form in members)


def test_pencil_parameter_finds_the_member(gf5):
    alpha1, alpha2 = pencil(gf5, [(1, 0, 0)], 3)
    members = pencil_members(gf5, alpha1, alpha2)
    for x in [(1, 1, 1), (0, 1, 0), (0, 0, 1), (1, 3, 4)]:
        mu = pencil_parameter(gf5, alpha1, alpha2, x)
        assert members[mu].evaluate(gf5, x) == 0
    assert pencil_parameter(gf5, alpha1, alpha2, (2, 0, 0)) is None


def test_pencil_in_dimension_four_has_q_plus_one_members():
    field = field_new(3, 1)
    Y = [(1, 0, 0, 0), (0, 1, 1, 0)]
    alpha1, alpha2 = pencil(field, Y, 4)
    members = {form.covector for form in pencil_members(field, alpha1, alpha2)}

    # Every normalized hyperplane form of GF(3)^4 vanishing on Y
    brute = set()
    for v in itertools.product(range(3), repeat=4):
        if any(v) and normalize(field, v) == v and all(field.dot(v, y) == 0 for y in Y):
            brute.add(v)
    assert members == brute
    assert len(brute) == 4


def test_linear_form_rejects_zero():
    with pytest.raises(DimensionError):
        LinearForm((0, 0, 0))
