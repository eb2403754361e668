"""Configuration enumeration and sampling."""

import pytest

from arclab.core.exceptions import ConfigurationError, NoValidConfigurationError
from arclab.services import arc_service
from arclab.services.config_service import (
    ARC_LEMMAS,
    Shape,
    Part,
    count_configurations,
    enumerate_configurations,
    get_family,
    sample_configurations,
    verify_configuration,
)
from arclab.utils.gf import field_new


@pytest.mark.parametrize(
    "tag, expected",
    [
        ("tangents", 120),
        ("interpolation", 60),
        ("numerator", 360),
        ("denominator", 360),
        ("switch", 120),
        ("twotothen", 0),
    ],
)
def test_counts_on_conic5(conic5, tag, expected):
    assert count_configurations(conic5, tag) == expected


def test_enumeration_matches_count(conic5):
    for tag in ARC_LEMMAS:
        configurations = list(enumerate_configurations(conic5, tag))
        assert len(configurations) == count_configurations(conic5, tag)


def test_enumeration_order(conic5):
    first = next(enumerate_configurations(conic5, "tangents"))
    assert first.tag == "tangents"
    assert first.values == {"D": (), "x": (0,), "y": (1,), "z": (2,)}
    assert first["x"] == (0,)


def test_enumerated_parts_are_disjoint(conic5):
    for configuration in enumerate_configurations(conic5, "interpolation"):
        Y, E = configuration["Y"], configuration["E"]
        assert not set(Y) & set(E)
        assert list(E) == sorted(E)


def test_shape_count():
    shape = Shape((Part("A", 2), Part("D", 1, ordered=False)), variants=3)
    assert shape.count(5) == 3 * 20 * 3
    assert shape.count(2) == 0


def test_twotothen_shapes_only_on_hyperovals():
    hyperoval = arc_service.hyperoval(field_new(2, 2))
    assert count_configurations(hyperoval, "twotothen") > 0
    assert all(len(c["Omega"]) == 0 for c in enumerate_configurations(hyperoval, "twotothen"))


def test_sampling_is_seeded(conic5):
    first = sample_configurations(conic5, "main", 30, seed=3)
    second = sample_configurations(conic5, "main", 30, seed=3)
    assert first == second
    assert len(first) == 30


def test_samples_are_valid(conic5_bundle):
    for tag in ("tangents", "interpolation", "switch", "main", "appendix"):
        for configuration in sample_configurations(conic5_bundle.arc, tag, 10, seed=11):
            assert verify_configuration(conic5_bundle, configuration).passed


def test_no_valid_configuration(conic5):
    with pytest.raises(NoValidConfigurationError):
        sample_configurations(conic5, "twotothen", 5, seed=1)


def test_unknown_lemma():
    with pytest.raises(ConfigurationError):
        get_family("laplace")
    with pytest.raises(ConfigurationError):
        get_family("lemma")
