"""
Shared fixtures: fields, classical arcs and settings overrides.
"""

from pathlib import Path
from typing import Callable

import pytest
from hypothesis import settings as hypothesis_settings

from arclab.core.config import get_settings
from arclab.models.arc import Arc
from arclab.services import arc_service
from arclab.services.search_service import get_search_space
from arclab.services.tangent_service import TangentBundle
from arclab.utils import gf
from arclab.utils.formats import save_arc
from arclab.utils.gf import FieldSpec, field_new

hypothesis_settings.register_profile("arclab", max_examples=60, deadline=None)
hypothesis_settings.load_profile("arclab")


def _clear_caches() -> None:
    get_settings.cache_clear()
    gf._build_field.cache_clear()
    get_search_space.cache_clear()


@pytest.fixture
def configure(monkeypatch: pytest.MonkeyPatch) -> Callable[..., None]:
    """Set ARCLAB_* variables and rebuild every settings-dependent cache."""

    def apply(**values: object) -> None:
        for key, value in values.items():
            monkeypatch.setenv(f"ARCLAB_{key}", str(value))
        _clear_caches()

    yield apply
    monkeypatch.undo()
    _clear_caches()


@pytest.fixture
def gf5() -> FieldSpec:
    return field_new(5, 1)


@pytest.fixture
def gf4() -> FieldSpec:
    return field_new(2, 2)


@pytest.fixture
def conic5(gf5: FieldSpec) -> Arc:
    """Normal rational curve of GF(5)^3: six points, t = 1."""
    return arc_service.nrc(gf5, 3)


@pytest.fixture
def conic5_bundle(conic5: Arc) -> TangentBundle:
    return TangentBundle(conic5)


@pytest.fixture
def conic5_file(conic5: Arc, tmp_path: Path) -> Path:
    return save_arc(conic5, tmp_path / "conic5.txt")


@pytest.fixture
def collinear_file(tmp_path: Path) -> Path:
    """Four points of GF(5)^3, the first three on the line z = 0."""
    path = tmp_path / "bad.txt"
    path.write_text("5 1 3 4\n1 0 0\n0 1 0\n1 1 0\n0 0 1\n", encoding="utf-8")
    return path
