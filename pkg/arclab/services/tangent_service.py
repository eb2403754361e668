"""
Tangent service: tangent functions T_Y and Segre products P_D(A, B).

This service handles:
- The per-arc cache of normalized tangent forms, keyed by (k-2)-subsets Y
- Evaluation of T_Y(x), the product of the tangent forms at x
- Segre products with validation of their index structure
- The parity bookkeeping sigma(B, L)

Y, A, B and D are point indices into the arc. Tangent forms are
normalized and sorted, so T_Y is a function rather than a function up
to a scalar; every identity built on it is scalar invariant.
"""

import random
import threading
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from arclab.core.exceptions import ConfigurationError, DimensionError
from arclab.core.logging import get_logger
from arclab.models.arc import Arc
from arclab.services.arc_service import pencil_census, validate_subset
from arclab.utils.gf import Fe
from arclab.utils.linalg import LinearForm, Vek

logger = get_logger(__name__)

YKey = tuple[int, ...]


class TangentBundle:
    """
    Lazily built map from (k-2)-subsets Y to their t tangent forms.

    Readers may share a bundle across threads; each key is computed once
    under a lock and never replaced.

    Attributes:
        arc: The arc whose tangents are cached.
    """

    def __init__(self, arc: Arc, scale_seed: int | None = None):
        """
        Args:
            arc: An arc with k >= 2.
            scale_seed: When set, every cached form is multiplied by a
                pseudo-random nonzero scalar derived from this seed and Y.
        """
        if arc.k < 2:
            raise DimensionError("tangent functions need k >= 2")
        if arc.t < 0:
            raise DimensionError(f"{arc.label()} has t = {arc.t} < 0, it cannot be an arc")
        self.arc = arc
        self.field = arc.field
        self.scale_seed = scale_seed
        self._cache: dict[YKey, tuple[LinearForm, ...]] = {}
        self._lock = threading.Lock()

    @property
    def t(self) -> int:
        return self.arc.t

    @property
    def cached(self) -> int:
        """Number of subsets built so far."""
        return len(self._cache)

    def key(self, Y: Iterable[int]) -> YKey:
        """Canonical cache key of Y; validates size and range."""
        return tuple(sorted(validate_subset(self.arc, tuple(Y), self.arc.k - 2)))

    def forms(self, Y: Iterable[int]) -> tuple[LinearForm, ...]:
        """The t tangent forms through Y, building them on first use."""
        key = self.key(Y)
        forms = self._cache.get(key)
        if forms is not None:
            return forms
        with self._lock:
            forms = self._cache.get(key)
            if forms is None:
                forms = self._build(key)
                self._cache[key] = forms
        return forms

    def _build(self, key: YKey) -> tuple[LinearForm, ...]:
        tangents, _ = pencil_census(self.arc, key)
        if self.scale_seed is not None:
            rng = random.Random(f"{self.scale_seed}:{key}")
            tangents = [form.scaled(self.field, rng.randrange(1, self.field.q)) for form in tangents]
        return tuple(tangents)

    def value(self, Y: Iterable[int], x: Sequence[int]) -> Fe:
        """T_Y(x) for a vector x."""
        field = self.field
        result = field.one
        for form in self.forms(Y):
            result = field.mul(result, form.evaluate(field, x))
            if result == 0:
                break
        return result

    def at(self, Y: Iterable[int], index: int) -> Fe:
        """T_Y at the point with the given index."""
        return self.value(Y, self.arc.points[index])

    def prebuild(self) -> int:
        """Build every (k-2)-subset; returns the number of cached subsets."""
        for Y in combinations(range(self.arc.size), self.arc.k - 2):
            self.forms(Y)
        logger.info(f"Prebuilt {len(self._cache)} tangent sets for {self.arc.label()}")
        return len(self._cache)

    def rescaled(self, seed: int) -> "TangentBundle":
        """A fresh bundle on the same arc with every tangent form rescaled."""
        return TangentBundle(self.arc, scale_seed=seed)


def tangent_forms(bundle: TangentBundle, Y: Iterable[int]) -> list[LinearForm]:
    """
    The t tangent forms through Y, ordered by covector.

    Raises:
        DimensionError: Y has the wrong size or bad indices.
        DependentPointsError: Y is dependent.
        NotAnArcError: The arc property fails around Y.
    """
    return list(bundle.forms(Y))


def tangent_value(bundle: TangentBundle, Y: Iterable[int], x: Vek) -> Fe:
    """T_Y(x); zero iff x lies on a tangent hyperplane through Y."""
    return bundle.value(Y, x)


# =============================================================================
# SEGRE PRODUCT
# =============================================================================

@dataclass(frozen=True)
class SegreQuery:
    """
    Arguments of P_D(A, B).

    A = (a_1, ..., a_n) and B = (b_0, ..., b_{n-1}) are ordered; D is a set
    of size k - n - 1. Factor i (1-based) divides T_{Y_i}(a_i) by
    T_{Y_i}(b_{i-1}) where Y_i = D + {a_1..a_{i-1}} + {b_i..b_{n-1}}.
    """

    A: tuple[int, ...]
    B: tuple[int, ...]
    D: tuple[int, ...]

    @classmethod
    def of(cls, A: Sequence[int], B: Sequence[int], D: Iterable[int]) -> "SegreQuery":
        return cls(tuple(A), tuple(B), tuple(sorted(D)))

    @property
    def n(self) -> int:
        return len(self.A)

    def bases(self) -> list[YKey]:
        """Y_1, ..., Y_n as sorted index tuples (before validation)."""
        return [
            tuple(sorted(self.D + self.A[:i] + self.B[i + 1 :]))
            for i in range(self.n)
        ]

    def validate(self, arc: Arc) -> list[YKey]:
        """
        Check the query against an arc and return its bases.

        Raises:
            ConfigurationError: Length mismatch, bad indices, or an overlap;
                index is the 1-based factor that breaks.
        """
        n, k = self.n, arc.k
        if len(self.B) != n:
            raise ConfigurationError(f"A has {n} entries but B has {len(self.B)}")
        if len(self.D) != k - n - 1:
            raise ConfigurationError(f"D must have {k - n - 1} entries, got {len(self.D)}")
        for i in self.A + self.B + self.D:
            if not 0 <= i < arc.size:
                raise ConfigurationError(f"index {i} is not a point of {arc.label()}")

        bases = self.bases()
        for i, Y in enumerate(bases):
            if len(set(Y)) != k - 2:
                raise ConfigurationError(
                    f"factor {i + 1}: base {list(Y)} does not have {k - 2} distinct points",
                    index=i + 1,
                )
            if self.A[i] in Y or self.B[i] in Y:
                raise ConfigurationError(
                    f"factor {i + 1}: base {list(Y)} contains a_{i + 1}={self.A[i]} or b_{i}={self.B[i]}",
                    index=i + 1,
                )
        return bases


def segre_product(bundle: TangentBundle, query: SegreQuery) -> Fe:
    """
    P_D(A, B); P_D((), ()) is 1.

    Args:
        bundle: Tangent bundle of the arc.
        query: The Segre query.

    Returns:
        The exact, nonzero field value.

    Raises:
        ConfigurationError: Malformed query, with the offending factor index.
    """
    field = bundle.field
    bases = query.validate(bundle.arc)
    numerator, denominator = field.one, field.one
    for i, Y in enumerate(bases):
        numerator = field.mul(numerator, bundle.at(Y, query.A[i]))
        denominator = field.mul(denominator, bundle.at(Y, query.B[i]))
    if denominator == 0:
        raise ConfigurationError("a Segre denominator vanishes; B must be points of the arc outside each base")
    return field.div(numerator, denominator)


def segre(bundle: TangentBundle, D: Iterable[int], A: Sequence[int], B: Sequence[int]) -> Fe:
    """Shorthand for segre_product(bundle, SegreQuery.of(A, B, D))."""
    return segre_product(bundle, SegreQuery.of(A, B, D))


def sigma(B: Iterable[int], L: Sequence[int], t: int) -> int:
    """
    (t + 1) times the adjacent transpositions that move B to the end of L.

    Relative orders inside B and inside L minus B are kept. Only the parity
    of the result is meaningful.

    Raises:
        ConfigurationError: B is not contained in L.
    """
    members = set(B)
    if not members <= set(L):
        raise ConfigurationError(f"{sorted(members)} is not contained in {list(L)}")
    inversions = 0
    rest_after = 0
    for element in reversed(L):
        if element in members:
            inversions += rest_after
        else:
            rest_after += 1
    return (t + 1) * inversions
