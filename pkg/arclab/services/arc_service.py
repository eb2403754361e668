"""
Arc service: constructors, MDS verification, duality and tangent census.

This service handles:
- The classical constructions (normal rational curve, regular hyperoval, frame)
- MDS checks, incremental and by full lexicographic scan
- The dual arc obtained from the dual code
- The secant/tangent census of the pencil through a (k-2)-subset
"""

from itertools import combinations, product
from typing import Sequence

from arclab.core.exceptions import DependentPointsError, DimensionError, NotAnArcError
from arclab.core.logging import get_logger
from arclab.models.arc import Arc
from arclab.schemas.arc import ArcCensus, MdsCheckResult, Unisecant, YCensus
from arclab.utils.gf import FieldSpec
from arclab.utils.linalg import (
    LinearForm,
    Vek,
    det_seq,
    normalize,
    nullspace,
    pencil,
    pencil_members,
    pencil_parameter,
    rank,
)

logger = get_logger(__name__)


# =============================================================================
# MDS CHECK
# =============================================================================

def mds_check_full(field: FieldSpec, k: int, points: Sequence[Vek]) -> MdsCheckResult:
    """
    Scan every k-subset in lexicographic order.

    Args:
        field: The field.
        k: Dimension.
        points: Point sequence, each of length k.

    Returns:
        MdsCheckResult with the lexicographically first singular subset on failure.
    """
    _check_lengths(k, points)
    for subset in combinations(range(len(points)), k):
        if det_seq(field, [points[i] for i in subset]) == 0:
            return MdsCheckResult(passed=False, k=k, n=len(points), witness=list(subset))
    return MdsCheckResult(passed=True, k=k, n=len(points))


def mds_check(field: FieldSpec, k: int, points: Sequence[Vek]) -> MdsCheckResult:
    """
    Check that every k-subset of points is a basis.

    Each point is validated against all (k-1)-subsets of its predecessors.
    When that finds a violation, the full scan supplies the witness so the
    reported index set is the lexicographically first singular one.

    Args:
        field: The field.
        k: Dimension.
        points: Point sequence, each of length k.

    Returns:
        MdsCheckResult.
    """
    _check_lengths(k, points)
    for j, point in enumerate(points):
        for subset in combinations(range(j), k - 1):
            if det_seq(field, ([points[i] for i in subset], point)) == 0:
                logger.debug(f"Singular subset {subset + (j,)} found incrementally")
                return mds_check_full(field, k, points)
    return MdsCheckResult(passed=True, k=k, n=len(points))


def require_arc(arc: Arc) -> Arc:
    """
    Return the arc unchanged, or raise with a witness when it is not one.

    Raises:
        NotAnArcError: Some k-subset is singular.
    """
    result = mds_check(arc.field, arc.k, arc.points)
    if not result.passed:
        raise NotAnArcError(
            f"{arc.label()} is not an arc: points {result.witness} are dependent",
            witness=tuple(result.witness or ()),
        )
    return arc


def _check_lengths(k: int, points: Sequence[Vek]) -> None:
    if k < 1:
        raise DimensionError(f"dimension {k} must be positive")
    for point in points:
        if len(point) != k:
            raise DimensionError(f"point {tuple(point)} does not have length {k}")


# =============================================================================
# CONSTRUCTIONS
# =============================================================================

def nrc(field: FieldSpec, k: int) -> Arc:
    """
    Normal rational curve (1, s, ..., s^{k-1}) for s in code order, then e_k.

    Args:
        field: The field.
        k: Dimension with 2 <= k <= q.

    Returns:
        Arc of size q + 1.

    Raises:
        DimensionError: If k is out of range.
    """
    if not 2 <= k <= field.q:
        raise DimensionError(f"the normal rational curve needs 2 <= k <= q, got k={k}, q={field.q}")
    points = [tuple(field.pow(s, e) for e in range(k)) for s in field.elements()]
    points.append(tuple([field.zero] * (k - 1) + [field.one]))
    arc = Arc(field, k, tuple(points), name="nrc")
    logger.info(f"Built {arc.label()}")
    return arc


def hyperoval(field: FieldSpec, k: int = 3) -> Arc:
    """
    Regular hyperoval: the conic (1, s, s^2), the point (0, 0, 1), and the nucleus (0, 1, 0).

    Raises:
        DimensionError: If k != 3 or the characteristic is odd.
    """
    if k != 3:
        raise DimensionError(f"hyperovals live in dimension 3, got k={k}")
    if field.p != 2:
        raise DimensionError(f"hyperovals need characteristic 2, got p={field.p}")
    points = [(field.one, s, field.mul(s, s)) for s in field.elements()]
    points.append((field.zero, field.zero, field.one))
    points.append((field.zero, field.one, field.zero))
    arc = Arc(field, 3, tuple(points), name="hyperoval")
    logger.info(f"Built {arc.label()}")
    return arc


def bush_frame(field: FieldSpec, k: int) -> Arc:
    """
    The frame e_1, ..., e_k, e_1 + ... + e_k.

    Raises:
        DimensionError: If k < 2.
    """
    if k < 2:
        raise DimensionError(f"the frame needs k >= 2, got k={k}")
    points = [tuple(field.one if i == j else field.zero for j in range(k)) for i in range(k)]
    points.append(tuple([field.one] * k))
    return Arc(field, k, tuple(points), name="frame")


CONSTRUCTORS = {
    "nrc": nrc,
    "hyperoval": hyperoval,
    "bush-frame": bush_frame,
}


def construct(kind: str, field: FieldSpec, k: int) -> Arc:
    """Dispatch to a named constructor."""
    if kind not in CONSTRUCTORS:
        raise DimensionError(f"unknown construction '{kind}', expected one of {sorted(CONSTRUCTORS)}")
    return CONSTRUCTORS[kind](field, k)


# =============================================================================
# DUALITY
# =============================================================================

def dual_arc(arc: Arc) -> Arc:
    """
    Arc of the dual code.

    The points are the columns of a k x n generator matrix G. The rows of H
    span the nullspace of G (computed with a deterministic pivot order), so
    G H^T = 0, and the n columns of H form an arc of F_q^{n-k}.

    Raises:
        DimensionError: If n <= k.
        NotAnArcError: If the points do not span F_q^k.
    """
    n, k, field = arc.size, arc.k, arc.field
    if n <= k:
        raise DimensionError(f"the dual needs n > k, got n={n}, k={k}")
    generator = [[point[i] for point in arc.points] for i in range(k)]
    if rank(field, generator) != k:
        raise NotAnArcError(f"{arc.label()} does not span F_q^{k}")
    parity = nullspace(field, generator, n)
    points = tuple(tuple(row[j] for row in parity) for j in range(n))
    dual = Arc(field, n - k, points, name=f"dual-{arc.name}" if arc.name else "dual")
    logger.info(f"Dual of {arc.label()} is {dual.label()}")
    return dual


# =============================================================================
# PROJECTIVE POINTS
# =============================================================================

def normalized_points(field: FieldSpec, k: int) -> list[Vek]:
    """All (q^k - 1)/(q - 1) normalized points of F_q^k, in lexicographic code order."""
    points = []
    for v in product(field.elements(), repeat=k):
        first = next((c for c in v if c), None)
        if first == field.one:
            points.append(v)
    return points


def normalize_arc(arc: Arc) -> Arc:
    """Projectively normalize every representative (first nonzero coordinate 1)."""
    return Arc(arc.field, arc.k, tuple(normalize(arc.field, p) for p in arc.points), name=arc.name)


# =============================================================================
# TANGENT CENSUS
# =============================================================================

def validate_subset(arc: Arc, Y: Sequence[int], size: int) -> tuple[int, ...]:
    """
    Check that Y is a set of distinct point indices of the given size.

    Raises:
        DimensionError: Wrong size, repeated or out-of-range indices.
    """
    Y = tuple(Y)
    if len(Y) != size:
        raise DimensionError(f"expected {size} point indices, got {len(Y)}")
    if len(set(Y)) != len(Y):
        raise DimensionError(f"repeated indices in {list(Y)}")
    for i in Y:
        if not 0 <= i < arc.size:
            raise DimensionError(f"index {i} is not a point of {arc.label()}")
    return Y


def pencil_census(arc: Arc, Y: Sequence[int]) -> tuple[list[LinearForm], list[tuple[int, LinearForm]]]:
    """
    Split the q + 1 hyperplanes through span(Y) into tangents and unisecants.

    Every point outside Y lies on exactly one pencil member; the arc property
    means no member holds two of them.

    Returns:
        (tangent forms sorted lexicographically, [(point index, form)] in point order)

    Raises:
        DependentPointsError: Y is dependent.
        NotAnArcError: A point of S minus Y lies in span(Y) or two share a hyperplane.
    """
    field = arc.field
    Y = validate_subset(arc, Y, arc.k - 2)
    alpha1, alpha2 = pencil(field, arc.vectors(Y), arc.k)
    members = pencil_members(field, alpha1, alpha2)

    hit: dict[int, int] = {}
    for x in range(arc.size):
        if x in Y:
            continue
        mu = pencil_parameter(field, alpha1, alpha2, arc.points[x])
        if mu is None:
            raise NotAnArcError(
                f"point {x} lies in the span of {list(Y)}",
                witness=tuple(sorted(Y + (x,))),
            )
        if mu in hit:
            raise NotAnArcError(
                f"points {hit[mu]} and {x} share a hyperplane with {list(Y)}",
                witness=tuple(sorted(Y + (hit[mu], x))),
            )
        hit[mu] = x

    tangents = sorted(
        (members[mu] for mu in range(field.q + 1) if mu not in hit),
        key=lambda form: form.covector,
    )
    unisecants = sorted(((x, members[mu]) for mu, x in hit.items()), key=lambda pair: pair[0])
    return tangents, unisecants


def secant_tangent_census(arc: Arc, Y: Sequence[int]) -> YCensus:
    """
    Census of the pencil through Y: exactly t tangents and |S| - k + 2 unisecants.

    Args:
        arc: The arc.
        Y: (k-2) independent point indices.

    Returns:
        YCensus.
    """
    tangents, unisecants = pencil_census(arc, Y)
    return YCensus(
        Y=list(Y),
        tangent_count=len(tangents),
        tangents=[list(form.covector) for form in tangents],
        unisecants=[Unisecant(point=x, form=list(form.covector)) for x, form in unisecants],
    )


def census_all(arc: Arc) -> ArcCensus:
    """Census for every (k-2)-subset of the arc."""
    if arc.k < 2:
        raise DimensionError("the tangent census needs k >= 2")
    per_Y = [secant_tangent_census(arc, Y) for Y in combinations(range(arc.size), arc.k - 2)]
    census = ArcCensus(t=arc.t, per_Y=per_Y)
    logger.info(f"Census of {arc.label()}: {len(per_Y)} subsets, consistent={census.consistent}")
    return census


__all__ = [
    "DependentPointsError",
    "bush_frame",
    "census_all",
    "construct",
    "dual_arc",
    "hyperoval",
    "mds_check",
    "mds_check_full",
    "normalize_arc",
    "normalized_points",
    "nrc",
    "pencil_census",
    "require_arc",
    "secant_tangent_census",
    "validate_subset",
]
