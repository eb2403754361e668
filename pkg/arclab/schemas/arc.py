"""
Pydantic schemas for arcs, MDS verdicts and tangent censuses.
"""

from pydantic import BaseModel, Field

from arclab.models.arc import Arc
from arclab.utils.gf import field_new


class FieldInfo(BaseModel):
    """
    Schema describing a constructed field.

    Example:
        {"p": 3, "h": 2, "q": 9, "modulus": [1, 0, 1]}
    """

    p: int
    h: int
    q: int
    modulus: list[int] = Field(..., description="Reduction polynomial, low degree first")


class ArcPayload(BaseModel):
    """
    JSON form of an arc; re-parses to an identical Arc.

    Example:
        {"p": 2, "h": 1, "modulus": [0, 1], "k": 2, "points": [[1, 0], [1, 1], [0, 1]]}
    """

    p: int
    h: int
    modulus: list[int]
    k: int = Field(..., ge=1)
    points: list[list[int]]
    name: str = ""

    @classmethod
    def from_arc(cls, arc: Arc) -> "ArcPayload":
        """Build the payload of an arc."""
        return cls(
            p=arc.field.p,
            h=arc.field.h,
            modulus=list(arc.field.modulus),
            k=arc.k,
            points=[list(point) for point in arc.points],
            name=arc.name,
        )

    def to_arc(self) -> Arc:
        """Rebuild the Arc, including its field."""
        field = field_new(self.p, self.h, self.modulus)
        return Arc(field, self.k, tuple(tuple(point) for point in self.points), name=self.name)


class MdsCheckResult(BaseModel):
    """
    Outcome of an MDS check.

    witness holds the lexicographically first singular k-subset on failure.
    """

    passed: bool
    k: int
    n: int
    witness: list[int] | None = None


class Unisecant(BaseModel):
    """A pencil hyperplane through Y meeting exactly one further point."""

    point: int
    form: list[int]


class YCensus(BaseModel):
    """Partition of the pencil through one (k-2)-subset Y."""

    Y: list[int]
    tangent_count: int
    tangents: list[list[int]] = Field(default_factory=list, description="Normalized tangent covectors")
    unisecants: list[Unisecant] = Field(default_factory=list)


class ArcCensus(BaseModel):
    """Census of every (k-2)-subset of an arc."""

    t: int
    per_Y: list[YCensus]

    @property
    def consistent(self) -> bool:
        """True when every Y has exactly t tangents."""
        return all(entry.tangent_count == self.t for entry in self.per_Y)
