"""
Arc model: an ordered sequence of vectors of F_q^k in which every
k-subset is a basis.

Points are stored as the given representatives. They are never
renormalized, because the order and the representatives fix the signs
of every determinant computed from the arc.
"""

from dataclasses import dataclass, field as dataclass_field
from typing import Sequence

from arclab.core.exceptions import DimensionError
from arclab.utils.gf import Fe, FieldSpec
from arclab.utils.linalg import Vek


@dataclass(frozen=True)
class Arc:
    """
    Arc of F_q^k.

    Construction only checks shapes; the arc property itself is checked
    by arc_service.mds_check, so non-arcs can be loaded and diagnosed.

    Attributes:
        field: The field F_q.
        k: Ambient dimension.
        points: Ordered point representatives.
        name: Optional label used in reports.
    """

    field: FieldSpec
    k: int
    points: tuple[Vek, ...]
    name: str = dataclass_field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.k < 1:
            raise DimensionError(f"dimension {self.k} must be positive")
        points = tuple(tuple(int(c) for c in point) for point in self.points)
        for point in points:
            if len(point) != self.k:
                raise DimensionError(f"point {point} does not have length {self.k}")
            for c in point:
                self.field.check(c)
        object.__setattr__(self, "points", points)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def size(self) -> int:
        """n = |S|."""
        return len(self.points)

    @property
    def t(self) -> int:
        """Tangent count per (k-2)-subset: q + k - 1 - n."""
        return self.field.q + self.k - 1 - self.size

    def __len__(self) -> int:
        return len(self.points)

    def point(self, index: int) -> Vek:
        return self.points[index]

    def vectors(self, indices: Sequence[int]) -> list[Vek]:
        """Points for a sequence of indices, in the given order."""
        return [self.points[i] for i in indices]

    def rescaled(self, index: int, factor: Fe) -> "Arc":
        """The same arc with one representative multiplied by a nonzero scalar."""
        if factor == 0:
            raise DimensionError("representatives cannot be scaled by zero")
        points = list(self.points)
        points[index] = tuple(self.field.mul(factor, c) for c in points[index])
        return Arc(self.field, self.k, tuple(points), name=self.name)

    def label(self) -> str:
        base = self.name or "arc"
        return f"{base}(q={self.q}, k={self.k}, n={self.size})"
