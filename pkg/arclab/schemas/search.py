"""
Pydantic schemas for the arc search.
"""

from typing import Literal

from pydantic import BaseModel, Field


class SearchTask(BaseModel):
    """
    Parameters of one arc search over F_q^k.

    mode "max-size" returns the maximum with a witness; "census" also
    counts the complete arcs of each size found in the search tree.
    """

    p: int
    h: int = Field(default=1, ge=1)
    k: int = Field(..., ge=2)
    mode: Literal["max-size", "census"] = "max-size"
    naive: bool = Field(default=False, description="Search from the empty arc without frame fixing")
    node_budget: int = Field(default=50_000_000, gt=0)
    time_budget: float = Field(default=600.0, gt=0)
    jobs: int = Field(default=1, ge=1)


class SearchStats(BaseModel):
    """Counters reported next to the witness."""

    nodes: int
    elapsed: float


class SearchResult(BaseModel):
    """
    Outcome of a completed search.

    witness holds the points as element code rows, in search order.
    """

    p: int
    h: int
    k: int
    size: int
    witness: list[list[int]]
    nodes: int
    elapsed: float
    naive: bool = False
    census: dict[int, int] | None = None

    @property
    def stats(self) -> SearchStats:
        return SearchStats(nodes=self.nodes, elapsed=self.elapsed)
