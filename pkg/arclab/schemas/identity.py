"""
Pydantic schemas for identity verification.

Configurations hold point indices into the arc; reports hold exact field
values as element codes.
"""

from typing import Any, Literal

from pydantic import BaseModel, Field, model_validator

LemmaTag = Literal[
    "tangents",
    "interpolation",
    "numerator",
    "denominator",
    "switch",
    "main",
    "appendix",
    "twotothen",
    "twotothen-reduction",
    "appendix-reduction",
    "laplace",
]

LEMMA_TAGS: tuple[str, ...] = LemmaTag.__args__


class IdentityReport(BaseModel):
    """
    Result of evaluating one lemma on one configuration.

    Two-sided identities fill lhs and rhs; zero-sum identities fill sum.
    passed is lhs == rhs, or sum == 0. Informational reports are recorded
    but never fail a suite.
    """

    lemma: str
    configuration: dict[str, Any] = Field(default_factory=dict)
    lhs: int | None = None
    rhs: int | None = None
    sum: int | None = None
    passed: bool
    informational: bool = False
    terms: list[int] | None = Field(default=None, description="Per-term values, for reductions")

    @model_validator(mode="after")
    def check_verdict(self) -> "IdentityReport":
        if self.sum is not None:
            expected = self.sum == 0
        elif self.lhs is not None and self.rhs is not None:
            expected = self.lhs == self.rhs
        else:
            expected = self.passed
        if expected != self.passed:
            raise ValueError("passed does not match the evaluated values")
        return self

    def describe(self) -> str:
        """One-line text form used in summaries."""
        config = ", ".join(f"{key}={value}" for key, value in self.configuration.items())
        fields = {"lhs": self.lhs, "rhs": self.rhs, "sum": self.sum}
        values = ", ".join(f"{name}={value}" for name, value in fields.items() if value is not None)
        if not values:
            values = "passed" if self.passed else "failed"
        return f"{self.lemma}({config}): {values}"


class MainLemmaConfig(BaseModel):
    """
    Configuration of the main lemma.

    A has size n, L size r, D size k-1-r and Omega size t+1-n; the
    sequences are pairwise disjoint.
    """

    A: list[int]
    L: list[int]
    D: list[int]
    Omega: list[int]

    @property
    def n(self) -> int:
        return len(self.A)

    @property
    def r(self) -> int:
        return len(self.L)


class TwoToTheNConfig(BaseModel):
    """
    Configuration of the q+2 sum lemma.

    A has size n-m, L size k-1-m, Omega size k-2-n, X and Y size m.
    """

    A: list[int]
    L: list[int]
    Omega: list[int]
    X: list[int]
    Y: list[int]
    n: int = Field(..., ge=0)

    @property
    def m(self) -> int:
        return len(self.X)


class SamplingPolicy(BaseModel):
    """
    How run_suite picks configurations.

    Exhaustive when forced or when the configuration count is at most
    budget; otherwise `samples` configurations drawn with `seed`.
    """

    exhaustive: bool = False
    budget: int = Field(default=10**5, ge=1)
    samples: int = Field(default=1000, ge=1)
    seed: int = 1

    @classmethod
    def from_settings(cls, **overrides) -> "SamplingPolicy":
        """Policy with defaults taken from the application settings."""
        from arclab.core.config import get_settings

        settings = get_settings()
        values = {
            "budget": settings.EXHAUSTIVE_BUDGET,
            "samples": settings.SAMPLE_COUNT,
            "seed": settings.DEFAULT_SEED,
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)


class SuiteSummary(BaseModel):
    """Aggregate verdict of a suite run."""

    lemma: str
    arc: str
    total: int
    passed: int
    informational: int = 0
    exhaustive: bool
    seed: int | None = None
    first_failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.first_failure is None

    def line(self) -> str:
        """'PASS m/m' or 'FAIL j/m (first counterexample: ...)'."""
        if self.ok:
            line = f"PASS {self.passed}/{self.total}"
            if self.informational:
                line += f" ({self.informational} informational)"
            return line
        return f"FAIL {self.passed}/{self.total} (first counterexample: {self.first_failure})"


class SuiteResult(BaseModel):
    """Reports plus summary of one suite run."""

    reports: list[IdentityReport]
    summary: SuiteSummary


class ProfileEntry(BaseModel):
    """One row of an acceptance profile."""

    name: str
    ok: bool
    detail: str


class ProfileReport(BaseModel):
    """Aggregated acceptance profile."""

    profile: str
    entries: list[ProfileEntry]

    @property
    def ok(self) -> bool:
        return all(entry.ok for entry in self.entries)
