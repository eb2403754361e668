"""
Pydantic schemas package.

Contains the report, configuration and payload models emitted by commands.
Organized by domain: arc, identity, search.
"""

from arclab.schemas.arc import (
    ArcCensus,
    ArcPayload,
    FieldInfo,
    MdsCheckResult,
    Unisecant,
    YCensus,
)
from arclab.schemas.identity import (
    LEMMA_TAGS,
    IdentityReport,
    LemmaTag,
    MainLemmaConfig,
    ProfileEntry,
    ProfileReport,
    SamplingPolicy,
    SuiteResult,
    SuiteSummary,
    TwoToTheNConfig,
)
from arclab.schemas.search import SearchResult, SearchStats, SearchTask

__all__ = [
    # Arc
    "ArcCensus",
    "ArcPayload",
    "FieldInfo",
    "MdsCheckResult",
    "Unisecant",
    "YCensus",
    # Identity
    "LEMMA_TAGS",
    "IdentityReport",
    "LemmaTag",
    "MainLemmaConfig",
    "ProfileEntry",
    "ProfileReport",
    "SamplingPolicy",
    "SuiteResult",
    "SuiteSummary",
    "TwoToTheNConfig",
    # Search
    "SearchResult",
    "SearchStats",
    "SearchTask",
]
