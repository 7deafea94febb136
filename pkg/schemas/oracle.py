"""Schemas for exhaustive search results"""
from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field

from config.settings import settings
from schemas.common import VersionedModel


class Problem(str, Enum):
    """Extremal problems the oracle maximizes"""
    TS = "ts"
    WEX = "wex"
    EX = "ex"
    REX = "rex"


class GenMode(str, Enum):
    """Graph enumeration modes"""
    ISOMORPH_FREE = "ISOMORPH_FREE"
    LABELED = "LABELED"


class GenOptions(BaseModel):
    """Options for exhaustive graph enumeration"""
    max_n: int = Field(default=settings.GENERATOR_MAX_N, ge=0)
    mode: GenMode = GenMode.ISOMORPH_FREE
    min_edges: int = Field(default=0, ge=0, description="Smallest edge count streamed")
    max_edges: Optional[int] = Field(default=None, ge=0, description="Largest edge count streamed")
    workers: int = Field(default=settings.DEFAULT_WORKERS, ge=1, le=settings.MAX_WORKERS)
    chunk_size: int = Field(default=settings.WORKER_CHUNK_SIZE, ge=1)

    def admits(self, edge_count: int) -> bool:
        if edge_count < self.min_edges:
            return False
        return self.max_edges is None or edge_count <= self.max_edges


class SearchStats(BaseModel):
    """Work counters for one search"""
    graphs_examined: int = 0
    predicate_calls: int = 0
    pruned: int = 0
    seed_edges: int = 0
    wall_time_seconds: float = 0.0


class ExactResult(VersionedModel):
    """Certified optimum of one extremal problem"""
    problem: Problem
    n: int
    pattern: str
    value: int = Field(..., ge=0)
    extremal: list[str] = Field(default_factory=list, description="graph6 of every extremal class")
    stats: SearchStats = Field(default_factory=SearchStats)
    notes: list[str] = Field(default_factory=list)

    class Config:
        populate_by_name = True
        json_schema_extra = {
            "example": {
                "schema": 1,
                "problem": "ts",
                "n": 6,
                "pattern": "K3",
                "value": 13,
                "extremal": ["E~~w"],
                "stats": {"graphs_examined": 3, "predicate_calls": 3, "pruned": 0},
                "notes": [],
            }
        }


class VerificationReport(VersionedModel):
    """Verdict on a built graph against its predicted profile"""
    passed: bool
    pattern: str
    predicted_edges: Optional[int] = None
    actual_edges: int
    singular_free: Optional[bool] = None
    worm_valid: Optional[bool] = None
    degrees: list[int] = Field(default_factory=list, description="Distinct degree values, ascending")
    degree_counts: dict[int, int] = Field(default_factory=dict)
    witness: Optional[dict] = None
    failures: list[str] = Field(default_factory=list)
