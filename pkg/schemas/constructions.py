"""Schemas for construction output and comparison tables"""
from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field

from config.settings import settings
from schemas.common import GraphPayload, VersionedModel
from schemas.oracle import VerificationReport


class OutputFormat(str, Enum):
    GRAPH6 = "graph6"
    DOT = "dot"
    JSON = "json"


class RowStatus(str, Enum):
    """Comparison outcome of one table row"""
    AGREE = "AGREE"
    BRACKETED = "BRACKETED"
    MISMATCH = "MISMATCH"
    UNCHECKED = "UNCHECKED"


class ConstructionReport(VersionedModel):
    """A named construction with its prediction"""
    name: str
    params: dict = Field(default_factory=dict)
    n: int
    pattern: str = Field(..., description="Pattern the construction avoids")
    predicted_edges: int
    actual_edges: int
    singular_free: Optional[bool] = Field(None, description="Set for singular-free constructions")
    degrees: list[int] = Field(default_factory=list, description="Distinct degree values, ascending")
    graph6: str
    graph: GraphPayload
    coloring: Optional[list[int]] = None
    verification: Optional[VerificationReport] = None


class TableRow(BaseModel):
    """One row of a formula/construction/oracle comparison table"""
    n: int
    formula: str
    construction: Optional[int] = None
    oracle: Optional[int] = None
    status: RowStatus = RowStatus.UNCHECKED
    note: str = ""


class ConstructRequest(BaseModel):
    """HTTP request body for building a construction"""
    params: dict = Field(default_factory=dict, description="Construction parameters, e.g. {'n': 9}")
    verify: bool = False

    class Config:
        json_schema_extra = {"example": {"params": {"n": 9}, "verify": True}}


class CheckRequest(BaseModel):
    """HTTP request body for singular/WORM checks"""
    graph6: str = Field(..., min_length=1)
    pattern: str = Field(..., description="Registry name such as K3 or P3")
    coloring: Optional[list[int]] = Field(None, description="Check this WORM coloring instead")


class SolveRequest(BaseModel):
    """HTTP request body for the exact oracle"""
    problem: str = Field(..., description="ts | wex | ex | rex")
    n: int = Field(..., ge=1)
    pattern: str
    workers: int = Field(default=1, ge=1, le=settings.MAX_WORKERS)
