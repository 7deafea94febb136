"""Schemas for singular copies and WORM colorings"""
from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, field_validator

from schemas.common import VersionedModel


class SingularMode(str, Enum):
    """How the degrees of a copy's vertices line up"""
    ALL_EQUAL = "ALL_EQUAL"
    ALL_DISTINCT = "ALL_DISTINCT"


class ViolationKind(str, Enum):
    """The two forbidden color patterns of a WORM coloring"""
    MONOCHROMATIC = "MONOCHROMATIC"
    RAINBOW = "RAINBOW"


class SingularWitness(BaseModel):
    """A copy of the pattern whose host degrees are all equal or pairwise distinct"""
    vertices: tuple[int, ...] = Field(..., description="Sorted host vertices spanning the copy")
    mode: SingularMode
    degrees: tuple[int, ...] = Field(..., description="Host degree of each listed vertex")

    class Config:
        frozen = True
        json_schema_extra = {
            "example": {"vertices": [0, 1, 2], "mode": "ALL_EQUAL", "degrees": [4, 4, 4]}
        }


class Coloring(BaseModel):
    """Total vertex coloring; entry v is the color id of vertex v"""
    colors: tuple[int, ...]

    class Config:
        frozen = True

    @field_validator("colors")
    @classmethod
    def non_negative(cls, v):
        if any(c < 0 for c in v):
            raise ValueError("color ids must be non-negative")
        return v

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def classes(self) -> list[tuple[int, ...]]:
        """Color classes ordered by their smallest vertex"""
        groups: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            groups.setdefault(c, []).append(v)
        return sorted(tuple(g) for g in groups.values())

    def normalized(self) -> "Coloring":
        """Restricted-growth relabeling: colors numbered by first appearance"""
        mapping: dict[int, int] = {}
        for c in self.colors:
            mapping.setdefault(c, len(mapping))
        return Coloring(colors=tuple(mapping[c] for c in self.colors))

    @classmethod
    def from_list(cls, colors) -> "Coloring":
        return cls(colors=tuple(int(c) for c in colors))


class WormViolation(BaseModel):
    """A copy of F colored with one color, or with all-different colors"""
    kind: ViolationKind
    vertices: tuple[int, ...]

    class Config:
        frozen = True


class WormVerdict(VersionedModel):
    """Outcome of checking a coloring against a pattern"""
    pattern: str
    ok: bool
    violation: Optional[WormViolation] = None
    num_colors: int


class SingularVerdict(VersionedModel):
    """Outcome of a singular-copy check"""
    pattern: str
    singular_free: bool
    witness: Optional[SingularWitness] = None
