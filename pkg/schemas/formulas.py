"""Schemas for closed-form values and bounds"""
from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, model_validator


class BoundKind(str, Enum):
    """Whether a value is attained or only bounds the true quantity"""
    EXACT = "EXACT"
    LOWER = "LOWER"
    UPPER = "UPPER"


class FormulaValue(BaseModel):
    """A single integer value with its provenance"""
    value: int = Field(..., ge=0)
    kind: BoundKind
    source: str = Field(..., description="Which result the value comes from")

    class Config:
        frozen = True


class FormulaResult(BaseModel):
    """All values known for one query"""
    values: list[FormulaValue] = Field(default_factory=list)

    @model_validator(mode="after")
    def ordered(self):
        lowers = [v.value for v in self.values if v.kind == BoundKind.LOWER]
        uppers = [v.value for v in self.values if v.kind == BoundKind.UPPER]
        exacts = [v.value for v in self.values if v.kind == BoundKind.EXACT]
        if len(set(exacts)) > 1:
            raise ValueError("conflicting exact values")
        low = max(lowers + exacts, default=None)
        high = min(uppers + exacts, default=None)
        if low is not None and high is not None and low > high:
            raise ValueError(f"lower bound {low} exceeds upper bound {high}")
        return self

    def _pick(self, kind: BoundKind) -> Optional[FormulaValue]:
        matches = [v for v in self.values if v.kind == kind]
        if not matches:
            return None
        if kind == BoundKind.UPPER:
            return min(matches, key=lambda v: v.value)
        return max(matches, key=lambda v: v.value)

    @property
    def exact(self) -> Optional[int]:
        v = self._pick(BoundKind.EXACT)
        return v.value if v else None

    @property
    def lower(self) -> Optional[int]:
        """Best lower bound, counting an exact value as one"""
        if self.exact is not None:
            return self.exact
        v = self._pick(BoundKind.LOWER)
        return v.value if v else None

    @property
    def upper(self) -> Optional[int]:
        if self.exact is not None:
            return self.exact
        v = self._pick(BoundKind.UPPER)
        return v.value if v else None

    def contains(self, value: int) -> bool:
        """True when `value` is consistent with every bound"""
        low, high = self.lower, self.upper
        return (low is None or low <= value) and (high is None or value <= high)

    def describe(self) -> str:
        if self.exact is not None:
            return str(self.exact)
        low = "?" if self.lower is None else str(self.lower)
        high = "?" if self.upper is None else str(self.upper)
        return f"[{low}, {high}]"
