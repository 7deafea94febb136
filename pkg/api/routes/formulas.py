"""Closed-form value routes"""
from typing import Optional

from fastapi import APIRouter, Query

from core.formulas import formula_family

router = APIRouter()


@router.get("/{family}")
def evaluate_formula(
    family: str,
    n: int = Query(..., ge=0),
    r: Optional[int] = Query(None, ge=1),
    k: Optional[int] = Query(None, ge=1),
    pattern: Optional[str] = Query(None, description="Pattern name for the rex family"),
):
    """Values and bounds of a formula family at n"""
    result = formula_family(family, n, r=r, k=k, pattern=pattern)
    return {
        "family": family,
        "n": n,
        "summary": result.describe(),
        **result.model_dump(mode="json"),
    }
