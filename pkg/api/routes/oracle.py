"""Exact search routes"""
from fastapi import APIRouter

from api.middleware.metrics import record_oracle_search
from core.oracle import exact_solve
from schemas.constructions import SolveRequest
from schemas.oracle import GenOptions, Problem
from services.exceptions import InvalidArgumentError
from services.logger import get_logger

logger = get_logger(__name__)
router = APIRouter()


@router.post("")
def solve(request: SolveRequest):
    """
    Run the exhaustive solver. Requests beyond the configured cost guards are
    refused with COST_GUARD rather than truncated.
    """
    try:
        problem = Problem(request.problem)
    except ValueError:
        raise InvalidArgumentError(f"unknown problem {request.problem!r}; use ts, wex, ex or rex")
    result = exact_solve(problem, request.n, request.pattern, GenOptions(workers=request.workers))
    record_oracle_search(problem.value, result.stats.graphs_examined, result.stats.wall_time_seconds)
    return result.to_document()
