"""Singular-copy and WORM check routes"""
from fastapi import APIRouter

from api.middleware.metrics import record_check
from core.patterns import pattern
from core.singular import check_worm, find_singular_copy
from schemas.constructions import CheckRequest
from schemas.patterns import Coloring, SingularVerdict, WormVerdict
from services.exceptions import InvalidArgumentError
from services.logger import get_logger
from utils.graph6 import parse_graph6

logger = get_logger(__name__)
router = APIRouter()


@router.post("")
def check_graph(request: CheckRequest):
    """
    Look for a singular copy of the pattern, or, when a coloring is supplied,
    check it for monochromatic and rainbow copies.
    """
    graph = parse_graph6(request.graph6)
    h = pattern(request.pattern)

    if request.coloring is not None:
        if len(request.coloring) != graph.n:
            raise InvalidArgumentError(
                f"coloring has {len(request.coloring)} entries, graph has {graph.n} vertices"
            )
        coloring = Coloring.from_list(request.coloring)
        violation = check_worm(graph, h, coloring)
        record_check("worm", violation is None)
        return WormVerdict(
            pattern=h.name, ok=violation is None, violation=violation, num_colors=coloring.num_colors
        ).to_document()

    witness = find_singular_copy(graph, h)
    record_check("singular", witness is None)
    logger.info("check_endpoint_called", pattern=h.name, n=graph.n, singular_free=witness is None)
    return SingularVerdict(pattern=h.name, singular_free=witness is None, witness=witness).to_document()
