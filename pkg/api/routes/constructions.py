"""Construction API routes"""
from fastapi import APIRouter

from api.middleware.metrics import record_construction
from core.oracle import construction_report
from core.registry import REGISTRY, get_construction
from schemas.constructions import ConstructRequest
from services.logger import get_logger

logger = get_logger(__name__)
router = APIRouter()


@router.get("")
def list_constructions():
    """Names, parameters and descriptions of every registered construction"""
    return [
        {
            "name": spec.name,
            "params": list(spec.params),
            "defaults": spec.defaults,
            "verify_mode": spec.verify_mode.value,
            "description": spec.description,
        }
        for spec in REGISTRY.values()
    ]


@router.post("/{name}")
def build_construction(name: str, request: ConstructRequest):
    """Build a named construction, optionally verifying it"""
    spec = get_construction(name)
    logger.info("construct_endpoint_called", name=name, params=request.params, verify=request.verify)
    report = construction_report(spec, request.params, verify=request.verify)
    verification = report.verification
    record_construction(name, verification is not None and verification.passed)
    return report.to_document()
