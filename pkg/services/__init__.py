"""Service layer: logging and error types"""
from services.logger import get_logger
from services.exceptions import SingularTuranError

__all__ = [
    "get_logger",
    "SingularTuranError",
]
