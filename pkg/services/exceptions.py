"""Custom exceptions for the application"""
from typing import Optional


class SingularTuranError(Exception):
    """Base exception for the toolkit"""
    def __init__(self, message: str, error_code: str = "GENERAL_ERROR"):
        self.message = message
        self.error_code = error_code
        super().__init__(self.message)


class ConfigurationError(SingularTuranError):
    """Configuration error"""
    def __init__(self, message: str):
        super().__init__(message, "CONFIG_ERROR")


class InvalidArgumentError(SingularTuranError):
    """Argument outside an operation's contract"""
    def __init__(self, message: str):
        super().__init__(message, "INVALID_ARGUMENT")


class DomainError(SingularTuranError):
    """Parameters for which a formula or construction is undefined"""
    def __init__(self, message: str):
        super().__init__(message, "DOMAIN_ERROR")


class Graph6ParseError(SingularTuranError):
    """Malformed graph6 input"""
    def __init__(self, message: str, offset: Optional[int] = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (offset {offset})"
        super().__init__(message, "PARSE_ERROR")


class CostGuardError(SingularTuranError):
    """Exhaustive search refused because the instance is too large"""
    def __init__(self, message: str, advice: str = ""):
        self.advice = advice
        if advice:
            message = f"{message}; {advice}"
        super().__init__(message, "COST_GUARD")


class NotFoundError(SingularTuranError):
    """Unknown pattern, construction or formula family"""
    def __init__(self, resource: str, identifier: str):
        message = f"{resource} not found: {identifier}"
        super().__init__(message, "NOT_FOUND")


class VerificationError(SingularTuranError):
    """A search or construction failed to certify its own answer"""
    def __init__(self, message: str):
        super().__init__(message, "VERIFICATION_ERROR")
