"""Common schemas used across the application"""
from pydantic import BaseModel, Field
from typing import Optional
from datetime import datetime

from config.settings import settings


class VersionedModel(BaseModel):
    """Base for every document written to stdout, files or HTTP bodies"""
    schema_version: int = Field(
        default=settings.SCHEMA_VERSION, alias="schema", description="Output schema version"
    )

    class Config:
        populate_by_name = True

    def to_document(self) -> dict:
        """Serialize with the public `schema` key"""
        return self.model_dump(mode="json", by_alias=True)


class GraphPayload(BaseModel):
    """JSON graph exchange format: 0-based vertices, edges sorted"""
    n: int = Field(..., ge=0, description="Vertex count")
    edges: list[tuple[int, int]] = Field(default_factory=list, description="Sorted edge list")


class ErrorResponse(BaseModel):
    """Error response model"""
    success: bool = False
    error_code: str
    error_message: str
    details: Optional[dict] = None
    timestamp: datetime = Field(default_factory=datetime.utcnow)


class HealthCheckResponse(BaseModel):
    """Health check response"""
    status: str
    version: str
    environment: str
    schema_version: int
