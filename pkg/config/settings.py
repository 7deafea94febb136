"""
Configuration management for the singular Turán toolkit.
All settings loaded from environment variables or a local .env file.
"""
from pydantic_settings import BaseSettings
from functools import lru_cache
from typing import Optional


class Settings(BaseSettings):
    """Application settings with validation"""

    # Application
    APP_NAME: str = "Singular Turán Toolkit"
    APP_VERSION: str = "1.0.0"
    ENVIRONMENT: str = "development"
    DEBUG: bool = False

    # API Configuration
    API_HOST: str = "0.0.0.0"
    API_PORT: int = 8001

    # Output
    SCHEMA_VERSION: int = 1
    NO_COLOR: Optional[str] = None

    # Oracle workers
    DEFAULT_WORKERS: int = 1
    MAX_WORKERS: int = 16
    WORKER_CHUNK_SIZE: int = 64

    # Cost guards (largest n each exhaustive search accepts)
    GENERATOR_MAX_N: int = 12
    LABELED_MAX_N: int = 7
    TS_MAX_N: int = 10
    TS_MAX_N_OTHER: int = 9
    WEX_MAX_N: int = 8
    EX_MAX_N: int = 10
    REX_MAX_N: int = 10

    # Logging
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "console"

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = True
        extra = "ignore"


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()


# Export for easy access
settings = get_settings()
