"""
Application configuration using Pydantic Settings
"""
from pathlib import Path
from typing import Optional

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """
    Settings loaded from QTCAT_* environment variables or a .env file
    """
    # App
    APP_NAME: str = "qtcat"

    # Storage
    CACHE_DIR: Path = Path.home() / ".qtcatalan" / "cache"
    BUDGET_FILE: Optional[Path] = None

    # Logging
    LOG_FILE: str = "qtcat.log"
    LOG_LEVEL: str = "INFO"
    SHOW_PROGRESS: bool = True

    # Execution
    WORKERS: int = 1
    RC_RETRY_BUDGET: int = 32  # abscissa perturbations per grid axis
    DEFAULT_SEED: int = 0

    class Config:
        env_file = ".env"
        env_prefix = "QTCAT_"
        case_sensitive = True


# Create settings instance
settings = Settings()
