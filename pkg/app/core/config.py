"""
Configuration settings for the squarenet toolkit
"""

from typing import List

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings"""

    # Server settings
    HOST: str = Field(default="0.0.0.0", description="HTTP bind address")
    PORT: int = Field(default=8000, description="HTTP port")
    DEBUG: bool = Field(default=False, description="Reload on change")

    # CORS settings
    ALLOWED_ORIGINS: List[str] = Field(default=["*"])

    LOG_LEVEL: str = Field(
        default="INFO",
        description="Root log level used by the entry points"
    )

    # Enumeration settings
    JOBS: int = Field(
        default=1,
        ge=1,
        description="Default number of worker processes for enumerate"
    )

    CHUNK_SIZE: int = Field(
        default=16,
        ge=1,
        description="Embeddings handed to a worker per task"
    )

    CHECKPOINT_EVERY: int = Field(
        default=500,
        ge=1,
        description="Graphs processed between catalog/progress checkpoints"
    )

    CATALOG_DIR: str = Field(
        default="catalogs",
        description="Default output directory for enumerate"
    )

    # Search bounds
    ORACLE_MAX_EDGES: int = Field(
        default=18,
        description="Largest edge count accepted by the brute-force embedding generator"
    )

    MAX_ISOMER_STATES: int = Field(
        default=200_000,
        description="Bound on the isomer closure of a single dissection"
    )

    # Rendering defaults
    SVG_SCALE: float = Field(default=4.0, gt=0, description="Pixels per unit length")
    SVG_STROKE: float = Field(default=1.0, ge=0, description="Outline width in pixels")
    SVG_FONT_SIZE: float = Field(
        default=0.0,
        ge=0,
        description="Label font size in pixels; 0 sizes labels from each square"
    )

    # HTTP input limits
    MAX_CODE_LENGTH: int = Field(
        default=20_000,
        description="Longest Bouwkampcode/tablecode accepted by the HTTP API"
    )

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="SQUARENET_",
        case_sensitive=True,
        extra="ignore",
    )


# Create global settings instance
settings = Settings()
