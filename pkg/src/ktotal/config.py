"""
ktotal Configuration
====================

Configuration settings for the ktotal library, CLI and MCP server.
"""

from pydantic_settings import BaseSettings
from typing import List


class Settings(BaseSettings):
    """Configuration settings for ktotal."""

    app_name: str = "ktotal"
    app_version: str = "0.1.0"

    # Largest number of strategy pairs the enumeration oracle will visit
    enumeration_budget: int = 1_000_000

    # Reward level used when a command is given no --k
    default_k: int = 0

    log_level: str = "WARNING"

    # Game files shipped in ktotal/data
    bundled_examples: List[str] = ["figure_one.game", "figure_one_min.game"]

    class Config:
        env_file = ".env"
        env_prefix = "KTOTAL_"
