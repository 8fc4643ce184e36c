from pathlib import Path
from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict

class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    LOG_LEVEL: str = "INFO"

    # --- Cache de resultados do oráculo ---
    CACHE_BACKEND: Literal["file", "redis", "none"] = "file"
    EXTREMAL_CACHE: Path = Path(".extremal_cache.jsonl")

    REDIS_DB_MAIN: int = 2
    REDIS_PASSWORD: str | None = None
    REDIS_HOST: str = '127.0.0.1'
    REDIS_PORT: int = 6379

    # --- Limites das buscas exaustivas ---
    ORACLE_MAX_ORDER: int = 10
    ORACLE_JOBS: int = 1
    EXHAUSTIVE_MAX_ORDER: int = 16

    # --- Gerador aleatório ---
    RANDOM_SEED: int = 20240101
    RANDOM_RETRY_BUDGET: int = 10000

settings = Settings()
