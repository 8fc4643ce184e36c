"""
Cache dos resultados do oráculo, chaveado por (kind, level, n, d).

Backends: arquivo JSON lines (padrão, o último registro de cada chave vence),
hash no Redis, ou nenhum.
"""
import json
from pathlib import Path
from typing import Protocol

from app.config.settings import settings
from app.core.exceptions import CacheUnavailableError
from app.core.logger import get_logger

logger = get_logger(__name__)

REDIS_RESULTS_KEY = "oracle:results"


def cache_key(kind: str, level: int, n: int, d: int) -> str:
    return f"{kind}:{level}:{n}:{d}"


class ResultCache(Protocol):
    def get(self, key: str) -> dict | None: ...

    def put(self, key: str, document: dict) -> None: ...


class NullCache:
    def get(self, key: str) -> dict | None:
        return None

    def put(self, key: str, document: dict) -> None:
        return None


class JsonLinesCache:
    def __init__(self, path: Path | str):
        self.path = Path(path)
        self._entries: dict[str, dict] | None = None

    def _load(self) -> dict[str, dict]:
        if self._entries is not None:
            return self._entries
        self._entries = {}
        if not self.path.exists():
            return self._entries
        with self.path.open(encoding="utf-8") as handle:
            for number, line in enumerate(handle, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    record = json.loads(line)
                    self._entries[record["key"]] = record["value"]
                except (json.JSONDecodeError, KeyError, TypeError):
                    logger.warning(f"Linha inválida no cache ignorada: path={self.path} linha={number}")
        return self._entries

    def get(self, key: str) -> dict | None:
        return self._load().get(key)

    def put(self, key: str, document: dict) -> None:
        self._load()[key] = document
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a", encoding="utf-8") as handle:
            handle.write(json.dumps({"key": key, "value": document}, sort_keys=True) + "\n")


class RedisCache:
    def __init__(self, client):
        self.client = client

    def get(self, key: str) -> dict | None:
        raw = self.client.hget(REDIS_RESULTS_KEY, key)
        return json.loads(raw) if raw else None

    def put(self, key: str, document: dict) -> None:
        self.client.hset(REDIS_RESULTS_KEY, key, json.dumps(document, sort_keys=True))


def get_cache(path: Path | str | None = None, backend: str | None = None) -> ResultCache:
    """
    Resolve o backend configurado. Um caminho explícito força o backend de arquivo.
    Se o Redis não responder, cai para o arquivo.
    """
    backend = "file" if path is not None else (backend or settings.CACHE_BACKEND)
    if backend == "none":
        return NullCache()
    if backend == "redis":
        from app.services.redis_service import get_redis

        try:
            return RedisCache(get_redis())
        except CacheUnavailableError:
            logger.warning(f"Redis indisponível, usando cache em arquivo: path={settings.EXTREMAL_CACHE}")
    return JsonLinesCache(path if path is not None else settings.EXTREMAL_CACHE)
