import pytest


@pytest.fixture
def tmp_cache_path(tmp_path):
    return tmp_path / "oracle-cache.jsonl"
