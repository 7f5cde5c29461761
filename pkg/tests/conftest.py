import os
import tempfile

import pytest

_cache_dir = tempfile.mkdtemp(prefix="pfaflab-test-cache-")
os.environ["PFAFLAB_CACHE_DIR"] = _cache_dir


@pytest.fixture(autouse=True)
def _reset_cache_config():
    from pfaflab import cache

    cache.configure()
    yield
    cache.configure()
