import pytest

from lrhadamard import Box, build_context

_CONTEXTS = {}


@pytest.fixture(scope="session")
def ctx_cache():
    """Shared context factory so expensive inversions happen once per run."""

    def get(k: int, c: int):
        key = (k, c)
        if key not in _CONTEXTS:
            _CONTEXTS[key] = build_context(Box(k, c))
        return _CONTEXTS[key]

    return get
