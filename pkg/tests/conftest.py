import pytest

from congruence_lab import triangles


@pytest.fixture(autouse=True)
def _restore_row_limit():
    """Keep shared-table capacity changes from leaking between tests."""
    limit = triangles.row_limit()
    yield
    triangles.set_row_limit(limit)
