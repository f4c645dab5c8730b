import pytest

from graphchomp.engine import GrundyTable


@pytest.fixture(scope="session")
def table():
    """One shared value table: later tests reuse earlier work."""
    return GrundyTable()
