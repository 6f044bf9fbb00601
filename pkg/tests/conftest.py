import pytest

from baralt import fixtures as fx
from baralt.fields import QQ


@pytest.fixture(scope="session")
def all_fixtures():
    return {name: ctor() for name, ctor in fx.ALL_FIXTURES.items()}


def q(s):
    """Exact rational from an int or a 'p/q' string."""
    return QQ.parse(s)


def qv(*entries):
    return tuple(QQ.parse(e) for e in entries)
