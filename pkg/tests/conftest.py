import pytest

from artin_rinf.graph import parse_graph
from golden import CORPUS


@pytest.fixture
def load():
    def _load(name):
        return parse_graph((CORPUS / f"{name}.graph").read_text())
    return _load
