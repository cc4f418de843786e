import pytest

from knotcube.diagram import braid_corpus, close_braid, link_components, parse_braid
from knotcube.skein import HomflyEvaluator


@pytest.fixture(scope="session")
def ev():
    return HomflyEvaluator()


@pytest.fixture(scope="session")
def corpus4():
    return [close_braid(w) for w in braid_corpus(4)]


@pytest.fixture(scope="session")
def knots5():
    return [D for D in (close_braid(w) for w in braid_corpus(5)) if len(link_components(D)) == 1]


def closure(text, strands=None):
    return close_braid(parse_braid(text, strands))


TREFOIL = "1 1 1"
FIGURE_EIGHT = "1 -2 1 -2"
