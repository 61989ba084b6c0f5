import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import random_digraph_lists  # noqa: E402

from submanet import build, generate_network  # noqa: E402

FIXTURES = ("D1", "D2", "D3", "D4", "D5", "D6")


def random_corpus(count=200, seed=20211, n_max=8):
    rng = random.Random(seed)
    return [build(*random_digraph_lists(rng, n_max)) for _ in range(count)]


@pytest.fixture(scope="session")
def corpus():
    return random_corpus()


@pytest.fixture(params=FIXTURES)
def net(request):
    return generate_network(arc_policy=f"FIXTURE({request.param})")


@pytest.fixture
def D1():
    return generate_network(arc_policy="FIXTURE(D1)")


@pytest.fixture
def fx():
    return lambda name: generate_network(arc_policy=f"FIXTURE({name})")
