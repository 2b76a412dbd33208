import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from stickgraph import fixture
from stickgraph.model import Instance

settings.register_profile("default", deadline=None, max_examples=150,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

G1_TEXT = """p astick 5 4
e 4 1
e 5 1
e 2 2
e 3 2
e 4 2
e 1 3
e 3 3
e 1 4
e 2 4
"""
G2_TEXT = "p astick 4 2\ne 1 1\ne 3 1\ne 2 2\ne 4 2\n"


@st.composite
def instances(draw, max_a=6, max_b=5):
    n_a = draw(st.integers(1, max_a))
    n_b = draw(st.integers(1, max_b))
    nbrs = []
    for _ in range(n_b):
        nb = draw(st.sets(st.integers(1, n_a), min_size=1, max_size=n_a))
        nbrs.append(sorted(nb))
    return Instance.from_neighborhoods(n_a, nbrs)


@pytest.fixture
def g1():
    return fixture("G1")


@pytest.fixture
def g2():
    return fixture("G2")


@pytest.fixture
def g3():
    return fixture("G3")


@pytest.fixture
def g5():
    return fixture("G5")


@pytest.fixture
def single():
    return fixture("single")
