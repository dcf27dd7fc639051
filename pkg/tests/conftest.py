import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hopfgraph.corpus import corpus, designated_multigraphs
from hopfgraph.multigraph import Multigraph

settings.register_profile(
    "default",
    deadline=None,
    max_examples=40,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", deadline=None, max_examples=400)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def multigraphs(draw, n_min=0, n_max=5, e_max=7, loops=True):
    n = draw(st.integers(n_min, n_max))
    if n == 0:
        return Multigraph(0)
    vertex = st.integers(0, n - 1)
    pair = st.tuples(vertex, vertex)
    if not loops:
        pair = pair.filter(lambda p: p[0] != p[1])
    edges = draw(st.lists(pair, max_size=e_max)) if (loops or n > 1) else []
    return Multigraph(n, tuple(edges))


@st.composite
def simple_graphs(draw, n_min=1, n_max=5):
    n = draw(st.integers(n_min, n_max))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Multigraph(n, tuple(sorted(chosen)))


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(list(range(n))))


@pytest.fixture(scope="session")
def small_corpus():
    return corpus(4)


@pytest.fixture(scope="session")
def full_corpus():
    return corpus(5)


@pytest.fixture(scope="session")
def multis():
    return designated_multigraphs()


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
