import hypothesis
import hypothesis.strategies as st
import pytest

from boolnet import BooleanNetwork, SignedDigraph, State

hypothesis.settings.register_profile("default", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.load_profile("default")

# F(x1, x2) = (not x2, x1)
E1 = BooleanNetwork(2, (0b10, 0b00, 0b11, 0b01))
# F(x1, x2) = (x1 and x2, x1 or x2)
E4 = BooleanNetwork(2, (0b00, 0b01, 0b01, 0b11))

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def e1():
    return E1


@pytest.fixture
def e4():
    return E4


@st.composite
def networks(draw, min_n=1, max_n=4):
    n = draw(st.integers(min_n, max_n))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=1 << n, max_size=1 << n))
    return BooleanNetwork(n, tuple(rows))


@st.composite
def network_and_state(draw, min_n=1, max_n=4):
    F = draw(networks(min_n, max_n))
    return F, State(F.n, draw(st.integers(0, (1 << F.n) - 1)))


@st.composite
def signed_digraphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    signs = draw(st.lists(st.sampled_from((0, 0, 1, -1)), min_size=n * n, max_size=n * n))
    arcs = [(j, i, s) for (j, i), s in zip(((j, i) for j in range(1, n + 1) for i in range(1, n + 1)), signs) if s]
    return SignedDigraph(n, arcs)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
