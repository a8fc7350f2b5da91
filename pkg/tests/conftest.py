import hypothesis
import pytest
from hypothesis import strategies as st

from sperner_lattice.labeling import Labeling, allowed_color_lists

hypothesis.settings.register_profile("default", deadline=None, max_examples=60)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=10)
hypothesis.settings.load_profile("default")

# the three hand-listed cells of the k=3, q=2 subdivision plus the "down" cell
K3Q2_CELLS = [
    {(2, 0, 0), (1, 1, 0), (1, 0, 1)},
    {(1, 1, 0), (0, 2, 0), (0, 1, 1)},
    {(1, 0, 1), (0, 1, 1), (0, 0, 2)},
    {(1, 1, 0), (1, 0, 1), (0, 1, 1)},
]


@st.composite
def sperner_labelings(draw, k, q):
    choices = allowed_color_lists(k, q)
    return Labeling(k, q, tuple(draw(st.sampled_from(c)) for c in choices))


@pytest.fixture
def k3q2_cells():
    return [set(c) for c in K3Q2_CELLS]


ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, title: str, passed: bool, detail: str = "") -> None:
    ACCEPTANCE_LINES.append(f"criterion {number:>2} [{'PASS' if passed else 'FAIL'}] {title}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
