import pytest

from pinpoint.core.config import ReasonerConfig, Settings
from pinpoint.utils import parse_goal, parse_ontology

O1_TEXT = """\
ax1: (sub A B)
ax2: (sub B C)
ax3: (sub A C)
ax4: (sub A (some r D))
"""

O2_TEXT = """\
(sub A B)
(sub B C)
"""

O3_TEXT = """\
ax1: (sub A B)
ax2: (sub B C)
ax3: (sub B D)
ax4: (sub D C)
"""


@pytest.fixture
def o1():
    return parse_ontology(O1_TEXT)


@pytest.fixture
def o2():
    return parse_ontology(O2_TEXT)


@pytest.fixture
def o3():
    return parse_ontology(O3_TEXT)


@pytest.fixture
def a_sub_c():
    return parse_goal("(sub A C)")


@pytest.fixture
def test_settings():
    return Settings(
        reasoner=ReasonerConfig(node_budget=100_000, context_budget=5_000, step_budget=200_000),
        brute_force_cap=16,
        mus_exhaustive_threshold=20,
    )


@pytest.fixture
def ontology_dir(tmp_path):
    (tmp_path / "o1.ont").write_text(O1_TEXT, encoding="utf-8")
    return tmp_path
