import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cideals import GF, Q, builtin

try:
    from hypothesis import settings

    settings.register_profile("suite", deadline=None, max_examples=50)
    settings.load_profile("suite")
except ImportError:
    pass


@pytest.fixture
def h3_gf2():
    return builtin("heisenberg", GF(2), 3)


@pytest.fixture
def h3_gf3():
    return builtin("heisenberg", GF(3), 3)


@pytest.fixture
def h3_q():
    return builtin("heisenberg", Q, 3)


@pytest.fixture
def sl2_gf5():
    return builtin("sl2", GF(5))


@pytest.fixture
def sl2_q():
    return builtin("sl2", Q)


@pytest.fixture
def t2_gf2():
    return builtin("t", GF(2), 2)


@pytest.fixture
def t2_q():
    return builtin("t", Q, 2)


@pytest.fixture
def aa3_q():
    return builtin("almost_abelian", Q, 3)
