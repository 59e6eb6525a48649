import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from plgroup.plmap import PLHomeo
from plgroup.randgen import random_F, random_F11, random_P, random_P11, random_Pa

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

X0 = PLHomeo([(0, 0), (Fraction(1, 2), Fraction(1, 4)), (Fraction(3, 4), Fraction(1, 2)), (1, 1)])
G_STAR = PLHomeo([(0, 0), (Fraction(1, 4), Fraction(1, 2)), (Fraction(1, 2), Fraction(3, 4)), (1, 1)])

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def _seeded(fn, *args):
    return seeds.map(lambda s: fn(random.Random(s), *args))


f_elements = _seeded(random_F)
f11_elements = _seeded(random_F11)
p_elements = _seeded(random_P)
p11_elements = _seeded(random_P11)


def pa_elements(a):
    return _seeded(random_Pa, Fraction(a))


unit_rationals = st.fractions(min_value=0, max_value=1, max_denominator=1 << 10)


@st.composite
def raw_p_elements(draw, max_breaks=6):
    """P elements from two independent sorted samples of interior rationals."""
    k = draw(st.integers(0, max_breaks))
    inner = st.fractions(min_value=0, max_value=1, max_denominator=64).filter(lambda x: 0 < x < 1)
    xs = draw(st.lists(inner, min_size=k, max_size=k, unique=True))
    ys = draw(st.lists(inner, min_size=k, max_size=k, unique=True))
    return PLHomeo([(0, 0), *zip(sorted(xs), sorted(ys)), (1, 1)])


@pytest.fixture
def x0():
    return X0


@pytest.fixture
def g_star():
    return G_STAR


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
