import random
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from kmdecomp.ring import GaussianRational, LaurentPoly, Ring

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ALL_RINGS = [Ring.Q, Ring.QI, Ring.LAURENT_Q, Ring.LAURENT_QI]

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, fractions, fractions)


@st.composite
def laurent_polys(draw, gaussian=False, min_exp=-3, max_exp=3):
    coeff = gaussians if gaussian else fractions
    terms = draw(st.dictionaries(st.integers(min_exp, max_exp), coeff, max_size=4))
    return LaurentPoly(terms)


def element_seeds():
    return st.integers(min_value=0, max_value=2**32 - 1)


@pytest.fixture
def rng():
    return random.Random(1234)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split()[1].rstrip("."))):
        terminalreporter.write_line(line)
