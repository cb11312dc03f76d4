from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from tbsym.algebra import Polynomial

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

VARS = ("x", "y", "z")

small_fractions = st.builds(
    Fraction, st.integers(min_value=-6, max_value=6), st.integers(min_value=1, max_value=4)
)
exponents = st.tuples(*[st.integers(min_value=0, max_value=3)] * len(VARS))


@st.composite
def polynomials(draw, vars=VARS, max_terms=5):
    n = len(vars)
    exps = st.tuples(*[st.integers(min_value=0, max_value=3)] * n)
    terms = draw(st.dictionaries(exps, small_fractions, max_size=max_terms))
    return Polynomial(vars, terms)


@st.composite
def points(draw, n=len(VARS)):
    return [draw(small_fractions) for _ in range(n)]


@pytest.fixture
def xyz():
    return Polynomial.variables(VARS)
