from fractions import Fraction

import pytest
from hypothesis import strategies as st

from hurwitz_amf.fixtures import appendix_a_polys, appendix_b_kernels
from hurwitz_amf.polyring import Frame, HomogeneousPoly, monomials


@pytest.fixture(scope="session")
def table_a():
    return appendix_a_polys()


@pytest.fixture(scope="session")
def kernels_b():
    return appendix_b_kernels()


small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def polys(draw, min_degree=0, max_degree=6, frame=Frame.X, degree=None):
    l = draw(st.integers(min_degree, max_degree)) if degree is None else degree
    mons = monomials(l)
    chosen = draw(st.lists(st.sampled_from(mons), max_size=min(len(mons), 8), unique=True))
    coeffs = draw(st.lists(small_fractions, min_size=len(chosen), max_size=len(chosen)))
    return HomogeneousPoly(l, dict(zip(chosen, coeffs)), frame)


def frac(s):
    return Fraction(s)
