"""Shared hypothesis strategies."""

from fractions import Fraction

from hypothesis import strategies as st

from icosacert.exact.cyclotomic import DEGREE, CyclotomicNumber
from icosacert.exact.intmatrix import IntMatrix

small_fractions = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))


@st.composite
def cyclotomics(draw, max_terms: int = DEGREE):
    # sparse and dense elements both occur in the pipelines
    n = draw(st.integers(0, max_terms))
    coeffs = [Fraction(0)] * DEGREE
    for i in draw(st.lists(st.integers(0, DEGREE - 1), min_size=n, max_size=n)):
        coeffs[i] = draw(small_fractions)
    return CyclotomicNumber(coeffs)


@st.composite
def int_matrices(draw, max_dim: int = 6, bound: int = 30):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(st.integers(-bound, bound), min_size=c, max_size=c), min_size=r, max_size=r))
    return IntMatrix(rows, r, c)
