"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from qhodge import algebra as alg
from qhodge.scalars import S, ZERO, GaussianRational, as_ratfunc

small_ints = st.integers(min_value=-4, max_value=4)

gaussians = st.builds(
    lambda a, b, c, d: GaussianRational(Fraction(a, c), Fraction(b, d)),
    small_ints,
    small_ints,
    st.integers(1, 5),
    st.integers(1, 5),
)


@st.composite
def laurent(draw, max_terms=3):
    terms = draw(st.lists(st.tuples(st.integers(-4, 4), gaussians), max_size=max_terms))
    out = ZERO
    for k, c in terms:
        out = out + as_ratfunc(c) * S ** k
    return out


@st.composite
def ratfuncs(draw):
    num = draw(laurent())
    den = draw(laurent().filter(bool))
    return num / den


monomials = st.tuples(st.integers(-2, 2), st.integers(0, 2), st.integers(0, 2))


@st.composite
def elements(draw, max_terms=3):
    out = alg.AlgebraElement()
    for mono, k, c in draw(st.lists(st.tuples(monomials, st.integers(-2, 2), st.integers(-3, 3)), max_size=max_terms)):
        out = out + alg.AlgebraElement.monomial(mono, as_ratfunc(c) * S ** (2 * k))
    return out


s_points = st.sampled_from([Fraction(1, 2), Fraction(2, 3), Fraction(3, 4), Fraction(3, 2)])
