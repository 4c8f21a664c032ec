import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from qhodge import linalg
from qhodge.scalars import ONE, Q, ZERO, GaussianRational, as_ratfunc

from oracles import sympy_matrix

G0, G1 = GaussianRational(0), GaussianRational(1)

entries = st.integers(-3, 3).map(GaussianRational)


def square(n):
    return st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n)


def to_sym(m):
    return sympy.Matrix([[int(x.re) for x in row] for row in m])


@given(square(4))
def test_rank_and_determinant_agree_with_sympy(m):
    assert linalg.rank(m, G1) == to_sym(m).rank()
    assert linalg.determinant(m, G1) == GaussianRational(int(to_sym(m).det()))


@given(square(3))
def test_inverse_or_singular(m):
    if not linalg.determinant(m, G1):
        with pytest.raises((ValueError, ZeroDivisionError)):
            linalg.inverse(m, G0, G1)
        return
    inv = linalg.inverse(m, G0, G1)
    assert linalg.equal(linalg.matmul(m, inv, G0), linalg.identity(3, G0, G1))


@given(square(4))
def test_nullspace_is_annihilated_and_complete(m):
    basis = linalg.nullspace(m, G0, G1)
    assert len(basis) == 4 - linalg.rank(m, G1)
    for v in basis:
        assert all(not x for x in linalg.matvec(m, v, G0))


@given(square(3))
def test_charpoly_matches_sympy(m):
    coeffs = linalg.charpoly(m, G0, G1)
    x = sympy.Symbol("x")
    want = sympy.Poly(to_sym(m).charpoly(x).as_expr(), x).all_coeffs()[::-1]
    assert [int(c.re) for c in coeffs] == [int(c) for c in want]


def test_symbolic_matrix_inverse():
    m = [[ONE, Q], [Q * Q, ONE + Q]]
    inv = linalg.inverse(m, ZERO, ONE)
    assert sympy.simplify(sympy_matrix(inv) - sympy_matrix(m).inv()) == sympy.zeros(2, 2)


def test_same_span():
    u = [[ONE, ZERO, ONE], [ZERO, ONE, ONE]]
    v = [[ONE, ONE, as_ratfunc(2)], [ONE, -ONE, ZERO]]
    assert linalg.same_span(u, v, ONE)
    assert not linalg.same_span(u, [[ONE, ZERO, ZERO]], ONE)


def test_solve_inconsistent_raises():
    with pytest.raises(ValueError):
        linalg.solve([[ONE], [ONE]], [ONE, ZERO], ZERO)
