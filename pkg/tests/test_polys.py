import pytest
from hypothesis import given
from hypothesis import strategies as st

from qhodge.polys import (
    ALPHA,
    BETA,
    GAMMA,
    Poly,
    branch_satisfies,
    conjugate_closure,
    poly_ratio,
    same_solution_set,
    solve_system,
    var,
)
from qhodge.scalars import I, ONE, Q

from strategies import ratfuncs

names = st.sampled_from(["alpha", "beta", "gamma"])


@st.composite
def polys(draw):
    out = Poly()
    for name, e, c in draw(st.lists(st.tuples(names, st.integers(0, 2), ratfuncs()), max_size=3)):
        out = out + var(name) ** e * c
    return out


@given(polys(), polys(), polys())
def test_ring_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x - x == Poly()


@given(polys(), polys())
def test_substitution_is_a_ring_map(x, y):
    values = {"alpha": BETA * Q, "gamma": Poly.lift(ONE + Q)}
    assert (x * y).substitute(values) == x.substitute(values) * y.substitute(values)


@given(polys())
def test_conjugation_swaps_starred_names(x):
    assert x.conjugate().conjugate() == x


def test_conjugate_name_and_reality():
    p = ALPHA * I
    assert p.conjugate() == var("alpha*") * (-I)
    assert var("m").conjugate() == var("m")


def test_poly_ratio():
    assert poly_ratio(ALPHA * BETA * Q, ALPHA * BETA) == Q
    with pytest.raises(ValueError):
        poly_ratio(ALPHA, BETA)


def test_solve_linear_and_square_branches():
    eqs = [ALPHA - BETA * Q ** 2, GAMMA * GAMMA - BETA * BETA * Q ** 2]
    branches = solve_system(eqs, ["alpha", "gamma", "beta"])
    assert len(branches) == 2
    for b in branches:
        assert branch_satisfies(b, eqs)


def test_solution_sets_compare_up_to_parametrization():
    first = solve_system(conjugate_closure([ALPHA - BETA]), ["alpha*", "alpha", "beta*", "beta"])
    second = solve_system(conjugate_closure([BETA - ALPHA]), ["beta*", "beta", "alpha*", "alpha"])
    assert same_solution_set(first, second)
    third = solve_system(conjugate_closure([BETA - ALPHA * Q]), ["beta*", "beta", "alpha*", "alpha"])
    assert not same_solution_set(first, third)
