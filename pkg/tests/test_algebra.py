from fractions import Fraction

import pytest
from hypothesis import given, settings

from qhodge import algebra as alg
from qhodge.algebra import A, A_STAR, C, C_STAR, ONE_ELEMENT
from qhodge.scalars import ONE, Q

from oracles import ShiftRepresentation
from strategies import elements, monomials, s_points

START = {0: Fraction(1), 2: Fraction(-1, 3), 3: Fraction(2)}


def rep_for(s0):
    return ShiftRepresentation(s0 * s0, Fraction(3, 2), 40)


def test_defining_relations():
    q = Q
    assert A * C == C * A * q
    assert A * C_STAR == C_STAR * A * q
    assert C * C_STAR == C_STAR * C
    assert A_STAR * A + C_STAR * C == ONE_ELEMENT
    assert A * A_STAR + C * C_STAR * q * q == ONE_ELEMENT


@given(elements(), elements(), s_points)
def test_product_matches_shift_representation(x, y, s0):
    rep = rep_for(s0)
    lhs = rep.apply_element(x * y, START, s0)
    rhs = rep.apply_element(x, rep.apply_element(y, START, s0), s0)
    assert lhs == rhs


@given(elements(), elements(), elements())
@settings(max_examples=15)
def test_associativity(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(elements(), elements())
def test_star_is_an_antilinear_antihomomorphism(x, y):
    assert alg.star(x * y) == alg.star(y) * alg.star(x)
    assert alg.star(alg.star(x)) == x


@given(elements(), elements())
@settings(max_examples=15)
def test_coproduct_is_multiplicative(x, y):
    assert alg.coproduct(x * y) == alg.coproduct(x) * alg.coproduct(y)


@given(elements())
def test_counit_and_antipode_axioms(x):
    ident = lambda h: h
    eps = lambda h: alg.AlgebraElement.scalar(alg.counit(h))
    delta = alg.coproduct(x)
    assert delta.map(eps, ident).multiply_out() == x
    assert delta.map(ident, eps).multiply_out() == x
    assert delta.map(alg.antipode, ident).multiply_out() == alg.counit(x)
    assert delta.map(ident, alg.antipode).multiply_out() == alg.counit(x)


@given(elements())
@settings(max_examples=20)
def test_haar_state_is_invariant(x):
    h = lambda y: alg.AlgebraElement.scalar(alg.haar(y))
    ident = lambda y: y
    assert alg.coproduct(x).map(h, ident).multiply_out() == alg.haar(x)
    assert alg.coproduct(x).map(ident, h).multiply_out() == alg.haar(x)


def test_haar_normalization_and_positivity():
    assert alg.haar(ONE_ELEMENT) == ONE
    assert alg.haar(C * C_STAR) == (ONE - Q * Q) / (ONE - Q ** 4)
    assert alg.haar(A * A_STAR) == ONE - Q * Q * alg.haar(C * C_STAR)


@given(monomials)
def test_line_bundle_degree_is_the_right_coaction(mono):
    x = alg.mono_element(mono)
    n = alg.line_bundle_degree(x)
    coact = alg.coproduct(x).map(lambda h: h, lambda h: alg.AlgebraElement.scalar(0) + _project(h))
    # (id (x) pi) Delta x = x (x) z^-n, evaluated through z -> a
    assert coact.multiply_out() == x * _power_of_a(-n)


def _project(h):
    out = alg.AlgebraElement()
    for k, c in alg.u1_project(h).items():
        out = out + _power_of_a(k).scale(c)
    return out


def _power_of_a(k):
    return alg.mono_element((k, 0, 0))


def test_mixed_degree():
    assert alg.line_bundle_degree(A + C_STAR) == "mixed"
    assert alg.line_bundle_degree(A + C) == -1
    assert alg.line_bundle_degree(alg.AlgebraElement()) == 0
    assert alg.line_bundle_degree(A * C_STAR) == 0


def test_u1_projection_is_multiplicative_on_generators():
    assert alg.u1_project(A * A_STAR) == {0: ONE}
    assert alg.u1_project(C) == {}


@given(elements())
def test_text_round_trip(x):
    assert alg.parse_element(alg.format_element(x)) == x


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        alg.parse_monomial("b^2")
    with pytest.raises(ValueError):
        alg.parse_element("a + c")


def test_monomials_up_to_counts():
    assert len(alg.monomials_up_to(1)) == 5
    assert all(alg.total_degree(m) <= 3 for m in alg.monomials_up_to(3))
