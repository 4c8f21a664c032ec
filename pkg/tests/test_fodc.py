import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhodge import algebra as alg
from qhodge import fodc
from qhodge.algebra import A, A_STAR, C, C_STAR
from qhodge.fodc import CalculusMismatchError, OneForm
from qhodge.scalars import Q
from qhodge.tangent import CALCULUS_IDS, corrected_ideal_generators

from strategies import elements

calculi = st.sampled_from(CALCULUS_IDS)
small = elements(max_terms=2)


@given(calculi, small, small)
@settings(max_examples=30)
def test_leibniz_rule(cid, x, y):
    lhs = fodc.differential(x * y, cid)
    assert lhs == fodc.differential(x, cid) * y + x * fodc.differential(y, cid)


@given(calculi, small, small)
@settings(max_examples=20)
def test_right_action_is_a_module(cid, x, y):
    w = OneForm.basis(cid, 0) + OneForm.basis(cid, 2)
    assert (w * x) * y == w * (x * y)


@given(calculi, small)
@settings(max_examples=20)
def test_maurer_cartan_form(cid, h):
    assert fodc.r_map(h, cid) == fodc.left_invariant_part(h, cid)


@given(calculi, small)
@settings(max_examples=20)
def test_differential_commutes_with_star(cid, h):
    assert fodc.star_form(fodc.differential(h, cid)) == fodc.differential(alg.star(h), cid)


@given(calculi, small)
@settings(max_examples=20)
def test_star_is_an_involution(cid, h):
    w = fodc.differential(h, cid) * A + OneForm.basis(cid, 1)
    assert fodc.star_form(fodc.star_form(w)) == w


@pytest.mark.parametrize("cid", CALCULUS_IDS)
def test_ideal_lies_in_kernel_of_maurer_cartan(cid):
    for g in corrected_ideal_generators(cid):
        assert not fodc.left_invariant_part(g, cid)
    assert not fodc.differential(alg.ONE_ELEMENT, cid)


def test_reference_differentials_of_calculus_1():
    def form(m, p, z):
        return OneForm(1, [m, p, z])

    zero = alg.AlgebraElement()
    assert fodc.differential(A, 1) == form(zero, C_STAR.scale(-Q), A)
    assert fodc.differential(C, 1) == form(zero, A_STAR, C)
    assert fodc.differential(A_STAR, 1) == form(C, zero, A_STAR.scale(-Q.inverse()))


@pytest.mark.parametrize("cid", CALCULUS_IDS)
def test_basis_forms_have_charges(cid):
    assert [fodc.one_form_degree(OneForm.basis(cid, b)) for b in range(3)] == [2, -2, 0]
    assert fodc.one_form_degree(fodc.differential(A * C_STAR, cid)) == 0


def test_mixing_calculi_raises():
    with pytest.raises(CalculusMismatchError):
        OneForm.basis(1, 0) + OneForm.basis(2, 0)
