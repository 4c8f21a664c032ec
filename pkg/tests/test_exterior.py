from fractions import Fraction

import pytest
import sympy
from sympy.physics.quantum import TensorProduct

from qhodge import exterior
from qhodge.scalars import Q
from qhodge.tangent import CALCULUS_IDS, corrected_ideal_generators

CASES = [(c, s) for c in CALCULUS_IDS for s in (1, -1)]
S0 = Fraction(2, 3)


def numeric(mat):
    def conv(x):
        v = x.specialize(S0)
        return sympy.Rational(int(v.re.numerator), int(v.re.denominator)) + sympy.I * sympy.Rational(
            int(v.im.numerator), int(v.im.denominator)
        )

    return sympy.Matrix([[conv(x) for x in row] for row in mat])


@pytest.fixture(scope="module", params=CASES, ids=lambda c: f"calc{c[0]}{'+' if c[1] > 0 else '-'}")
def case(request):
    cid, sign = request.param
    return cid, sign, numeric(exterior.braiding(cid, sign))


def test_braid_equation_oracle(case):
    _, _, sigma = case
    i3 = sympy.eye(3)
    s1, s2 = TensorProduct(sigma, i3), TensorProduct(i3, sigma)
    assert s1 * s2 * s1 == s2 * s1 * s2


def test_spectrum_oracle(case):
    _, sign, sigma = case
    q0 = sympy.Rational(S0.numerator, S0.denominator) ** 2
    i9 = sympy.eye(9)
    assert (i9 - sigma) * (q0 ** (2 * sign) * i9 + sigma) == sympy.zeros(9, 9)
    assert 9 - (i9 - sigma).rank() == 6
    assert 9 - (q0 ** (2 * sign) * i9 + sigma).rank() == 3


def test_antisymmetrizer_ranks_oracle(case):
    cid, sign, sigma = case
    i3, i9 = sympy.eye(3), sympy.eye(9)
    a2 = i9 - sigma
    s1, s2 = TensorProduct(sigma, i3), TensorProduct(i3, sigma)
    a3 = TensorProduct(i3, a2) * (sympy.eye(27) - s1 + s1 * s2)
    assert a2.rank() == 3 and a3.rank() == 1
    assert a3 == numeric(exterior.antisymmetrizer(cid, sign, 3))
    lam3 = numeric([[exterior.lam(3, sign)]])[0, 0]
    assert a3 * a3 == lam3 * a3


@pytest.mark.parametrize("cid,sign", CASES)
def test_exact_exterior_structure(cid, sign):
    assert exterior.kernel_dimensions(cid, sign) == (6, 3)
    assert [exterior.range_dimension(cid, sign, k) for k in (1, 2, 3)] == [3, 3, 1]
    assert exterior.acts_as_scalar_on_range(cid, sign, 2)
    assert exterior.acts_as_scalar_on_range(cid, sign, 3)
    assert exterior.degree_four_vanishes(cid, sign)


@pytest.mark.parametrize("cid", CALCULUS_IDS)
def test_volume_forms_of_the_two_signs(cid):
    plus, minus = exterior.volume_form(cid, 1), exterior.volume_form(cid, -1)
    assert all(m == p * Q ** -6 for m, p in zip(minus, plus))


@pytest.mark.parametrize("cid,sign", CASES)
def test_quadratic_relations(cid, sign):
    gens = corrected_ideal_generators(cid)
    assert exterior.ideal_equality(cid, sign, gens)
    assert exterior.ideal_equality(cid, sign) == (cid != 6)


def test_lambda_values():
    assert exterior.lam(2, 1) == 1 + Q ** 2
    assert exterior.lam(3, -1) == (1 + Q ** -2) * (1 + Q ** -2 + Q ** -4)
    with pytest.raises(ValueError):
        exterior.lam(4, 1)
