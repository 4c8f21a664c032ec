from fractions import Fraction

import pytest
import sympy
from sympy.physics.quantum import TensorProduct

from qhodge import algebra as alg
from qhodge import exterior, hodge
from qhodge.hodge import Contraction, Frame, HodgeMatrices
from qhodge.polys import Poly, same_solution_set, var
from qhodge.scalars import GaussianRational, Q, as_ratfunc
from qhodge.tangent import CALCULUS_IDS

from test_exterior import S0, numeric

ALPHA, BETA, GAMMA = var("alpha"), var("beta"), var("gamma")
POINT = {"alpha": Fraction(2), "beta": Fraction(-3), "gamma": Fraction(5)}


def _at_point(p: Poly):
    values = {k: Poly.lift(as_ratfunc(v)) for k, v in POINT.items()}
    v = p.substitute(values)
    c = v.constant() if v.terms else as_ratfunc(0)
    g = c.specialize(S0)
    return sympy.Rational(int(g.re.numerator), int(g.re.denominator)) + sympy.I * sympy.Rational(
        int(g.im.numerator), int(g.im.denominator)
    )


def _oracle_gtt(cid, sign):
    sigma = numeric(exterior.braiding(cid, sign))
    i3 = sympy.eye(3)
    a3 = TensorProduct(i3, sympy.eye(9) - sigma) * (
        sympy.eye(27) - TensorProduct(sigma, i3) + TensorProduct(sigma, i3) * TensorProduct(i3, sigma)
    )
    theta = a3[:, exterior.index(0, 1, 2)]
    g = sympy.zeros(3, 3)
    g[0, 1], g[1, 0], g[2, 2] = POINT["alpha"], POINT["beta"], POINT["gamma"]
    g = g.applyfunc(lambda x: sympy.Rational(x.numerator, x.denominator))
    total = 0
    for i in range(27):
        for j in range(27):
            if theta[i] and theta[j]:
                di, dj = exterior.digits(i, 3), exterior.digits(j, 3)
                total += theta[i] * theta[j] * g[di[0], dj[0]] * g[di[1], dj[1]] * g[di[2], dj[2]]
    return sympy.nsimplify(total)


@pytest.mark.parametrize("cid", CALCULUS_IDS)
@pytest.mark.parametrize("sign", (1, -1))
def test_g_theta_theta_against_oracle(cid, sign):
    got = hodge.g_theta_theta(Frame.exact(cid, sign), Contraction.symbolic())
    assert _at_point(got) == _oracle_gtt(cid, sign)


@pytest.mark.parametrize("cid,power", [(1, 8), (3, 12), (4, 4), (7, 4)])
def test_reference_g_theta_theta(cid, power):
    got = hodge.g_theta_theta(Frame.exact(cid, 1), Contraction.symbolic())
    assert got == ALPHA * BETA * GAMMA * (Q ** power * -6)


def test_det_g_divides_by_lambda3():
    fr = Frame.exact(7, 1)
    g = Contraction.symbolic()
    assert hodge.det_g(fr, g) * fr.lam(3) == hodge.g_theta_theta(fr, g)


@pytest.mark.parametrize("cid", CALCULUS_IDS)
@pytest.mark.parametrize("op", ("S", "T"))
def test_branches_solve_the_symmetry_constraints(cid, op):
    fr = Frame.exact(cid, 1)
    h = HodgeMatrices(fr, Contraction.symbolic(), op)
    constraints = hodge.symmetry_constraints(h) + hodge.reality_constraints(h)
    branches = hodge.symmetry_class(fr, op)
    assert branches
    for branch in branches:
        assert all(not c.substitute(branch) for c in constraints)


def test_classes_differ_and_frak_g():
    for cid in CALCULUS_IDS:
        fr = Frame.exact(cid, 1)
        assert not same_solution_set(hodge.symmetry_class(fr, "S"), hodge.symmetry_class(fr, "T"))
    assert hodge.frak_g_equals_gs(1)
    assert hodge.frak_g_equals_gs(4)
    assert not hodge.frak_g_equals_gs(7)


def test_square_is_scalar_on_one_forms_in_class():
    fr = Frame.exact(7, 1)
    h = HodgeMatrices(fr, Contraction.symbolic(), "S")
    for branch in hodge.symmetry_class(fr, "S"):
        sq = [[x.substitute(branch) for x in row] for row in h.square_on(1)]
        assert all(not sq[i][j] for i in range(3) for j in range(3) if i != j)
        assert sq[0][0] == sq[1][1] == sq[2][2]


def test_specialized_frame_agrees_with_exact():
    s0 = Fraction(3, 4)
    exact = HodgeMatrices(Frame.exact(4, 1), Contraction.symbolic(), "T")
    fr = Frame.specialized(4, 1, s0)
    special = HodgeMatrices(fr, Contraction.symbolic(fr.one), "T")
    for k in range(4):
        for r1, r2 in zip(exact.ops[k], special.ops[k]):
            assert [fr.poly(x) for x in r1] == r2


def _spectrum_has_nonreal(cid):
    fr = Frame.exact(cid, 1)
    gens = [alg.A, alg.C, alg.A_STAR, alg.C_STAR]
    return [
        hodge.has_nonreal_eigenvalue(hodge.laplacian_spectrum(cid, "S", b, Fraction(1, 2), gens))
        for b in hodge.symmetry_class(fr, "S")
    ]


def test_calculus_6_laplacian_spectrum_is_not_real():
    assert all(_spectrum_has_nonreal(6))
    assert not any(_spectrum_has_nonreal(1))
    assert not any(_spectrum_has_nonreal(7))


def test_laplacian_preserves_line_bundles():
    cid = 7
    fr = Frame.exact(cid, 1)
    branch = hodge.symmetry_class(fr, "T")[0]
    h = hodge.hodge_matrices(cid, 1, "T")
    ones = {n: Poly.lift(1) for v in branch.values() for n in Poly.lift(v).variables()}
    values = {k: Poly.lift(v).substitute(ones) for k, v in branch.items()} | ones
    coeffs = hodge.scalar_coefficients(hodge.laplacian_coefficients(h, 1), values)
    assert not hodge.laplacian(coeffs, cid, alg.ONE_ELEMENT)
    for mono in alg.monomials_up_to(3)[:50]:
        x = alg.mono_element(mono)
        image = hodge.laplacian(coeffs, cid, x)
        assert not image or alg.line_bundle_degree(image) == alg.line_bundle_degree(x)


@pytest.mark.parametrize(
    "coeffs,expected",
    [
        ([-2, 0, 1], 2),
        ([1, 0, 1], 0),
        ([2, -3, 0, 1], 2),  # (x - 1)^2 (x + 2)
        ([0, -1, 0, 1], 3),
    ],
)
def test_sturm_root_count(coeffs, expected):
    assert hodge._sturm_real_roots([Fraction(c) for c in coeffs]) == expected


def test_nonreal_eigenvalue_detection():
    g = GaussianRational
    assert hodge.has_nonreal_eigenvalue([[g(0), g(-1)], [g(1), g(0)]])
    assert not hodge.has_nonreal_eigenvalue([[g(1), g(1)], [g(0), g(1)]])
    assert hodge.has_nonreal_eigenvalue([[g(0, 1)]])
