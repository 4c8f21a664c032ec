import pytest

from qhodge import algebra as alg
from qhodge import sphere
from qhodge.fodc import OneForm, differential
from qhodge.scalars import Q
from qhodge.tables import SPHERE_PROBE

K_CALCULI = (1, 2, 4, 5)


def test_generators_and_relations():
    bm, bp, b0 = sphere.generators()
    assert all(sphere.is_coinvariant(b) for b in (bm, bp, b0))
    assert alg.star(b0) == b0
    assert alg.star(bp) == bm.scale(-Q)
    for name, residual in sphere.relations():
        assert not residual, name


def test_monomial_count():
    assert len(sphere.monomials(4)) == 35
    assert sphere.monomial_labels(1) == ["1", "B0", "B+", "B-"]


def test_projectability():
    got = {c: sphere.projectability(c) for c in range(1, 8)}
    assert got == {1: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 0, 7: 1}
    assert sphere.projectability(6, corrected=True) == 0
    with pytest.raises(sphere.NotProjectableError):
        sphere.require_projectable(6)


@pytest.mark.parametrize("cid", sphere.PROJECTABLE)
def test_omega0_vanishes_in_the_ambient_calculus(cid):
    _, image = sphere.omega0(cid)
    assert not image


def test_decompose():
    bm, bp, b0 = sphere.generators()
    df = differential(b0, 1)
    form = sphere.decompose(df)
    assert form.degree == 1
    assert sphere.decompose(b0).parts == (b0,)
    with pytest.raises(sphere.NotHorizontalError):
        sphere.decompose(OneForm.basis(1, 2))
    with pytest.raises(sphere.NotHorizontalError):
        sphere.SphereForm(1, 1, [bm, bm])
    with pytest.raises(sphere.NotHorizontalError):
        sphere.decompose([b0, b0, alg.AlgebraElement()], 1)


@pytest.mark.parametrize("cid", (1, 4, 7))
def test_d_squared_is_zero(cid):
    for f in sphere.monomials(2):
        assert not any(sphere.d_one_form(differential(f, cid)))


def test_probe_table():
    assert sphere.probe_table() == SPHERE_PROBE


@pytest.mark.parametrize("cid", K_CALCULI)
@pytest.mark.parametrize("sign", (1, -1))
def test_sphere_hodge_matches_closed_forms(cid, sign):
    assert sphere.compare_actions(cid, sign) == []


def test_generators_span_one_casimir_eigenspace():
    bm, bp, b0 = sphere.generators()
    value = sphere.casimir(bm).coefficient(next(iter(bm.terms))) / bm.coefficient(next(iter(bm.terms)))
    assert sphere.casimir(bm) == bm.scale(value)
    assert sphere.casimir(bp) == bp.scale(value)
    assert sphere.casimir(b0) == b0.scale(value)
    assert not sphere.casimir(alg.ONE_ELEMENT)


@pytest.mark.parametrize("cid", K_CALCULI)
def test_laplacian_equals_casimir(cid):
    assert not sphere.laplacian(cid, 1, alg.ONE_ELEMENT)
    assert sphere.laplacian_matches(cid, 1, 4) == []


@pytest.mark.parametrize("cid", (1, 4))
def test_inverse_braiding_laplacian_is_proportional(cid):
    # the sphere data for the inverse braiding gives q^-2 times the Casimir
    assert sphere.laplacian_ratio(cid, -1, 2) == Q ** -2


def test_laplacian_independent_of_k_calculus():
    for f in sphere.monomials(2):
        assert sphere.laplacian(1, 1, f) == sphere.laplacian(4, 1, f)


def test_laplacian_rejects_bad_input():
    with pytest.raises(sphere.NotHorizontalError):
        sphere.laplacian(1, 1, alg.A)
    with pytest.raises(sphere.NotProjectableError):
        sphere.laplacian(6, 1, alg.ONE_ELEMENT)
