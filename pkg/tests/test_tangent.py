import random

import pytest

from qhodge import algebra as alg
from qhodge import tangent
from qhodge.dual import dual_coproduct, evaluate
from qhodge.scalars import ONE, ZERO

CALCULI = tangent.CALCULUS_IDS


@pytest.mark.parametrize("cid", [c for c in CALCULI if c != 6])
def test_tangent_space_kills_its_ideal(cid):
    assert tangent.annihilates_ideal(cid)


def test_calculus_6_needs_the_corrected_generator():
    assert not tangent.annihilates_ideal(6)
    assert tangent.annihilates_ideal(6, gens=tangent.corrected_ideal_generators(6))


@pytest.mark.parametrize("cid", CALCULI)
def test_annihilated_set_is_a_right_ideal(cid):
    rng = random.Random(cid)
    gens = tangent.corrected_ideal_generators(cid)
    for X in tangent.tangent_space(cid).basis:
        for g in gens:
            h = alg.random_element(rng, 2, 2)
            assert not evaluate(X, g * h)


@pytest.mark.parametrize("cid", CALCULI)
def test_transversal_is_dual_to_the_basis(cid):
    space = tangent.tangent_space(cid)
    for b, e in enumerate(tangent.transversal(cid)):
        assert alg.counit(e) == ZERO
        assert [evaluate(X, e) for X in space.basis] == [ONE if a == b else ZERO for a in range(3)]


@pytest.mark.parametrize("cid", CALCULI)
def test_star_structure_and_f_matrix(cid):
    assert tangent.star_invariant(cid)
    fm = tangent.f_matrix(cid)
    space = tangent.tangent_space(cid)
    # Delta X_a = 1 (x) X_a + sum_b X_b (x) fm[b][a]
    from qhodge.dual import Functional, FunctionalTensor

    for a, X in enumerate(space.basis):
        rebuilt = FunctionalTensor.pure(Functional.scalar(ONE), X)
        for b in range(3):
            rebuilt = rebuilt + FunctionalTensor.pure(space.basis[b], fm[b][a])
        assert rebuilt == dual_coproduct(X)


def test_reference_z_vectors_that_were_replaced():
    # the reference z-vectors of calculi 2 and 7 are not the tangent-space ones
    assert tangent.reference_z_vector(2) != tangent.tangent_space(2).z
    assert tangent.reference_z_vector(7) != tangent.tangent_space(7).z
    assert tangent.reference_z_vector(1) == tangent.tangent_space(1).z


def test_unknown_calculus():
    with pytest.raises(tangent.UnknownCalculusError):
        tangent.tangent_space(8)
