from hypothesis import given, settings
from hypothesis import strategies as st

from qhodge import algebra as alg
from qhodge import dual
from qhodge.dual import E, EPS_MINUS, F, K, K_INV, Functional
from qhodge.scalars import ONE, Q

from strategies import elements

words = st.tuples(st.integers(0, 1), st.integers(0, 2), st.integers(0, 2), st.integers(-2, 2))
functionals = st.lists(st.tuples(words, st.integers(-2, 2)), min_size=1, max_size=2).map(
    lambda ts: sum((Functional.word(w, c) for w, c in ts), Functional())
)


def test_quantum_group_relations():
    assert K * K_INV == Functional.scalar(1)
    assert K * E == (E * K).scale(Q)
    assert K * F == (F * K).scale(Q.inverse())
    assert E * F - F * E == (K * K - K_INV * K_INV).scale((Q - Q.inverse()).inverse())
    assert EPS_MINUS * EPS_MINUS == Functional.scalar(1)


@given(functionals, functionals, elements(max_terms=2))
@settings(max_examples=25)
def test_product_is_dual_to_coproduct(x, y, h):
    assert dual.evaluate(x * y, h) == dual.FunctionalTensor.pure(x, y).evaluate(alg.coproduct(h))


@given(functionals, elements(max_terms=2), elements(max_terms=2))
@settings(max_examples=25)
def test_coproduct_is_dual_to_product(x, h, g):
    assert dual.evaluate(x, h * g) == dual.dual_coproduct(x).evaluate(alg.TensorElement.pure(h, g))


@given(functionals, elements(max_terms=2))
@settings(max_examples=25)
def test_counit_and_antipode_are_dual(x, h):
    assert dual.dual_counit(x) == dual.evaluate(x, alg.ONE_ELEMENT)
    assert dual.evaluate(dual.dual_antipode(x), h) == dual.evaluate(x, alg.antipode(h))


@given(functionals, elements(max_terms=2))
@settings(max_examples=25)
def test_star_pairing(x, h):
    # <X*, h> = conj <X, S(h)*>
    lhs = dual.evaluate(dual.dual_star(x), h)
    rhs = dual.evaluate(x, alg.star(alg.antipode(h))).conjugate()
    assert lhs == rhs


@given(functionals, functionals, elements(max_terms=2))
@settings(max_examples=20)
def test_left_action_is_a_module(x, y, h):
    assert dual.act_left(x * y, h) == dual.act_left(x, dual.act_left(y, h))
    assert dual.act_right(dual.act_right(h, x), y) == dual.act_right(h, x * y)


@given(elements(max_terms=2), elements(max_terms=2))
@settings(max_examples=20)
def test_left_action_of_e_is_twisted_derivation(h, g):
    # E |> (hg) = (E |> h)(K |> g) + (K^-1 |> h)(E |> g) up to the chosen coproduct
    lhs = dual.act_left(E, h * g)
    rhs = alg.AlgebraElement()
    for (l, r), c in dual.dual_coproduct(E).terms.items():
        rhs = rhs + (dual.act_left(Functional.word(l), h) * dual.act_left(Functional.word(r), g)).scale(c)
    assert lhs == rhs


def test_k_acts_by_degree():
    assert dual.act_left(K, alg.A) == alg.A.scale(dual.act_left(K, alg.A).coefficient((1, 0, 0)))
    assert dual.evaluate(K, alg.A) * dual.evaluate(K, alg.A_STAR) == ONE


def test_text_round_trip():
    for w in [(0, 0, 0, 0), (1, 2, 1, -3), (0, 1, 0, 1)]:
        assert dual.parse_word(dual.format_word(w)) == w
