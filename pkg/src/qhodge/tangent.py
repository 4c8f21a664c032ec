"""The seven quantum tangent spaces, their right ideals and f-matrices.

Basis order everywhere is (minus, plus, z), i.e. index 0, 1, 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from . import linalg
from .algebra import A, A_STAR, C, C_STAR, ONE_ELEMENT, AlgebraElement
from .dual import (
    E,
    EPS_MINUS,
    F,
    Functional,
    dual_coproduct,
    dual_star,
    evaluate,
    k_power,
)
from .scalars import ONE, ZERO, Q, RatFunc, S

CALCULUS_IDS = (1, 2, 3, 4, 5, 6, 7)
MINUS, PLUS, ZED = 0, 1, 2
LABELS = ("-", "+", "z")


class UnknownCalculusError(ValueError):
    """Raised for a calculus id outside 1..7."""


class DecompositionError(ArithmeticError):
    """Raised when a coproduct does not split as required."""


def check_id(cid: int) -> int:
    if cid not in CALCULUS_IDS:
        raise UnknownCalculusError(f"unknown calculus id {cid!r}; expected 1..7")
    return cid


@dataclass(frozen=True)
class TangentSpace:
    calculus: int
    minus: Functional
    plus: Functional
    z: Functional

    @property
    def basis(self) -> Tuple[Functional, Functional, Functional]:
        return (self.minus, self.plus, self.z)


def _q(k: int) -> RatFunc:
    return Q ** k


def _s(k: int) -> RatFunc:
    return S ** k


def ideal_generators(cid: int) -> List[AlgebraElement]:
    """The six reference generators of the right ideal of each calculus."""
    check_id(cid)
    q = Q
    one = ONE_ELEMENT
    cc = C * C_STAR
    tail = lambda r: [C * C, C_STAR * C_STAR, cc, (A - one.scale(r)) * C, (A - one.scale(r)) * C_STAR]
    if cid == 1:
        return [A + A_STAR.scale(q) - one.scale(1 + q)] + tail(q)
    if cid == 2:
        return [A - A_STAR.scale(q) - one.scale(1 - q)] + tail(-q)
    if cid == 3:
        return [A + A_STAR.scale(q ** 2) - one.scale(1 + q ** 2)] + tail(q ** 2)
    if cid == 4:
        return [A + A_STAR.scale(q ** -1) - one.scale(1 + q ** -1)] + tail(ONE)
    if cid == 5:
        return [A - A_STAR.scale(q ** -1) - one.scale(1 - q ** -1)] + tail(ONE)
    if cid == 6:
        gens = [A + A_STAR.scale(q ** -4) - one.scale(1 + q ** -4)] + tail(ONE)
        gens[3] = cc + (A - one).scale(q ** 3 - q)
        return gens
    return [A + A_STAR.scale(q ** -2) - one.scale(1 + q ** -2)] + tail(ONE)


def corrected_ideal_generators(cid: int) -> List[AlgebraElement]:
    """Generators annihilated by the tangent space.  Only calculus 6
    differs from the reference list: the fourth generator becomes
    c c* + (1 - q^2)(a - 1), forced by the first generator and X_z."""
    gens = ideal_generators(cid)
    if cid == 6:
        gens[3] = C * C_STAR + (A - ONE_ELEMENT).scale(ONE - Q ** 2)
    return gens


def reference_z_vector(cid: int) -> Functional:
    """X_z in its reference form, including the two variants replaced in
    tangent_space (calculi 2 and 7)."""
    check_id(cid)
    if cid == 2:
        return (EPS_MINUS * k_power(2) - ONE) / (Q + 1)
    if cid == 7:
        return (ONE - k_power(4)) / ((ONE - _q(-2)) * (ONE - _q(-2)))
    return tangent_space(cid).z


@lru_cache(maxsize=None)
def tangent_space(cid: int) -> TangentSpace:
    check_id(cid)
    q = Q
    K = k_power
    if cid == 1:
        return TangentSpace(1, F * K(-1) * _s(1), E * K(-1) * _s(-1), (K(-2) - ONE) / (q - 1))
    if cid == 2:
        # the q -> -q image of calculus 1: K^-2 (value q on a) becomes eps_- K^-2
        return TangentSpace(
            2,
            EPS_MINUS * F * K(-1) * (-_s(1)),
            EPS_MINUS * E * K(-1) * (-_s(-1)),
            (ONE - EPS_MINUS * K(-2)) / (q + 1),
        )
    if cid == 3:
        return TangentSpace(3, F * K(-3) * _s(3), E * K(-3) * _s(-3), (K(-4) - ONE) / (q ** 2 - 1))
    plus = E * K(1) * _s(1)
    minus = F * K(1) * _s(-1)
    if cid == 4:
        return TangentSpace(4, minus, plus, (K(2) - ONE) / (q ** -1 - 1))
    if cid == 5:
        return TangentSpace(5, minus, plus, (EPS_MINUS * K(2) - ONE) / (q ** -1 + 1))
    if cid == 6:
        z = (F * E * K(2) + (K(4) - ONE) * (q ** 3 / (q ** 2 - 1) ** 2)) * (q * (q ** 2 - 1))
        return TangentSpace(6, minus, plus, z)
    return TangentSpace(7, minus, plus, (ONE - K(4)) / (ONE - _q(-2)))


def annihilates_ideal(cid: int, space: TangentSpace | None = None, gens=None) -> bool:
    """Every basis functional vanishes on 1 and on the ideal generators."""
    space = space or tangent_space(cid)
    gens = list(gens if gens is not None else ideal_generators(cid)) + [ONE_ELEMENT]
    return all(not evaluate(X, g) for X in space.basis for g in gens)


def transversal(cid: int) -> List[AlgebraElement]:
    """Elements e_b of ker(eps) with X_a(e_b) = delta_ab."""
    space = tangent_space(cid)
    candidates = [C_STAR, C, A - A_STAR]
    pairing = [[evaluate(X, e) for e in candidates] for X in space.basis]
    inv = linalg.inverse(pairing, ZERO, ONE)
    out = []
    for b in range(3):
        e = AlgebraElement()
        for k in range(3):
            if inv[k][b]:
                e = e + candidates[k].scale(inv[k][b])
        out.append(e)
    return out


def _word_basis(functionals):
    words = sorted({w for f in functionals for w in f.terms})
    return words, [[f.terms.get(w, ZERO) for f in functionals] for w in words]


@lru_cache(maxsize=None)
def f_matrix(cid: int) -> Tuple[Tuple[Functional, ...], ...]:
    """fm[b][a] is the right tensor factor paired with X_b in
    Delta(X_a) = 1 (x) X_a + sum_b X_b (x) fm[b][a].

    The bimodule rule derived from Leibniz is omega_b h = sum_a (fm[b][a] |> h) omega_a.
    """
    space = tangent_space(cid)
    span = [Functional.scalar(ONE)] + list(space.basis)
    out = [[Functional() for _ in range(3)] for _ in range(3)]
    for a, X in enumerate(space.basis):
        groups = dual_coproduct(X).by_right_word()
        unit_part = Functional()
        for r, left in groups.items():
            words, matrix = _word_basis(span + [left])
            system = [row[:-1] for row in matrix]
            rhs = [row[-1] for row in matrix]
            try:
                kappa = linalg.solve(system, rhs, ZERO)
            except ValueError as exc:
                raise DecompositionError(f"calculus {cid}: left factor not in span") from exc
            if kappa[0]:
                unit_part = unit_part + Functional.word(r, kappa[0])
            for b in range(3):
                if kappa[b + 1]:
                    out[b][a] = out[b][a] + Functional.word(r, kappa[b + 1])
        if unit_part != X:
            raise DecompositionError(f"calculus {cid}: 1 (x) X_a term mismatch")
    return tuple(tuple(row) for row in out)


def star_invariant(cid: int) -> bool:
    """span{X_a} = span{X_a*}.

    With the pairing f*(h) = conj(f(S(h)*)) this is the statement that the
    annihilated ideal satisfies S(Q)* = Q.
    """
    space = tangent_space(cid)
    starred = [dual_star(X) for X in space.basis]
    words, m1 = _word_basis(list(space.basis) + starred)
    cols_u = [[row[i] for row in m1] for i in range(3)]
    cols_v = [[row[i] for row in m1] for i in range(3, 6)]
    return linalg.same_span(cols_u, cols_v, ONE)
