"""First-order differential calculi: one-forms as free left modules over
A(SU_q(2)) on the left-invariant basis (omega_-, omega_+, omega_z).

Right multiplication is derived twice: from the f-matrix of the tangent
space, and independently from the Leibniz rule through the witnesses
omega_b = sum S(e_(1)) d e_(2).  Construction aborts if they disagree.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from . import algebra as alg
from . import linalg
from .algebra import A, A_STAR, C, C_STAR, AlgebraElement, Monomial
from .dual import Functional, act_left, evaluate
from .scalars import ONE, ZERO
from .tangent import (
    LABELS,
    MINUS,
    PLUS,
    ZED,
    check_id,
    f_matrix,
    tangent_space,
    transversal,
    _word_basis,
)

KEYS = ("wm", "wp", "wz")
# omega_-^* = -omega_+, omega_+^* = -omega_-, omega_z^* = -omega_z
STAR_BASIS = {MINUS: (PLUS, -1), PLUS: (MINUS, -1), ZED: (ZED, -1)}
# U(1) charge of each basis one-form
CHARGE = {MINUS: -2, PLUS: 2, ZED: 0}


class CalculusMismatchError(ValueError):
    """Raised when objects from different calculi are combined."""


class OneForm:
    """h_- omega_- + h_+ omega_+ + h_z omega_z for one calculus."""

    __slots__ = ("calculus", "coords")

    def __init__(self, calculus: int, coords: Sequence[AlgebraElement] | None = None):
        self.calculus = check_id(calculus)
        coords = list(coords) if coords is not None else [AlgebraElement()] * 3
        if len(coords) != 3:
            raise ValueError("a one-form has exactly three coordinates")
        self.coords = tuple(alg.element(c) for c in coords)

    @classmethod
    def basis(cls, calculus: int, index: int) -> "OneForm":
        coords = [AlgebraElement()] * 3
        coords[index] = alg.ONE_ELEMENT
        return cls(calculus, coords)

    def _same(self, other: "OneForm") -> None:
        if not isinstance(other, OneForm) or other.calculus != self.calculus:
            raise CalculusMismatchError("one-forms belong to different calculi")

    def __bool__(self) -> bool:
        return any(self.coords)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OneForm)
            and other.calculus == self.calculus
            and other.coords == self.coords
        )

    def __add__(self, other: "OneForm") -> "OneForm":
        self._same(other)
        return OneForm(self.calculus, [x + y for x, y in zip(self.coords, other.coords)])

    def __sub__(self, other: "OneForm") -> "OneForm":
        self._same(other)
        return OneForm(self.calculus, [x - y for x, y in zip(self.coords, other.coords)])

    def __neg__(self) -> "OneForm":
        return OneForm(self.calculus, [-x for x in self.coords])

    def scale(self, c) -> "OneForm":
        return OneForm(self.calculus, [x.scale(c) for x in self.coords])

    def left(self, h: AlgebraElement) -> "OneForm":
        """h * form."""
        h = alg.element(h)
        return OneForm(self.calculus, [h * x for x in self.coords])

    def __rmul__(self, h) -> "OneForm":
        return self.left(h)

    def __mul__(self, h) -> "OneForm":
        return commute_right(self, alg.element(h))

    def to_json(self) -> dict:
        out = {"calculus": self.calculus}
        for key, x in zip(KEYS, self.coords):
            out[key] = alg.format_element(x)
        return out

    def __repr__(self) -> str:
        parts = [f"({alg.format_element(x)}) w{LABELS[i]}" for i, x in enumerate(self.coords) if x]
        return " + ".join(parts) if parts else "0"


def differential(h: AlgebraElement, calculus: int) -> OneForm:
    """dh = sum_a (X_a |> h) omega_a."""
    space = tangent_space(calculus)
    h = alg.element(h)
    return OneForm(calculus, [act_left(X, h) for X in space.basis])


def r_map(h: AlgebraElement, calculus: int) -> OneForm:
    """S(h_(1)) d h_(2), computed literally from the coproduct."""
    out = OneForm(calculus)
    for (ml, mr), c in alg.coproduct(alg.element(h)).terms.items():
        left = alg.antipode(alg.mono_element(ml)).scale(c)
        out = out + differential(alg.mono_element(mr), calculus).left(left)
    return out


def left_invariant_part(h: AlgebraElement, calculus: int) -> OneForm:
    """sum_a X_a(h) omega_a."""
    space = tangent_space(calculus)
    h = alg.element(h)
    return OneForm(calculus, [AlgebraElement.scalar(evaluate(X, h)) for X in space.basis])


# ---------------------------------------------------------------------------
# right multiplication
# ---------------------------------------------------------------------------


def _omega_times_mono_fmatrix(calculus: int, b: int, mono: Monomial) -> Tuple[AlgebraElement, ...]:
    fm = f_matrix(calculus)
    h = alg.mono_element(mono)
    return tuple(act_left(fm[b][a], h) for a in range(3))


@lru_cache(maxsize=None)
def witnesses(calculus: int) -> Tuple[Tuple[Tuple[AlgebraElement, AlgebraElement], ...], ...]:
    """For each basis form, pairs (x_i, y_i) with omega_b = sum x_i d y_i."""
    out = []
    for e in transversal(calculus):
        pairs = []
        for (ml, mr), c in alg.coproduct(e).terms.items():
            pairs.append((alg.antipode(alg.mono_element(ml)).scale(c), alg.mono_element(mr)))
        out.append(tuple(pairs))
    return tuple(out)


def _omega_times_leibniz(calculus: int, b: int, h: AlgebraElement) -> OneForm:
    """omega_b h from sum x_i (d(y_i h) - y_i dh)."""
    out = OneForm(calculus)
    dh = differential(h, calculus)
    for x, y in witnesses(calculus)[b]:
        term = differential(y * h, calculus) - dh.left(y)
        out = out + term.left(x)
    return out


@lru_cache(maxsize=None)
def _generator_rules(calculus: int) -> Dict[Tuple[int, Monomial], Tuple[AlgebraElement, ...]]:
    """omega_b g for each basis form and algebra generator, cross-checked."""
    rules = {}
    for g in (A, A_STAR, C, C_STAR):
        (mono,) = g.terms
        for b in range(3):
            via_f = _omega_times_mono_fmatrix(calculus, b, mono)
            via_leibniz = _omega_times_leibniz(calculus, b, g).coords
            if tuple(via_f) != tuple(via_leibniz):
                raise ArithmeticError(
                    f"calculus {calculus}: bimodule rule for w{LABELS[b]} * {alg.format_monomial(mono)} "
                    "disagrees between f-matrix and Leibniz derivations"
                )
            rules[(b, mono)] = tuple(via_f)
    return rules


@lru_cache(maxsize=None)
def omega_times_mono(calculus: int, b: int, mono: Monomial) -> Tuple[AlgebraElement, ...]:
    """Left coordinates of omega_b * mono, from the generator rules."""
    if mono == alg.UNIT:
        coords = [AlgebraElement()] * 3
        coords[b] = alg.ONE_ELEMENT
        return tuple(coords)
    gen, rest = alg.split_first(mono)
    (gen_mono,) = alg.GENERATORS[gen].terms
    first = _generator_rules(calculus)[(b, gen_mono)]
    out = [AlgebraElement()] * 3
    for a, coef in enumerate(first):
        if not coef:
            continue
        tail = omega_times_mono(calculus, a, rest)
        for c in range(3):
            if tail[c]:
                out[c] = out[c] + coef * tail[c]
    return tuple(out)


def commute_right(form: OneForm, h: AlgebraElement) -> OneForm:
    """form * h written in left coordinates."""
    h = alg.element(h)
    cid = form.calculus
    out = [AlgebraElement()] * 3
    for b, x in enumerate(form.coords):
        if not x:
            continue
        for mono, c in h.terms.items():
            img = omega_times_mono(cid, b, mono)
            for a in range(3):
                if img[a]:
                    out[a] = out[a] + (x * img[a]).scale(c)
    return OneForm(cid, out)


def star_form(form: OneForm) -> OneForm:
    """(sum h_b omega_b)^* = sum omega_b^* h_b^*."""
    out = OneForm(form.calculus)
    for b, x in enumerate(form.coords):
        if not x:
            continue
        target, sign = STAR_BASIS[b]
        out = out + commute_right(OneForm.basis(form.calculus, target), alg.star(x)).scale(ONE * sign)
    return out


def tangent_coordinates(X: Functional, calculus: int) -> List:
    """Coefficients of X in the basis (X_-, X_+, X_z); raises when X is not
    in this tangent space."""
    basis = list(tangent_space(calculus).basis)
    words, matrix = _word_basis(basis + [X])
    system = [row[:-1] for row in matrix]
    rhs = [row[-1] for row in matrix]
    try:
        return linalg.solve(system, rhs, ZERO)
    except ValueError as exc:
        raise CalculusMismatchError(f"functional is not in the tangent space of calculus {calculus}") from exc


def pairing(X: Functional, form: OneForm):
    """<X, x dy> = eps(x) X(y); on the basis <X_a, omega_b> = delta_ab."""
    kappa = tangent_coordinates(X, form.calculus)
    total = ZERO
    for k, x in zip(kappa, form.coords):
        if k and x:
            total = total + k * alg.counit(x)
    return total


def one_form_degree(form: OneForm):
    """U(1) degree of a one-form, or 'mixed'."""
    degrees = set()
    for b, x in enumerate(form.coords):
        if not x:
            continue
        d = alg.line_bundle_degree(x)
        if d == "mixed":
            return "mixed"
        # x omega_b transforms with z^{-deg x} z^{charge}
        degrees.add(d - CHARGE[b])
    if not degrees:
        return 0
    if len(degrees) > 1:
        return "mixed"
    return degrees.pop()
