"""The standard Podles sphere as the U(1)-coinvariant subalgebra L_0 of
A(SU_q(2)), its 2d calculus in frame-bundle form and the Hodge operators
and Laplacian built on it.

Forms on the sphere live inside the ambient calculus: a 1-form is
x_- w_- + x_+ w_+ with x_-+ in L_-+2, a 2-form is t w_-^w_+ with t in L_0.
The w_z direction is vertical and is discarded when descending (it spans
the ideal generated by w_0 and d w_0).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from . import algebra as alg
from .algebra import A, A_STAR, C, C_STAR, ONE_ELEMENT, AlgebraElement
from .dual import E, F, act_left
from .fodc import OneForm, commute_right, differential, witnesses
from .hodge import (
    Contraction,
    Frame,
    contract,
    sgn,
    symmetry_class,
)
from .polys import Poly, var
from .scalars import I, ONE, ZERO, Q, RatFunc
from .tangent import CALCULUS_IDS, MINUS, PLUS, ZED, check_id, corrected_ideal_generators, ideal_generators

M, P, Z = MINUS, PLUS, ZED
PROJECTABLE = tuple(c for c in CALCULUS_IDS if c != 6)
SCALE = "m_check"


class NotProjectableError(ValueError):
    """The calculus does not descend to the sphere."""


class NotHorizontalError(ValueError):
    """A form has a w_z component or coefficients of the wrong degree."""


# ---------------------------------------------------------------------------
# the algebra
# ---------------------------------------------------------------------------


def generators() -> Tuple[AlgebraElement, AlgebraElement, AlgebraElement]:
    """(B_-, B_+, B_0) = (-a c*, q c a*, q^2/(1+q^2) - q^2 c c*)."""
    b_minus = -(A * C_STAR)
    b_plus = (C * A_STAR).scale(Q)
    b_zero = AlgebraElement.scalar(Q * Q / (ONE + Q * Q)) - (C * C_STAR).scale(Q * Q)
    return b_minus, b_plus, b_zero


def relations() -> List[Tuple[str, AlgebraElement]]:
    """lhs - rhs of the four defining relations; all should vanish."""
    bm, bp, b0 = generators()
    one = ONE_ELEMENT
    k = ONE + Q ** -2
    return [
        ("B-B+ + q^2 B+B-", (bm * bp + (bp * bm).scale(Q * Q)).scale(k) - ((b0 * b0).scale(k * k) - one).scale(Q)),
        ("[B-, B+]", (bm * bp - bp * bm).scale(Q) + (b0 * b0).scale(Q ** -2 - Q * Q) - b0.scale(ONE - Q * Q)),
        ("B-B0", (bm * b0 - (b0 * bm).scale(Q * Q)).scale(k) - bm.scale(ONE - Q * Q)),
        ("B0B+", (b0 * bp - (bp * b0).scale(Q * Q)).scale(k) - bp.scale(ONE - Q * Q)),
    ]


def is_coinvariant(x: AlgebraElement) -> bool:
    return alg.line_bundle_degree(x) == 0


def _exponents(degree: int) -> List[Tuple[int, int, int]]:
    return [
        (i, j, total - i - j)
        for total in range(degree + 1)
        for i in range(total + 1)
        for j in range(total - i + 1)
    ]


def monomials(degree: int) -> List[AlgebraElement]:
    """Ordered products B_-^i B_+^j B_0^k with i + j + k <= degree."""
    bm, bp, b0 = generators()
    return [bm ** i * bp ** j * b0 ** k for i, j, k in _exponents(degree)]


def monomial_labels(degree: int) -> List[str]:
    def part(name, n):
        return "" if n == 0 else (name if n == 1 else f"{name}^{n}")

    out = []
    for i, j, k in _exponents(degree):
        word = " ".join(p for p in (part("B-", i), part("B+", j), part("B0", k)) if p)
        out.append(word or "1")
    return out


# ---------------------------------------------------------------------------
# projectability
# ---------------------------------------------------------------------------


def _trim(p: List[RatFunc]) -> List[RatFunc]:
    while p and not p[-1]:
        p = p[:-1]
    return p


def _poly_rem(a: List[RatFunc], b: List[RatFunc]) -> List[RatFunc]:
    a = list(a)
    while len(a) >= len(b):
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            if c:
                a[i + shift] = a[i + shift] - f * c
        a = _trim(a[:-1])
    return a


def _z_polynomial(x: AlgebraElement) -> List[RatFunc]:
    """pi(x) times the power of z clearing negative exponents, ascending."""
    proj = alg.u1_project(x)
    if not proj:
        return []
    low = min(proj)
    high = max(proj)
    return _trim([proj.get(k, ZERO) for k in range(low, high + 1)])


def _gcd(polys: Sequence[List[RatFunc]]) -> List[RatFunc]:
    g: List[RatFunc] = []
    for p in polys:
        if not p:
            continue
        a, b = (g, p) if len(g) >= len(p) else (p, g)
        while b:
            a, b = b, _poly_rem(a, b)
        g = a
    return g


def projectability(calculus: int, corrected: bool = False) -> int:
    """Dimension of the calculus induced on U(1) by pi(Q).

    pi(Q) A(U(1)) is the principal ideal of the gcd p of the projected
    generators, and ker(eps) / (p) has dimension deg p - 1."""
    gens = corrected_ideal_generators(calculus) if corrected else ideal_generators(calculus)
    g = _gcd([_z_polynomial(x) for x in gens])
    if not g:
        raise ArithmeticError("the projected ideal is zero")
    if sum(g, ZERO):
        raise ArithmeticError("projected ideal leaves the augmentation ideal")
    return len(g) - 2



def require_projectable(calculus: int) -> int:
    cid = check_id(calculus)
    if projectability(cid, corrected=True) != 1:
        raise NotProjectableError(f"calculus {cid} induces a trivial calculus on U(1)")
    return cid


# ---------------------------------------------------------------------------
# forms
# ---------------------------------------------------------------------------


class SphereForm:
    """A horizontal, coinvariant form: degree 0 -> (f,), degree 1 ->
    (x_-, x_+), degree 2 -> (t,) for t w_-^w_+."""

    __slots__ = ("calculus", "degree", "parts")

    def __init__(self, calculus: int, degree: int, parts: Sequence[AlgebraElement]):
        want = {0: 1, 1: 2, 2: 1}
        if degree not in want or len(parts) != want[degree]:
            raise ValueError("bad degree or number of parts")
        self.calculus = calculus
        self.degree = degree
        self.parts = tuple(alg.element(p) for p in parts)
        degrees = {0: (0,), 1: (-2, 2), 2: (0,)}[degree]
        for x, d in zip(self.parts, degrees):
            if x and alg.line_bundle_degree(x) != d:
                raise NotHorizontalError(f"coefficient {alg.format_element(x)} is not in L_{d}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SphereForm)
            and (self.calculus, self.degree) == (other.calculus, other.degree)
            and all(x == y for x, y in zip(self.parts, other.parts))
        )

    def __repr__(self) -> str:
        return f"SphereForm({self.calculus}, {self.degree}, {[alg.format_element(p) for p in self.parts]})"


def decompose(form, calculus: int | None = None) -> SphereForm:
    """Coordinates in L_0 + (L_-2 w_- + L_+2 w_+) + L_0 w_-^w_+.

    Accepts an AlgebraElement (degree 0), a OneForm, or a list of three
    2-form coordinates on (w_-^w_+, w_+^w_z, w_z^w_-) with ``calculus``."""
    if isinstance(form, OneForm):
        if form.coords[Z]:
            raise NotHorizontalError("the form has a w_z component")
        return SphereForm(form.calculus, 1, [form.coords[M], form.coords[P]])
    if isinstance(form, AlgebraElement):
        return SphereForm(calculus or 1, 0, [form])
    coords = list(form)
    if len(coords) != 3:
        raise ValueError("expected three 2-form coordinates")
    if coords[1] or coords[2]:
        raise NotHorizontalError("the 2-form has a vertical component")
    return SphereForm(calculus or 1, 2, [coords[0]])


# free module on the symbols dB_-, dB_+, dB_0 (coefficients on the left)
FreeOneForm = Dict[str, AlgebraElement]


def omega0_free() -> FreeOneForm:
    """q^-1 B_- dB_+ + q B_+ dB_- - (1 + q^-2) B_0 dB_0 as a formal combination."""
    bm, bp, b0 = generators()
    return {
        "dB+": bm.scale(Q ** -1),
        "dB-": bp.scale(Q),
        "dB0": b0.scale(-(ONE + Q ** -2)),
    }


def realize(free: FreeOneForm, calculus: int) -> OneForm:
    """Image of a formal combination of dB's in the ambient calculus."""
    bm, bp, b0 = generators()
    symbols = {"dB-": bm, "dB+": bp, "dB0": b0}
    out = OneForm(calculus)
    for key, coef in free.items():
        out = out + differential(symbols[key], calculus).left(coef)
    return out


def omega0(calculus: int) -> Tuple[FreeOneForm, OneForm]:
    """The generator of the quotient: its formal expression and its image."""
    cid = require_projectable(calculus)
    free = omega0_free()
    return free, realize(free, cid)


# ---------------------------------------------------------------------------
# exterior derivative of one-forms (ambient), wedge of one-forms
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _pair_coordinates(calculus: int, sign: int):
    fr = Frame.exact(calculus, sign)
    return {(c, b): fr.coords(2, fr.labelled(c, b)) for c in range(3) for b in range(3)}


def wedge_one_forms(u: OneForm, v: OneForm, sign: int = 1) -> List[AlgebraElement]:
    """u ^ v on the 2-form basis (w_-^w_+, w_+^w_z, w_z^w_-)."""
    cid = u.calculus
    table = _pair_coordinates(cid, sign)
    out = [AlgebraElement() for _ in range(3)]
    for a, ua in enumerate(u.coords):
        if not ua:
            continue
        for b, vb in enumerate(v.coords):
            if not vb:
                continue
            moved = commute_right(OneForm.basis(cid, a), vb)
            for c, x in enumerate(moved.coords):
                if not x:
                    continue
                coef = ua * x
                for d, k in enumerate(table[(c, b)]):
                    if k:
                        out[d] = out[d] + coef.scale(k)
    return out


def d_one_form(u: OneForm, sign: int = 1) -> List[AlgebraElement]:
    """d(sum_b u_b w_b) = sum_b sum_i d(u_b x_i) ^ d y_i where
    w_b = sum_i x_i d y_i."""
    cid = u.calculus
    out = [AlgebraElement() for _ in range(3)]
    for b, ub in enumerate(u.coords):
        if not ub:
            continue
        for x, y in witnesses(cid)[b]:
            w = wedge_one_forms(differential(ub * x, cid), differential(y, cid), sign)
            out = [p + r for p, r in zip(out, w)]
    return out


# ---------------------------------------------------------------------------
# Hodge operators on the sphere
# ---------------------------------------------------------------------------


class SphereHodge:
    """Coefficients of S-check for one calculus and sign, as Polys in
    alpha, beta, gamma and the real scale m_check:

        S(1) = one * w_-^w_+,  S(x_-+ w_-+) = minus/plus * x_-+ w_-+,
        S(t w_-^w_+) = top * t,

    with w_-^w_+ the wedge of the chosen braiding."""

    def __init__(self, calculus: int, sign: int, g: Contraction | None = None):
        self.calculus = calculus
        self.sign = sign
        fr = Frame.exact(calculus, sign)
        self.frame = fr
        g = g or Contraction.symbolic()
        self.g = g
        self.m = var(SCALE)
        vol = fr.labelled(M, P)
        mu = [self.m * (I * x) if x else Poly() for x in vol]
        self.one = self.m * I
        minus = contract(g, [ONE, ZERO, ZERO], 1, mu, 2)
        plus = contract(g, [ZERO, ONE, ZERO], 1, mu, 2)
        if minus[P] or minus[Z] or plus[M] or plus[Z]:
            raise ArithmeticError("S-check does not preserve the w_-+ sectors")
        self.minus = minus[M] / fr.lam(1, -sign)
        self.plus = plus[P] / fr.lam(1, -sign)
        self.top = contract(g, vol, 2, mu, 2)[0] / fr.lam(2, -sign)
        self.volume_square = contract(g, vol, 2, vol, 2)[0] * (-1)  # g(i w, i w)

    def square_of_one(self) -> Poly:
        return self.one * self.top

    def normalization(self, values: dict | None = None) -> Poly:
        """m_check^2 fixed by S^2(1) = sgn g(i w_-^w_+, i w_-^w_+)."""
        vol_sq = self.volume_square.substitute(values or {})
        s, odd = sgn(vol_sq)
        if odd:
            raise ArithmeticError("sign of the volume depends on the contraction")
        per_unit = (self.square_of_one().substitute(values or {})).divide_monomial(self.m * self.m)
        return Poly.lift(s) / per_unit

    def apply(self, form: SphereForm, values: dict, scale) -> SphereForm:
        """S-check on a concrete form; values fixes alpha, beta, gamma and
        scale the value of m_check."""
        sub = dict(values)
        sub[SCALE] = Poly.lift(scale)
        def num(p: Poly):
            v = p.substitute(sub)
            if not v.is_constant():
                raise ValueError(f"coefficient {v} still depends on symbols")
            return v.constant() if v.terms else ZERO

        if form.degree == 0:
            return SphereForm(form.calculus, 2, [form.parts[0].scale(num(self.one))])
        if form.degree == 1:
            xm, xp = form.parts
            return SphereForm(form.calculus, 1, [xm.scale(num(self.minus)), xp.scale(num(self.plus))])
        return SphereForm(form.calculus, 0, [form.parts[0].scale(num(self.top))])


@lru_cache(maxsize=None)
def sphere_hodge(calculus: int, sign: int = 1) -> SphereHodge:
    require_projectable(calculus)
    return SphereHodge(calculus, sign)


def probe(calculus: int, sign: int = 1) -> bool:
    """Whether S-check squared is one scalar on both 1-form sectors for
    every g in G_S: minus^2 = plus^2 on each solution branch."""
    h = sphere_hodge(calculus, sign)
    for branch in symmetry_class(Frame.exact(calculus, sign), "S"):
        if (h.minus * h.minus - h.plus * h.plus).substitute(branch).terms:
            return False
    return True


def probe_table() -> Dict[int, bool]:
    return {c: probe(c) for c in PROJECTABLE}


# ---------------------------------------------------------------------------
# Laplacian
# ---------------------------------------------------------------------------


def casimir(f: AlgebraElement) -> AlgebraElement:
    """q (E F + F E) |> f."""
    f = alg.element(f)
    ef = act_left(E, act_left(F, f))
    fe = act_left(F, act_left(E, f))
    return (ef + fe).scale(Q)


def unit_point(calculus: int, sign: int = 1) -> dict:
    """A contraction in G_S with every free parameter equal to 1."""
    branch = symmetry_class(Frame.exact(calculus, sign), "S")[0]
    free = {n for v in branch.values() for n in Poly.lift(v).variables()}
    ones = {n: Poly.lift(1) for n in free}
    values = {k: Poly.lift(v).substitute(ones) for k, v in branch.items()}
    values.update({n: v for n, v in ones.items() if n not in values})
    return values


def laplacian(calculus: int, sign: int, f: AlgebraElement, values: dict | None = None) -> AlgebraElement:
    """S d S d f on L_0 with the normalized scale, for g given by values
    (default: the point of G_S with alpha = gamma = 1)."""
    cid = require_projectable(calculus)
    if not is_coinvariant(f):
        raise NotHorizontalError("f is not in L_0")
    values = values if values is not None else unit_point(cid, sign)
    h = sphere_hodge(cid, sign)
    m2 = h.normalization(values)

    def num(p: Poly):
        v = Poly.lift(p).substitute(values)
        if not v.is_constant():
            raise ValueError(f"coefficient {v} still depends on symbols")
        return v.constant() if v.terms else ZERO

    # everything is linear in m_check per application; collect m_check^2
    c_minus = num(h.minus.divide_monomial(h.m))
    c_plus = num(h.plus.divide_monomial(h.m))
    c_top = num(h.top.divide_monomial(h.m))
    df = differential(f, cid)
    if df.coords[Z]:
        raise NotHorizontalError("df has a vertical component")
    first = OneForm(cid, [df.coords[M].scale(c_minus), df.coords[P].scale(c_plus), AlgebraElement()])
    top = d_one_form(first, sign)[0]
    return top.scale(c_top * num(m2))


def laplacian_matches(calculus: int, sign: int, degree: int = 4) -> List[str]:
    """Monomials (as strings) where the Hodge Laplacian differs from the
    Casimir action."""
    bad = []
    for f in monomials(degree):
        if laplacian(calculus, sign, f) != casimir(f):
            bad.append(alg.format_element(f))
    return bad


# ---------------------------------------------------------------------------
# comparison with closed forms
# ---------------------------------------------------------------------------


def top_identification(calculus: int, sign: int) -> RatFunc:
    """t with (w-^w+ of the sign +1 braiding) = t (w-^w+ of this braiding)
    as range tensors."""
    fr = Frame.exact(calculus, sign)
    coords = fr.coords(2, Frame.exact(calculus, 1).labelled(M, P))
    if coords[1] or coords[2]:
        raise ArithmeticError("top forms of the two braidings are not proportional")
    return coords[0]


def compare_actions(calculus: int, sign: int) -> List[str]:
    """Mismatches between S-check and the closed forms in tables, on every
    branch of G_S.  The closed forms use the +1 top tensor throughout."""
    from .tables import SPHERE_ACTIONS

    ref = SPHERE_ACTIONS[(calculus, sign)]
    h = sphere_hodge(calculus, sign)
    t = top_identification(calculus, sign)
    unit = var(SCALE)
    computed = {
        "one": h.one.divide_monomial(unit) / t,
        "minus": h.minus.divide_monomial(unit),
        "plus": h.plus.divide_monomial(unit),
        "top": h.top.divide_monomial(unit) * t,
    }
    bad = []
    for branch in symmetry_class(Frame.exact(calculus, sign), "S"):
        for name, value in computed.items():
            diff = (value - getattr(ref, name)).substitute(branch)
            if diff.terms:
                bad.append(f"{name}: {value.substitute(branch)} vs {getattr(ref, name)}")
        norm = (h.normalization(branch) * ref.norm.substitute(branch)) - Poly.lift(1)
        if norm.substitute(branch).terms:
            bad.append(f"normalization: m_check^2 = {h.normalization(branch)}")
    return bad


def laplacian_ratio(calculus: int, sign: int, degree: int = 2):
    """The constant c with laplacian = c * casimir on the degree <= degree
    monomials, or None when no single constant works."""
    ratio = None
    for f in monomials(degree):
        lhs, rhs = laplacian(calculus, sign, f), casimir(f)
        if not rhs:
            if lhs:
                return None
            continue
        mono = next(iter(rhs.terms))
        c = lhs.coefficient(mono) / rhs.coefficient(mono)
        if lhs != rhs.scale(c) or (ratio is not None and c != ratio):
            return None
        ratio = c
    return ratio
