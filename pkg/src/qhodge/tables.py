"""Closed-form reference values: volume forms, g(theta, theta), first-order
scalar products, the Hodge action tables and the symmetry classes.

These are transcriptions of published formulas, kept as data so that the
engine can be compared against them; nothing in the engine reads them.
Forms are addressed by labels: () is 1, (a,) a basis 1-form, (a, b) the
wedge w_a ^ w_b and (a, b, c) the wedge of three.
"""

from __future__ import annotations

from typing import Callable, Dict, List, NamedTuple, Tuple

from .polys import Poly, var
from .scalars import ONE, Q, RatFunc, I, as_ratfunc
from .tangent import MINUS as M, PLUS as P, ZED as Z


def q(n) -> RatFunc:
    return Q ** n


def lam2(sign: int = 1) -> RatFunc:
    return ONE + q(2 * sign)


def lam3(sign: int = 1) -> RatFunc:
    x = q(2 * sign)
    return (ONE + x) * (ONE + x + x * x)


ALPHA, BETA, GAMMA = var("alpha"), var("beta"), var("gamma")
XI, RHO = var("xi"), var("rho")

# ---------------------------------------------------------------------------
# volume forms theta_+ as tensors {(a1, a2, a3): coefficient}
# ---------------------------------------------------------------------------


def _classical(scale: RatFunc) -> Dict[Tuple[int, int, int], RatFunc]:
    return {
        (M, P, Z): scale,
        (M, Z, P): -scale,
        (P, Z, M): scale,
        (P, M, Z): -scale,
        (Z, M, P): scale,
        (Z, P, M): -scale,
    }


VOLUME_FORMS: Dict[int, Dict[Tuple[int, int, int], RatFunc]] = {
    7: {
        (M, P, Z): q(4),
        (M, Z, P): -q(10),
        (P, Z, M): q(-6),
        (P, M, Z): -ONE,
        (Z, M, P): q(4),
        (Z, P, M): -ONE,
    },
    1: _classical(q(4)),
    3: {
        (M, P, Z): q(4),
        (M, Z, P): -q(2),
        (P, M, Z): -q(8),
        (P, Z, M): q(10),
        (Z, M, P): q(4),
        (Z, P, M): -q(8),
    },
    4: _classical(q(2)),
    6: {
        (M, P, Z): q(4),
        (M, Z, P): -q(8),
        (P, Z, M): q(-6),
        (P, M, Z): -q(-2),
        (Z, M, P): q(4),
        (Z, P, M): -q(-2),
        (Z, Z, Z): q(4) * (ONE - q(2)),
    },
}

# g(theta_+, theta_+) with symbolic alpha, beta, gamma
G_THETA_THETA: Dict[int, Poly] = {
    7: ALPHA * BETA * GAMMA * (-6 * q(4)),
    1: ALPHA * BETA * GAMMA * (-6 * q(8)),
    3: ALPHA * BETA * GAMMA * (-6 * q(12)),
    4: ALPHA * BETA * GAMMA * (-6 * q(4)),
    6: GAMMA * (ALPHA * BETA * 6 - GAMMA * GAMMA * (ONE - q(2)) ** 2) * (-q(2)),
}

# ---------------------------------------------------------------------------
# first-order scalar products (diagonal entries), keyed by basis 1-form
# ---------------------------------------------------------------------------

T_PRODUCTS_1: Dict[int, Poly] = {M: -BETA, P: -ALPHA, Z: -GAMMA}

S_PRODUCTS_1: Dict[Tuple[int, int], Dict[int, Poly]] = {
    (7, 1): {M: -ALPHA, P: -BETA * q(4), Z: -GAMMA * q(2)},
    (7, -1): {M: -ALPHA * q(-4), P: -BETA, Z: -GAMMA * q(-2)},
    (1, 1): {M: -ALPHA, P: -BETA * q(4), Z: -GAMMA * q(2)},
    (3, 1): {M: -ALPHA, P: -BETA * q(4), Z: -GAMMA * q(2)},
    (4, 1): {M: -ALPHA * q(4), P: -BETA, Z: -GAMMA * q(2)},
    (6, 1): {M: -ALPHA, P: -BETA * q(4), Z: -GAMMA * q(2)},
}

# ---------------------------------------------------------------------------
# action tables
# ---------------------------------------------------------------------------


class Context(NamedTuple):
    """What a table line may refer to: the volume scale m, the diagonal
    first-order products b1[a] and the products b2(labels) of labelled
    forms, all computed by the engine."""

    m: Poly
    b1: Dict[int, Poly]
    b2: Callable[[Tuple[int, ...]], Poly]
    det_g: Poly


class Line(NamedTuple):
    source: Tuple[int, ...]
    target: Tuple[int, ...]
    value: Callable[[Context], Poly]
    text: str


THETA = (M, P, Z)


def _lines_common() -> List[Line]:
    return [Line((), THETA, lambda c: c.m, "op(1) = mu")]


def _t_table_7() -> List[Line]:
    return _lines_common() + [
        Line((M,), (M, Z), lambda c: c.m * c.b1[M] * q(-2), "T(w-) = q^-2 m <w-,w-> w-^wz"),
        Line((P,), (P, Z), lambda c: -c.m * c.b1[P], "T(w+) = -m <w+,w+> w+^wz"),
        Line((Z,), (M, P), lambda c: -c.m * c.b1[Z], "T(wz) = -m <wz,wz> w-^w+"),
        Line((M, Z), (M,), lambda c: c.m * c.b2((M, Z)) * q(-2), "T(w-^wz) = q^-2 m <w-^wz,w-^wz> w-"),
        Line((P, Z), (P,), lambda c: -c.m * c.b2((P, Z)), "T(w+^wz) = -m <w+^wz,w+^wz> w+"),
        Line((M, P), (Z,), lambda c: -c.m * c.b2((M, P)), "T(w-^w+) = -m <w-^w+,w-^w+> wz"),
        Line(THETA, (), lambda c: c.m * c.det_g, "T(theta) = m det g, i.e. T(mu) = m^2 det g"),
    ]


def _s_table(c_minus, c_mz, c_pz, c_mp, extra_mp=None, z_sign=-1) -> List[Line]:
    L = lam2(1)

    def mp(c: Context) -> Poly:
        v = -c.m * c.b1[M] * c.b1[P] * (2 * c_mp / L)
        if extra_mp is not None:
            v = v + c.m * c.b1[Z] * c.b1[Z] * (extra_mp / L)
        return v

    return _lines_common() + [
        Line((M,), (M, Z), lambda c: c.m * c.b1[M] * c_minus, "S(w-) ~ m {w-,w-} w-^wz"),
        Line((P,), (P, Z), lambda c: -c.m * c.b1[P], "S(w+) = -m {w+,w+} w+^wz"),
        Line((Z,), (M, P), lambda c: c.m * c.b1[Z] * z_sign, "S(wz) ~ m {wz,wz} w-^w+"),
        Line((M, Z), (M,), lambda c: c.m * c.b1[M] * c.b1[Z] * (2 * c_mz / L), "S(w-^wz) ~ m {w-,w-}{wz,wz} w-"),
        Line((P, Z), (P,), lambda c: -c.m * c.b1[P] * c.b1[Z] * (2 * c_pz / L), "S(w+^wz) ~ m {w+,w+}{wz,wz} w+"),
        Line((M, P), (Z,), mp, "S(w-^w+) ~ m {w-,w-}{w+,w+} wz"),
    ]


def action_tables() -> Dict[Tuple[str, int], List[Line]]:
    """(op, calculus) -> lines, all for the sign +1 algebra."""
    return {
        ("T", 7): _t_table_7(),
        ("S", 1): _s_table(q(2), q(6), ONE, q(4)),
        ("S", 3): _s_table(q(6), q(12), q(-2), q(8), z_sign=1),
        ("S", 4): _s_table(q(-2), q(-2), q(4), ONE),
        ("S", 6): _s_table(q(-4), q(-4), q(4), q(-2), extra_mp=Q * (q(2) - ONE)),
    }


# op^2(mu) on the symmetric and real class, as (sign, symbols): -sgn(gamma)
SQUARE_OF_VOLUME = {c: (-1, ("gamma",)) for c in (1, 3, 4, 6)}

# ---------------------------------------------------------------------------
# higher products for calculus 7 (both products, sign +1)
# ---------------------------------------------------------------------------

HIGHER_PRODUCTS_7: List[Tuple[Tuple[int, ...], Callable[[Dict[int, Poly]], Poly]]] = [
    ((M, P), lambda b: b[M] * b[P] * (2 / lam2(1))),
    ((M, Z), lambda b: b[M] * b[Z] * (2 * q(-2) / lam2(1))),
    ((P, Z), lambda b: b[P] * b[Z] * (2 * q(6) / lam2(1))),
    (THETA, lambda b: b[M] * b[P] * b[Z] * (6 * q(4) / lam3(1))),
]

# ---------------------------------------------------------------------------
# symmetry classes as systems of equations (lists of alternatives)
# ---------------------------------------------------------------------------


def _real(*names: str) -> List[Poly]:
    return [var(n) - var(n + "*") for n in names]


def _linear_class(lhs: Poly, rhs: Poly) -> List[List[Poly]]:
    return [[lhs - rhs] + _real("alpha", "gamma", "beta")]


def _class_6_s(rho_relation: bool) -> List[List[Poly]]:
    out = []
    for sgn in (1, -1):
        eqs = [
            ALPHA + XI * (I * q(6)),
            BETA - RHO * (I * q(4)),
            GAMMA * (q(2) - ONE) - XI * (2 * sgn * q(-2)),
        ] + _real("xi", "gamma")
        if rho_relation:
            eqs.append(RHO - XI * q(-8))
        out.append(eqs)
    return out


def _class_6_t() -> List[List[Poly]]:
    out = []
    for sgn in (1, -1):
        out.append(
            [
                ALPHA - RHO * I,
                BETA + RHO * (I * q(6)),
                GAMMA * (q(2) - ONE) - RHO * (2 * sgn),
            ]
            + _real("rho", "gamma")
        )
    return out


def symmetry_classes() -> Dict[Tuple[str, int], List[List[Poly]]]:
    """(class, calculus) -> alternatives, each a list of equations; class is
    'S' or 'T'.  Calculi 2 and 5 share the classes of 1 and 4."""
    tab = {
        ("T", 7): _linear_class(BETA, ALPHA * q(6)),
        ("S", 7): _linear_class(BETA, ALPHA * q(10)),
        ("S", 1): _linear_class(ALPHA, BETA),
        ("T", 1): _linear_class(ALPHA, BETA * q(4)),
        ("S", 3): _linear_class(BETA, ALPHA * q(6)),
        ("T", 3): _linear_class(ALPHA, BETA * q(10)),
        ("S", 4): _linear_class(ALPHA, BETA),
        ("T", 4): _linear_class(ALPHA, BETA * q(-4)),
        ("S", 6): _class_6_s(False),
        ("T", 6): _class_6_t(),
    }
    for src, dst in ((1, 2), (4, 5)):
        for op in ("S", "T"):
            tab[(op, dst)] = tab[(op, src)]
    return tab


# the same class written with first-order products: <w-,w-> = q^6 <w+,w+>
# and {w-,w-} = q^6 {w+,w+}, both real, for calculus 7
PRODUCT_FORM_RATIO_7 = q(6)

# determinant on the S class of calculus 6 with parameters rho, xi
def det_on_class_6(sign: int) -> Poly:
    return GAMMA * RHO * RHO * (-2 * q(8) / lam3(sign))


# calculi where the sigma-symmetric class coincides with the S class
FRAK_G_EQUALS_GS = {1: True, 2: True, 3: False, 4: True, 5: True, 6: False, 7: False}

# reference one-forms d(generator) per calculus: {generator: {basis: coefficient}}
EXACT_ONE_FORMS = {
    1: {
        "a": {P: "-q*cs", Z: "a"},
        "c": {P: "as", Z: "c"},
        "as": {M: "c", Z: "-q^-1*as"},
        "cs": {M: "-q^-1*a", Z: "-q^-1*cs"},
    },
    3: {
        "a": {P: "-q*cs", Z: "a"},
        "c": {P: "as", Z: "c"},
        "as": {M: "c", Z: "-q^-2*as"},
        "cs": {M: "-q^-1*a", Z: "-q^-2*cs"},
    },
    4: {
        "a": {P: "-q*cs", Z: "a"},
        "c": {P: "as", Z: "c"},
        "as": {M: "c", Z: "-q*as"},
        "cs": {M: "-q^-1*a", Z: "-q*cs"},
    },
    6: {
        "a": {P: "-q*cs", Z: "-a"},
        "c": {P: "as", Z: "-c"},
        "as": {M: "c", Z: "q^4*as"},
        "cs": {M: "-q^-1*a", Z: "q^4*cs"},
    },
}

# ---------------------------------------------------------------------------
# sphere Hodge operators: coefficients per unit m_check
# ---------------------------------------------------------------------------


class SphereActions(NamedTuple):
    """S(1) = one w-^w+, S(x w-+) = minus/plus x w-+, S(w-^w+) = top and
    m_check^2 * norm = 1.  The sigma^- entries use the tensor of w-^w+
    from the sigma braiding."""

    one: Poly
    minus: Poly
    plus: Poly
    top: Poly
    norm: Poly


def _sphere(one, factor, top_scale, sign) -> SphereActions:
    a = ALPHA * factor
    top = ALPHA * ALPHA * (2 * top_scale / lam2(-sign))
    return SphereActions(Poly.lift(one * I), a * (-I), a * I, top * (-I), top * ONE)


SPHERE_ACTIONS = {
    (1, 1): _sphere(ONE, q(2), q(4), 1),
    (1, -1): _sphere(q(-2), ONE, q(2), -1),
    (4, 1): _sphere(ONE, ONE, ONE, 1),
    (4, -1): _sphere(q(-2), q(-2), q(-2), -1),
}
SPHERE_ACTIONS[(1, -1)] = SPHERE_ACTIONS[(1, -1)]._replace(norm=ALPHA * ALPHA * (2 / lam2(1)))
SPHERE_ACTIONS[(4, -1)] = SPHERE_ACTIONS[(4, -1)]._replace(norm=ALPHA * ALPHA * (2 * q(-4) / lam2(1)))
for _c, _d in ((2, 1), (5, 4)):
    for _s in (1, -1):
        SPHERE_ACTIONS[(_c, _s)] = SPHERE_ACTIONS[(_d, _s)]

# calculi whose sphere operator squares to a scalar on 1-forms
SPHERE_PROBE = {1: True, 2: True, 3: False, 4: True, 5: True, 7: False}
PROJECTABILITY = {1: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 0, 7: 1}

__all__ = [
    "ALPHA", "BETA", "GAMMA", "XI", "RHO", "THETA",
    "Context", "Line", "SphereActions",
    "q", "lam2", "lam3", "as_ratfunc",
    "VOLUME_FORMS", "G_THETA_THETA", "T_PRODUCTS_1", "S_PRODUCTS_1",
    "action_tables", "SQUARE_OF_VOLUME", "HIGHER_PRODUCTS_7", "PRODUCT_FORM_RATIO_7",
    "symmetry_classes", "det_on_class_6", "FRAK_G_EQUALS_GS", "EXACT_ONE_FORMS",
    "SPHERE_ACTIONS", "SPHERE_PROBE", "PROJECTABILITY",
]
