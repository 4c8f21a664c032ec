"""Braidings, antisymmetrizers and the braided exterior algebras.

Basis tensors omega_{a1} (x) ... (x) omega_{ak} are indexed by the base-3
number a1 a2 ... ak with digits (minus, plus, z) = (0, 1, 2).  Matrices act
on column vectors: ``M[out][in]``.

A k-form is represented by its image in the range of A^(k): the wedge of
forms x, y of degrees k, l is A^(k+l)(x (x) y) / (lambda_k lambda_l).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from . import algebra as alg
from . import linalg
from .algebra import AlgebraElement
from .dual import evaluate
from .fodc import omega_times_mono
from .scalars import ONE, ZERO, Q, RatFunc
from .tangent import MINUS, PLUS, ZED, LABELS, check_id, ideal_generators, tangent_space

M, P, Z = MINUS, PLUS, ZED
SIGNS = (1, -1)


class BraidingError(ArithmeticError):
    """A transcribed braiding failed one of its defining identities."""


def index(*digits: int) -> int:
    i = 0
    for d in digits:
        i = 3 * i + d
    return i


def digits(i: int, k: int) -> Tuple[int, ...]:
    out = []
    for _ in range(k):
        out.append(i % 3)
        i //= 3
    return tuple(reversed(out))


def tensor_label(i: int, k: int) -> str:
    return "(x)".join("w" + LABELS[d] for d in digits(i, k))


# ---------------------------------------------------------------------------
# braiding data
# ---------------------------------------------------------------------------


def _q(k: int) -> RatFunc:
    return Q ** k


def _tables() -> Dict[int, dict]:
    q = Q
    one = ONE
    t = {}
    t[7] = {
        (M, P): {(M, P): one - q ** 2, (P, M): _q(-2)},
        (P, M): {(M, P): _q(4)},
        (M, Z): {(M, Z): one - q ** 2, (Z, M): _q(-4)},
        (Z, M): {(M, Z): _q(6)},
        (Z, P): {(Z, P): one - q ** 2, (P, Z): _q(-4)},
        (P, Z): {(Z, P): _q(6)},
    }
    c1 = q * (one - q) / (one + one / q)
    t[1] = {
        (Z, Z): {(Z, Z): one, (P, M): c1, (M, P): -c1},
        (M, P): {(P, M): _q(2), (M, P): one - q ** 2},
        (P, M): {(M, P): one},
        (M, Z): {(Z, M): _q(2), (M, Z): one - q ** 2},
        (Z, M): {(M, Z): one},
        (Z, P): {(P, Z): _q(2), (Z, P): one - q ** 2},
        (P, Z): {(Z, P): one},
    }
    t[3] = {
        (Z, Z): {(Z, Z): one, (M, P): q ** 2 - 1, (P, M): -(q ** 2 - 1) * _q(4)},
        (M, P): {(P, M): _q(6), (M, P): one - q ** 2},
        (P, M): {(M, P): _q(-4)},
        (M, Z): {(Z, M): _q(4), (M, Z): one - q ** 2},
        (Z, M): {(M, Z): _q(-2)},
        (Z, P): {(P, Z): _q(4), (Z, P): one - q ** 2},
        (P, Z): {(Z, P): _q(-2)},
    }
    c4 = (one - q) / (one + q)
    t[4] = {
        (Z, Z): {(Z, Z): one, (M, P): c4, (P, M): -c4},
        (P, M): {(M, P): _q(2), (P, M): one - q ** 2},
        (M, P): {(P, M): one},
        (Z, M): {(M, Z): _q(2), (Z, M): one - q ** 2},
        (M, Z): {(Z, M): one},
        (P, Z): {(Z, P): _q(2), (P, Z): one - q ** 2},
        (Z, P): {(P, Z): one},
    }
    t[6] = {
        (M, P): {(P, M): _q(-4), (M, P): one - q ** 2, (Z, Z): q ** 2 * (q ** 2 - 1)},
        (P, M): {(M, P): _q(6), (Z, Z): -(q ** 6) * (q ** 2 - 1)},
        (M, Z): {(Z, M): _q(-2), (M, Z): one - q ** 2},
        (Z, M): {(M, Z): _q(4)},
        (Z, P): {(P, Z): _q(-2), (Z, P): one - q ** 2},
        (P, Z): {(Z, P): _q(4)},
    }
    for rules in t.values():
        for a in (M, P, Z):
            rules.setdefault((a, a), {(a, a): one})
    # calculi 2 and 5 are 1 and 4 with q -> -q
    for src, dst in ((1, 2), (4, 5)):
        t[dst] = {
            k: {kk: v.negate_q() for kk, v in img.items()} for k, img in t[src].items()
        }
    return t


def braiding_table(calculus: int) -> dict:
    """{(a, b): {(c, d): coefficient}} meaning sigma(w_a (x) w_b) = sum coeff w_c (x) w_d."""
    return _tables()[check_id(calculus)]


def _matrix_from_table(table: dict) -> List[List[RatFunc]]:
    m = linalg.zeros(9, 9, ZERO)
    for (a, b), img in table.items():
        for (c, d), v in img.items():
            m[index(c, d)][index(a, b)] = m[index(c, d)][index(a, b)] + v
    return m


def identity(n: int):
    return linalg.identity(n, ZERO, ONE)


def on_first(m, n_after: int = 1):
    """m (x) id on the trailing factors."""
    return linalg.kron(m, identity(3 ** n_after), ZERO)


def on_last(m, n_before: int = 1):
    return linalg.kron(identity(3 ** n_before), m, ZERO)


def braid_equation_holds(sigma) -> bool:
    s1, s2 = on_first(sigma), on_last(sigma)
    lhs = linalg.matmul(s2, linalg.matmul(s1, s2, ZERO), ZERO)
    rhs = linalg.matmul(s1, linalg.matmul(s2, s1, ZERO), ZERO)
    return linalg.equal(lhs, rhs)


def spectral_identity_holds(sigma, sign: int) -> bool:
    """(1 - s)(q^{2 sign} + s) = 0."""
    i9 = identity(9)
    left = linalg.sub(i9, sigma)
    right = linalg.add(linalg.scale(i9, _q(2 * sign)), sigma)
    return linalg.is_zero_matrix(linalg.matmul(left, right, ZERO))


@lru_cache(maxsize=None)
def _braiding(calculus: int, sign: int):
    base = _matrix_from_table(braiding_table(calculus))
    if sign not in SIGNS:
        raise ValueError("sign must be +1 or -1")
    try:
        inverse = linalg.inverse(base, ZERO, ONE)
    except ZeroDivisionError as exc:
        raise BraidingError(f"calculus {calculus}: braiding is not invertible") from exc
    sigma = base if sign == 1 else inverse
    if not braid_equation_holds(sigma):
        raise BraidingError(f"calculus {calculus}, sign {sign}: braid equation fails")
    if not spectral_identity_holds(sigma, sign):
        raise BraidingError(f"calculus {calculus}, sign {sign}: spectral identity fails")
    return tuple(tuple(r) for r in sigma)


def braiding(calculus: int, sign: int = 1) -> List[List[RatFunc]]:
    """The 9x9 matrix of sigma (sign +1) or sigma^-1 (sign -1), gated by
    invertibility, the braid equation and the spectral identity."""
    return [list(r) for r in _braiding(check_id(calculus), sign)]


# ---------------------------------------------------------------------------
# antisymmetrizers
# ---------------------------------------------------------------------------


def lam(k: int, sign: int) -> RatFunc:
    """Eigenvalue of A^(k) on its range: 1, 1 + q^{2s}, (1 + q^{2s})(1 + q^{2s} + q^{4s})."""
    x = _q(2 * sign)
    if k <= 1:
        return ONE
    if k == 2:
        return ONE + x
    if k == 3:
        return (ONE + x) * (ONE + x + x * x)
    raise ValueError("only degrees up to 3 have nonzero forms")


@lru_cache(maxsize=None)
def _antisym(calculus: int, sign: int, k: int):
    sigma = braiding(calculus, sign)
    if k == 1:
        return tuple(tuple(r) for r in identity(3))
    if k == 2:
        return tuple(tuple(r) for r in linalg.sub(identity(9), sigma))
    # A^(k) = (1 (x) A^(k-1)) (1 - s1 + s1 s2 - s1 s2 s3 ...)
    n = 3 ** k
    acc = identity(n)
    chain = identity(n)
    sgn = -1
    for j in range(k - 1):
        s_j = linalg.kron(linalg.kron(identity(3 ** j), sigma, ZERO), identity(3 ** (k - 2 - j)), ZERO)
        chain = linalg.matmul(chain, s_j, ZERO)
        acc = linalg.add(acc, linalg.scale(chain, ONE * sgn)) if sgn < 0 else linalg.add(acc, chain)
        sgn = -sgn
    inner = linalg.kron(identity(3), [list(r) for r in _antisym(calculus, sign, k - 1)], ZERO)
    return tuple(tuple(r) for r in linalg.matmul(inner, acc, ZERO))


def antisymmetrizer(calculus: int, sign: int, k: int) -> List[List[RatFunc]]:
    """A^(2) = 1 - s, A^(3) = (1 - s_2)(1 - s_1 + s_1 s_2); k = 4 is available
    for the triviality check."""
    if k not in (1, 2, 3, 4):
        raise ValueError("k must be 1..4")
    return [list(r) for r in _antisym(check_id(calculus), sign, k)]


def _column(m, j: int) -> List[RatFunc]:
    return [row[j] for row in m]


@lru_cache(maxsize=None)
def _wedge_basis(calculus: int, sign: int):
    out = {0: ((ONE,),), 1: tuple(tuple(ONE if i == a else ZERO for i in range(3)) for a in range(3))}
    a2 = antisymmetrizer(calculus, sign, 2)
    out[2] = tuple(tuple(_column(a2, index(x, y))) for x, y in ((M, P), (P, Z), (Z, M)))
    a3 = antisymmetrizer(calculus, sign, 3)
    out[3] = (tuple(_column(a3, index(M, P, Z))),)
    return out


WEDGE_LABELS = {
    0: ("1",),
    1: ("w-", "w+", "wz"),
    2: ("w-^w+", "w+^wz", "wz^w-"),
    3: ("theta",),
}


def wedge_basis(calculus: int, sign: int, k: int) -> List[List[RatFunc]]:
    """Tensor images of the canonical basis of left-invariant k-forms."""
    return [list(v) for v in _wedge_basis(check_id(calculus), sign)[k]]


def volume_form(calculus: int, sign: int) -> List[RatFunc]:
    """theta = A^(3)(w- (x) w+ (x) wz) as a 27-vector."""
    return wedge_basis(calculus, sign, 3)[0]


def coordinates(calculus: int, sign: int, k: int, tensor: Sequence, zero=ZERO) -> list:
    """Coefficients of a k-form (given as a range tensor) in the canonical
    wedge basis.  Entries of ``tensor`` may live in any ring that the
    scalar basis acts on, e.g. polynomials in the contraction parameters."""
    if k <= 1:
        return list(tensor)
    basis = wedge_basis(calculus, sign, k)
    rows = _pivot_rows(calculus, sign, k)
    inv = _basis_inverse(calculus, sign, k)
    coeffs = []
    for c in range(len(basis)):
        acc = zero
        for j, r in enumerate(rows):
            if tensor[r] and inv[c][j]:
                acc = acc + tensor[r] * inv[c][j]
        coeffs.append(acc)
    for i in range(3 ** k):
        acc = zero
        for c in range(len(basis)):
            if basis[c][i] and coeffs[c]:
                acc = acc + coeffs[c] * basis[c][i]
        if acc != tensor[i]:
            raise ValueError("tensor is not a combination of the wedge basis")
    return coeffs


@lru_cache(maxsize=None)
def _pivot_rows(calculus: int, sign: int, k: int) -> Tuple[int, ...]:
    basis = wedge_basis(calculus, sign, k)
    rows = [[basis[c][i] for c in range(len(basis))] for i in range(3 ** k)]
    # rows of the transposed basis matrix that give an invertible square block
    _, piv = linalg.rref(linalg.transpose(rows))
    return tuple(piv)


@lru_cache(maxsize=None)
def _basis_inverse(calculus: int, sign: int, k: int):
    basis = wedge_basis(calculus, sign, k)
    rows = _pivot_rows(calculus, sign, k)
    block = [[basis[c][r] for r in rows] for c in range(len(basis))]  # block[c][j]
    # want coeff_c = sum_j inv[c][j] * tensor[rows[j]], i.e. inv = (block^T)^-1
    return tuple(tuple(r) for r in linalg.inverse(linalg.transpose(block), ZERO, ONE))


def tensor_product(x: Sequence, y: Sequence) -> list:
    out = []
    for a in x:
        for b in y:
            out.append(a * b if a and b else ZERO)
    return out


def wedge(calculus: int, sign: int, x: Sequence, k: int, y: Sequence, l: int) -> list:
    """Range tensor of x ^ y for range tensors x (degree k) and y (degree l);
    the zero list of length 81 is never built: degree > 3 gives []."""
    if k + l > 3:
        return []
    a = antisymmetrizer(calculus, sign, k + l)
    t = tensor_product(x, y)
    v = linalg.matvec(a, t, ZERO)
    scale = ONE / (lam(k, sign) * lam(l, sign))
    return [c * scale if c else c for c in v]


def wedge_basis_forms(calculus: int, sign: int, i: int, j: int) -> list:
    """Canonical coordinates of w_i ^ w_j in the 2-form basis."""
    e = wedge_basis(calculus, sign, 1)
    return coordinates(calculus, sign, 2, wedge(calculus, sign, e[i], 1, e[j], 1))


def degree_four_vanishes(calculus: int, sign: int) -> bool:
    return linalg.is_zero_matrix(antisymmetrizer(calculus, sign, 4))


def range_dimension(calculus: int, sign: int, k: int) -> int:
    return linalg.rank(antisymmetrizer(calculus, sign, k), ONE)


def acts_as_scalar_on_range(calculus: int, sign: int, k: int) -> bool:
    """A^(k) A^(k) = lambda_k A^(k)."""
    a = antisymmetrizer(calculus, sign, k)
    return linalg.equal(linalg.matmul(a, a, ZERO), linalg.scale(a, lam(k, sign)))


def kernel_dimensions(calculus: int, sign: int) -> Tuple[int, int]:
    """(dim ker(1 - s), dim ker(q^{2 sign} + s))."""
    s = braiding(calculus, sign)
    i9 = identity(9)
    k1 = 9 - linalg.rank(linalg.sub(i9, s), ONE)
    k2 = 9 - linalg.rank(linalg.add(linalg.scale(i9, _q(2 * sign)), s), ONE)
    return k1, k2


# ---------------------------------------------------------------------------
# the ideal S_Q
# ---------------------------------------------------------------------------


def sq_vector(calculus: int, x: AlgebraElement) -> List[RatFunc]:
    """S(x) = sum r(x_(1)) (x) r(x_(2)); its (a, b) entry is (X_a X_b)(x)."""
    basis = tangent_space(calculus).basis
    return [evaluate(basis[a] * basis[b], x) for a in range(3) for b in range(3)]


def sq_ideal_span(calculus: int, generators=None) -> List[List[RatFunc]]:
    """A basis (list of 9-vectors) of span{S(x) : x a generator of Q}."""
    gens = generators if generators is not None else ideal_generators(calculus)
    vecs = [sq_vector(calculus, g) for g in gens]
    mat = linalg.transpose(vecs)
    return linalg.column_space(mat)


def kernel_of_antisymmetrizer(calculus: int, sign: int) -> List[List[RatFunc]]:
    a2 = antisymmetrizer(calculus, sign, 2)
    return linalg.nullspace(a2, ZERO, ONE)


def ideal_equality(calculus: int, sign: int = 1, generators=None) -> bool:
    return linalg.same_span(
        sq_ideal_span(calculus, generators), kernel_of_antisymmetrizer(calculus, sign), ONE
    )


# ---------------------------------------------------------------------------
# tensor forms with algebra coefficients (bimodule structure)
# ---------------------------------------------------------------------------


class TensorForm:
    """sum_i x_i omega_{i} with omega_i a basis tensor of degree k."""

    __slots__ = ("calculus", "degree", "coords")

    def __init__(self, calculus: int, degree: int, coords: Dict[int, AlgebraElement] | None = None):
        self.calculus = check_id(calculus)
        self.degree = degree
        self.coords = {i: alg.element(x) for i, x in (coords or {}).items() if x}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorForm)
            and (self.calculus, self.degree) == (other.calculus, other.degree)
            and self.coords == other.coords
        )

    def __add__(self, other: "TensorForm") -> "TensorForm":
        out = dict(self.coords)
        for i, x in other.coords.items():
            out[i] = out[i] + x if i in out else x
        return TensorForm(self.calculus, self.degree, out)

    def left(self, h: AlgebraElement) -> "TensorForm":
        h = alg.element(h)
        return TensorForm(self.calculus, self.degree, {i: h * x for i, x in self.coords.items()})

    def apply(self, matrix) -> "TensorForm":
        """Apply a left-linear map given by a scalar matrix on basis tensors."""
        out: Dict[int, AlgebraElement] = {}
        for j, x in self.coords.items():
            for i in range(len(matrix)):
                c = matrix[i][j]
                if c:
                    y = x.scale(c)
                    out[i] = out[i] + y if i in out else y
        return TensorForm(self.calculus, self.degree, out)

    def times(self, h: AlgebraElement) -> "TensorForm":
        """Right multiplication, pushed through every tensor slot."""
        h = alg.element(h)
        out = TensorForm(self.calculus, self.degree)
        for i, x in self.coords.items():
            slots = digits(i, self.degree)
            partial = {(): h}
            for pos in range(self.degree - 1, -1, -1):
                b = slots[pos]
                nxt: Dict[tuple, AlgebraElement] = {}
                for tail, y in partial.items():
                    for mono, c in y.terms.items():
                        img = omega_times_mono(self.calculus, b, mono)
                        for a in range(3):
                            if img[a]:
                                key = (a,) + tail
                                v = img[a].scale(c)
                                nxt[key] = nxt[key] + v if key in nxt else v
                partial = nxt
            for tail, y in partial.items():
                # tail holds slot labels; the coefficient y sits on the far left
                idx = index(*tail)
                v = x * y
                out = out + TensorForm(self.calculus, self.degree, {idx: v})
        return out

    def __repr__(self) -> str:
        parts = [f"({alg.format_element(x)}) {tensor_label(i, self.degree)}" for i, x in sorted(self.coords.items())]
        return " + ".join(parts) if parts else "0"
