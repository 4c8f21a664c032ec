"""Contractions, Hodge operators S and T, their scalar products, the
symmetry/reality classes and the Laplacians on SU_q(2).

All computations run on a ``Frame``: the braiding of one calculus and sign
together with its antisymmetrizers and the canonical wedge basis.  A frame
is built either over the exact field or over the Gaussian rationals at a
specialized value of s = q^(1/2); the same code serves both, which is how
the numeric cross-checks recompute every identity from scratch.

Forms are range tensors (see ``exterior``); left-invariant k-forms are
given by coordinates in the bases

    1,   (w-, w+, wz),   (w-^w+, w+^wz, wz^w-),   theta = w-^w+^wz.

Operator matrices are ``M[out][in]`` with entries in ``Poly`` (symbols
alpha, beta, gamma for the contraction and m for the volume scale,
mu = m theta).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence

from . import algebra as alg
from . import exterior, linalg
from .algebra import AlgebraElement
from .dual import act_left
from .polys import Poly, conjugate_closure, poly_ratio, solve_system, var
from .scalars import ONE, ZERO, GaussianRational, Q, RatFunc
from .tangent import MINUS, PLUS, ZED, check_id, tangent_space

M, P, Z = MINUS, PLUS, ZED
DIMS = (1, 3, 3, 1)
OPS = ("S", "T")
PRIORITY = ("xi*", "rho*", "xi", "rho", "alpha*", "beta*", "gamma*", "beta", "alpha", "gamma")
# omega_-^* = -omega_+, omega_+^* = -omega_-, omega_z^* = -omega_z
_STAR = {M: (P, -1), P: (M, -1), Z: (Z, -1)}
REFERENCE_S = Fraction(3, 4)  # sgn is read off at q0 = s0^2 = 9/16
SIGN_SAMPLES = (Fraction(1, 5), Fraction(1, 3), Fraction(1, 2), Fraction(3, 4), Fraction(9, 10))


class DegreeError(ValueError):
    """Forms of incompatible degrees were combined."""


class IndefiniteSignError(ArithmeticError):
    """sgn was requested for an expression whose sign is not determined."""


# ---------------------------------------------------------------------------
# frames
# ---------------------------------------------------------------------------


def _build_antisymmetrizer(sigma, k: int, zero, one, cache: dict):
    if k in cache:
        return cache[k]
    if k == 1:
        out = linalg.identity(3, zero, one)
    elif k == 2:
        out = linalg.sub(linalg.identity(9, zero, one), sigma)
    else:
        n = 3 ** k
        acc = linalg.identity(n, zero, one)
        chain = linalg.identity(n, zero, one)
        sgn = -1
        for j in range(k - 1):
            s_j = linalg.kron(
                linalg.kron(linalg.identity(3 ** j, zero, one), sigma, zero),
                linalg.identity(3 ** (k - 2 - j), zero, one),
                zero,
            )
            chain = linalg.matmul(chain, s_j, zero)
            acc = linalg.sub(acc, chain) if sgn < 0 else linalg.add(acc, chain)
            sgn = -sgn
        inner = linalg.kron(linalg.identity(3, zero, one), _build_antisymmetrizer(sigma, k - 1, zero, one, cache), zero)
        out = linalg.matmul(inner, acc, zero)
    cache[k] = out
    return out


def _idx(*ds: int) -> int:
    return exterior.index(*ds)


class Frame:
    """Exterior-algebra data of one calculus and sign over a fixed field."""

    def __init__(self, calculus: int, sign: int, sigma, q, zero, one, label: str = "exact"):
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        self.calculus = calculus
        self.sign = sign
        self.sigma = sigma
        self.q = q
        self.zero = zero
        self.one = one
        self.label = label
        cache: dict = {}
        self.anti = {k: _build_antisymmetrizer(sigma, k, zero, one, cache) for k in (1, 2, 3)}
        a2, a3 = self.anti[2], self.anti[3]
        self.basis = {
            0: [[one]],
            1: [[one if i == a else zero for i in range(3)] for a in range(3)],
            2: [[row[_idx(x, y)] for row in a2] for x, y in ((M, P), (P, Z), (Z, M))],
            3: [[row[_idx(M, P, Z)] for row in a3]],
        }
        self._inverse = {}
        for k in (2, 3):
            basis = self.basis[k]
            cols = linalg.transpose(basis)  # 3^k rows, one column per basis form
            _, piv = linalg.rref(linalg.transpose(cols))
            block = [[basis[c][r] for r in piv] for c in range(len(basis))]
            self._inverse[k] = (tuple(piv), linalg.inverse(linalg.transpose(block), zero, one))

    # -- constructors -----------------------------------------------------
    @staticmethod
    @lru_cache(maxsize=None)
    def exact(calculus: int, sign: int = 1) -> "Frame":
        cid = check_id(calculus)
        return Frame(cid, sign, exterior.braiding(cid, sign), Q, ZERO, ONE)

    @staticmethod
    @lru_cache(maxsize=None)
    def specialized(calculus: int, sign: int, s0: Fraction) -> "Frame":
        """The same construction with every braiding entry evaluated at
        s = s0 before any further arithmetic."""
        cid = check_id(calculus)
        base = exterior.braiding(cid, 1)
        at_point = [[x.specialize(s0) for x in row] for row in base]
        zero, one = GaussianRational(0), GaussianRational(1)
        sigma = at_point if sign == 1 else linalg.inverse(at_point, zero, one)
        return Frame(cid, sign, sigma, Q.specialize(s0), zero, one, label=f"s={s0}")

    def scalar(self, x):
        """Bring an exact scalar into this frame's field."""
        if self.label == "exact" or isinstance(x, int):
            return x
        if isinstance(x, RatFunc):
            return x.specialize(self.s0)
        return x

    @property
    def s0(self) -> Fraction:
        return Fraction(self.label[2:])

    def poly(self, p) -> Poly:
        """A Poly with exact coefficients mapped into this frame's field."""
        p = Poly.lift(p)
        if self.label == "exact":
            return p
        return p.map_coefficients(self.scalar)

    # -- numbers ------------------------------------------------------------
    def lam(self, k: int, sign: int | None = None):
        s = self.sign if sign is None else sign
        x = self.q ** (2 * s)
        one = self.one
        if k <= 1:
            return one
        if k == 2:
            return one + x
        if k == 3:
            return (one + x) * (one + x + x * x)
        raise DegreeError("forms have degree at most 3")

    # -- forms ----------------------------------------------------------------
    def coords(self, k: int, tensor: Sequence, zero=None) -> list:
        """Coordinates of a range tensor in the canonical k-form basis."""
        zero = self.zero if zero is None else zero
        if k <= 1:
            return list(tensor)
        piv, inv = self._inverse[k]
        basis = self.basis[k]
        out = []
        for c in range(len(basis)):
            acc = zero
            for j, r in enumerate(piv):
                if tensor[r] and inv[c][j]:
                    acc = acc + tensor[r] * inv[c][j]
            out.append(acc)
        for i in range(3 ** k):
            acc = zero
            for c in range(len(basis)):
                if basis[c][i] and out[c]:
                    acc = acc + out[c] * basis[c][i]
            if not (acc - tensor[i]) == zero:
                raise ValueError("tensor does not lie in the range of the antisymmetrizer")
        return out

    def tensor(self, k: int, coords: Sequence, zero=None) -> list:
        zero = self.zero if zero is None else zero
        out = [zero] * (3 ** k)
        for c, x in zip(self.basis[k], coords):
            if not x:
                continue
            for i, b in enumerate(c):
                if b:
                    out[i] = out[i] + x * b
        return out

    def wedge(self, x: Sequence, k: int, y: Sequence, l: int, zero=None) -> list:
        """Range tensor of x ^ y = A^(k+l)(x (x) y) / (lambda_k lambda_l)."""
        zero = self.zero if zero is None else zero
        if k + l > 3:
            raise DegreeError("wedge of degree above 3 vanishes identically")
        t = [a * b if a and b else zero for a in x for b in y]
        if k == 0 or l == 0:
            return t
        a = self.anti[k + l]
        scale = self.one / (self.lam(k) * self.lam(l))
        v = linalg.matvec(a, t, zero)
        return [c * scale if c else c for c in v]

    def labelled(self, *labels: int) -> list:
        """Range tensor of w_{a1} ^ ... ^ w_{ak}."""
        e = self.basis[1]
        out, k = [self.one], 0
        for a in labels:
            out = self.wedge(out, k, e[a], 1)
            k += 1
        return out

    def star(self, tensor: Sequence, k: int, zero=None) -> list:
        """Star of a tensor with scalar coefficients: conjugates the
        coefficients, reverses the slots, stars each factor and multiplies
        by (-1)^(k(k-1)/2)."""
        zero = self.zero if zero is None else zero
        out = [zero] * (3 ** k)
        pre = -1 if (k * (k - 1) // 2) % 2 else 1
        for i, c in enumerate(tensor):
            if not c:
                continue
            ds = exterior.digits(i, k)
            sgn = pre
            nd = []
            for a in reversed(ds):
                b, s = _STAR[a]
                nd.append(b)
                sgn *= s
            j = _idx(*nd)
            cc = c.conjugate()
            out[j] = out[j] + (cc if sgn > 0 else -cc)
        return out

    @lru_cache(maxsize=None)
    def star_matrix(self, k: int):
        """st[d][a]: coordinate d of (basis_a)^*."""
        cols = [self.coords(k, self.star(b, k)) for b in self.basis[k]]
        return linalg.transpose(cols)

    @lru_cache(maxsize=None)
    def top_pairing(self, k: int):
        """W[a][c]: theta-coefficient of basis^k_a ^ basis^{3-k}_c."""
        out = []
        for x in self.basis[k]:
            row = []
            for y in self.basis[3 - k]:
                row.append(self.coords(3, self.wedge(x, k, y, 3 - k))[0])
            out.append(row)
        return out

    @lru_cache(maxsize=None)
    def integration_matrix(self, k: int):
        """P[a][c]: theta-coefficient of (basis_a)^* ^ basis^{3-k}_c."""
        st = self.star_matrix(k)
        return linalg.matmul(linalg.transpose(st), self.top_pairing(k), self.zero)

    def volume(self):
        return self.basis[3][0]


# ---------------------------------------------------------------------------
# contractions
# ---------------------------------------------------------------------------


class Contraction:
    """g(w-, w+) = alpha, g(w+, w-) = beta, g(wz, wz) = gamma; every other
    pairing of basis 1-forms vanishes (U(1) invariance)."""

    __slots__ = ("alpha", "beta", "gamma")

    def __init__(self, alpha, beta, gamma):
        self.alpha = Poly.lift(alpha)
        self.beta = Poly.lift(beta)
        self.gamma = Poly.lift(gamma)

    @classmethod
    def symbolic(cls, one=ONE) -> "Contraction":
        return cls(var("alpha", one), var("beta", one), var("gamma", one))

    def matrix(self) -> List[List[Poly]]:
        g = [[Poly() for _ in range(3)] for _ in range(3)]
        g[M][P] = self.alpha
        g[P][M] = self.beta
        g[Z][Z] = self.gamma
        return g

    def is_nondegenerate(self) -> bool:
        return bool(self.alpha * self.beta * self.gamma)

    def substitute(self, values: dict) -> "Contraction":
        return Contraction(*(x.substitute(values) for x in (self.alpha, self.beta, self.gamma)))

    def __repr__(self) -> str:
        return f"Contraction(alpha={self.alpha}, beta={self.beta}, gamma={self.gamma})"


def contract(g: Contraction, x: Sequence, k: int, y: Sequence, n: int) -> List[Poly]:
    """g(x, y) for a k-tensor x and an n-tensor y, n >= k: slot i of x is
    paired with slot i of y, the last n - k slots of y remain."""
    if k > n:
        raise DegreeError("the first argument must not have higher degree")
    gm = g.matrix()
    rest = 3 ** (n - k)
    out = [Poly() for _ in range(rest)]
    for i, xi in enumerate(x):
        if not xi:
            continue
        di = exterior.digits(i, k)
        for j, yj in enumerate(y):
            if not yj:
                continue
            dj = exterior.digits(j, n)
            c = Poly.lift(xi * yj)
            for a, b in zip(di, dj[:k]):
                c = c * gm[a][b]
                if not c:
                    break
            if c:
                r = j % rest
                out[r] = out[r] + c
    return out


def g_theta_theta(frame: Frame, g: Contraction) -> Poly:
    th = frame.volume()
    return contract(g, th, 3, th, 3)[0]


def det_g(frame: Frame, g: Contraction) -> Poly:
    """det g = g(theta, theta) / lambda_3."""
    return g_theta_theta(frame, g) / frame.lam(3)


# ---------------------------------------------------------------------------
# Hodge operators on left-invariant forms
# ---------------------------------------------------------------------------


class HodgeMatrices:
    """Matrices of S (or T) on left-invariant forms of every degree plus the
    matching scalar products, for one frame and contraction."""

    def __init__(self, frame: Frame, g: Contraction, op: str, m=None):
        if op not in OPS:
            raise ValueError("op must be 'S' or 'T'")
        self.frame = frame
        self.g = g
        self.op = op
        self.m = Poly.lift(m) if m is not None else var("m", frame.one)
        self.ops: Dict[int, list] = {}
        self.products: Dict[int, list] = {}
        self._build()

    def _build(self):
        fr, g, m = self.frame, self.g, self.m
        theta = fr.volume()
        mu = [m * c for c in theta]
        # <e_a, e_b> = g(e_a^*, e_b) / lambda_k  (the T product)
        hmat = {}
        for k in range(4):
            rows = []
            for a in fr.basis[k]:
                sa = fr.star(a, k) if k else a
                rows.append([contract(g, sa, k, b, k)[0] / fr.lam(k) for b in fr.basis[k]])
            hmat[k] = rows
        for k in range(4):
            pk = fr.integration_matrix(k)
            if self.op == "S":
                cols = []
                for e in fr.basis[k]:
                    t = contract(g, e, k, mu, 3)
                    t = [c / fr.lam(k, -fr.sign) for c in t]
                    cols.append(fr.coords(3 - k, t, Poly()))
                mat = linalg.transpose(cols)
                self.ops[k] = mat
                # {e_a, e_b} = (1/m) sum_c P[a][c] S[c][b]
                prod = _matmul_mixed(pk, mat)
                self.products[k] = [[_div_m(x, m) for x in row] for row in prod]
            else:
                inv = linalg.inverse(pk, fr.zero, fr.one)
                self.ops[k] = [[x * m for x in row] for row in _matmul_mixed(inv, hmat[k])]
                self.products[k] = hmat[k]

    # -- derived quantities ---------------------------------------------
    def square_on(self, k: int):
        """Matrix of op o op on k-forms."""
        return _matmul_poly(self.ops[3 - k], self.ops[k])

    def square_of_one(self) -> Poly:
        """op^2(1): the theta-coefficient of op(1) times op(theta)."""
        return self.ops[0][0][0] * self.ops[3][0][0]

    def apply(self, k: int, coords: Sequence) -> List[Poly]:
        mat = self.ops[k]
        return [sum((x * Poly.lift(c) for x, c in zip(row, coords) if c), Poly()) for row in mat]

    def pairing(self, k: int, x: Sequence, y: Sequence) -> Poly:
        """Sesquilinear product of two left-invariant k-forms given by
        coordinates (antilinear in x)."""
        mat = self.products[k]
        total = Poly()
        for a, xa in enumerate(x):
            if not xa:
                continue
            xc = Poly.lift(xa).conjugate()
            for b, yb in enumerate(y):
                if yb and mat[a][b]:
                    total = total + xc * mat[a][b] * Poly.lift(yb)
        return total


def _div_m(x: Poly, m: Poly) -> Poly:
    if m.is_constant():
        return x / m.constant()
    return x.divide_monomial(m)


def _matmul_mixed(a, b):
    """Scalar matrix times Poly matrix."""
    rows, inner, cols = len(a), len(b), len(b[0])
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = Poly()
            for t in range(inner):
                if a[i][t] and b[t][j]:
                    acc = acc + Poly.lift(b[t][j]) * a[i][t]
            row.append(acc)
        out.append(row)
    return out


def _matmul_poly(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = Poly()
            for t in range(inner):
                if a[i][t] and b[t][j]:
                    acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def _conj_matrix(a):
    return [[x.conjugate() for x in row] for row in a]


@lru_cache(maxsize=None)
def hodge_matrices(calculus: int, sign: int, op: str) -> HodgeMatrices:
    """Symbolic operator (alpha, beta, gamma, m free) on the exact frame."""
    return HodgeMatrices(Frame.exact(calculus, sign), Contraction.symbolic(), op)


# ---------------------------------------------------------------------------
# signs and normalization
# ---------------------------------------------------------------------------


def _sign_of_scalar(x, samples=SIGN_SAMPLES) -> int:
    """Sign of a real scalar, constant on (0, 1) up to the sample points."""
    if isinstance(x, int):
        return (x > 0) - (x < 0)
    if isinstance(x, GaussianRational):
        if x.im != 0:
            raise IndefiniteSignError("complex number has no sign")
        return (x.re > 0) - (x.re < 0)
    values = []
    for s0 in samples:
        v = x.specialize(s0)
        if v.im != 0:
            raise IndefiniteSignError(f"{x} is not real")
        values.append((v.re > 0) - (v.re < 0))
    if len(set(values)) != 1 or values[0] == 0:
        raise IndefiniteSignError(f"sign of {x} varies on (0, 1)")
    ref = x.specialize(REFERENCE_S)
    return (ref.re > 0) - (ref.re < 0)


def sgn(p, real_symbols=("alpha", "beta", "gamma", "xi", "rho")) -> tuple:
    """Sign of a single-term expression in real symbols: returns
    (sign of the coefficient at q0, sorted tuple of symbols whose sign
    enters an odd number of times)."""
    p = Poly.lift(p)
    if len(p.terms) != 1:
        raise IndefiniteSignError(f"cannot read off a sign of {p}")
    ((key, c),) = p.terms.items()
    odd = []
    for name, e in key:
        if name not in real_symbols:
            raise IndefiniteSignError(f"symbol {name} is not known to be real")
        if e % 2:
            odd.append(name)
    return _sign_of_scalar(c), tuple(sorted(odd))


def format_sign(sign: tuple) -> str:
    s, names = sign
    body = "*".join(f"sgn({n})" for n in names) or "1"
    return body if s > 0 else ("-" + body)


def normalization_value(h: HodgeMatrices) -> Poly:
    """op^2(1) / m^2, so that the normalization op^2(1) = sgn(det g) reads
    m^2 * value = sgn(det g)."""
    return _div_m(_div_m(h.square_of_one(), h.m), h.m)


# ---------------------------------------------------------------------------
# symmetry and reality
# ---------------------------------------------------------------------------


def symmetry_constraints(h: HodgeMatrices) -> List[Poly]:
    """op^2 on 1-forms is a multiple of the identity."""
    sq = h.square_on(1)
    out = []
    for i in range(3):
        for j in range(3):
            if i != j and sq[i][j]:
                out.append(sq[i][j])
    for i in (1, 2):
        d = sq[i][i] - sq[0][0]
        if d:
            out.append(d)
    return out


def reality_constraints(h: HodgeMatrices) -> List[Poly]:
    """op(w^*) = op(w)^* on 1-forms and on 2-forms."""
    fr = h.frame
    st1 = [[Poly.lift(x) for x in row] for row in fr.star_matrix(1)]
    st2 = [[Poly.lift(x) for x in row] for row in fr.star_matrix(2)]
    out = []
    a, b = h.ops[1], h.ops[2]
    for lhs, rhs in (
        (_matmul_poly(a, st1), _matmul_poly(st2, _conj_matrix(a))),
        (_matmul_poly(b, st2), _matmul_poly(st1, _conj_matrix(b))),
    ):
        for r1, r2 in zip(lhs, rhs):
            for x, y in zip(r1, r2):
                d = x - y
                if d:
                    out.append(d)
    return out


def sigma_symmetry_constraints(frame: Frame, g: Contraction) -> List[Poly]:
    """g o sigma = g on left-invariant 2-tensors, plus real coefficients."""
    gm = g.matrix()
    vec = [gm[i // 3][i % 3] for i in range(9)]
    out = []
    for j in range(9):
        acc = Poly()
        for i in range(9):
            if frame.sigma[i][j] and vec[i]:
                acc = acc + vec[i] * frame.sigma[i][j]
        d = acc - vec[j]
        if d:
            out.append(d)
    for name in ("alpha", "beta", "gamma"):
        out.append(var(name, frame.one) - var(name + "*", frame.one))
    return out


def solve_constraints(constraints) -> list:
    return solve_system(conjugate_closure(constraints), PRIORITY)


def symmetry_class(frame: Frame, op: str) -> list:
    """Solution branches of the symmetric-and-real contractions for S or T."""
    h = HodgeMatrices(frame, Contraction.symbolic(frame.one), op)
    return solve_constraints(symmetry_constraints(h) + reality_constraints(h))


def frak_g(frame: Frame) -> list:
    return solve_constraints(sigma_symmetry_constraints(frame, Contraction.symbolic(frame.one)))


class SymmetryClass:
    """Membership of one concrete contraction in G_S, G_T and the
    sigma-symmetric class."""

    __slots__ = ("in_gs", "in_gt", "in_frak_g")

    def __init__(self, in_gs: bool, in_gt: bool, in_frak_g: bool):
        self.in_gs, self.in_gt, self.in_frak_g = in_gs, in_gt, in_frak_g

    def __eq__(self, other) -> bool:
        return isinstance(other, SymmetryClass) and (self.in_gs, self.in_gt, self.in_frak_g) == (
            other.in_gs,
            other.in_gt,
            other.in_frak_g,
        )

    def __repr__(self) -> str:
        return f"SymmetryClass(in_gs={self.in_gs}, in_gt={self.in_gt}, in_frak_g={self.in_frak_g})"


def _values(g: Contraction) -> dict:
    vals = {"alpha": g.alpha, "beta": g.beta, "gamma": g.gamma}
    for k in list(vals):
        vals[k + "*"] = vals[k].conjugate()
    return vals


def classify(g: Contraction, calculus: int, sign: int = 1) -> SymmetryClass:
    """Decide membership by evaluating the exact constraint polynomials."""
    if not g.is_nondegenerate():
        raise ValueError("the contraction is degenerate")
    fr = Frame.exact(calculus, sign)
    vals = _values(g)
    def holds(constraints):
        return all(not c.substitute(vals).terms for c in conjugate_closure(constraints))

    res = []
    for op in OPS:
        h = hodge_matrices(fr.calculus, sign, op)
        res.append(holds(symmetry_constraints(h) + reality_constraints(h)))
    res.append(holds(sigma_symmetry_constraints(fr, Contraction.symbolic())))
    return SymmetryClass(*res)


def frak_g_equals_gs(calculus: int, sign: int = 1) -> bool:
    from .polys import same_solution_set

    fr = Frame.exact(calculus, sign)
    return same_solution_set(frak_g(fr), symmetry_class(fr, "S"))


# ---------------------------------------------------------------------------
# Laplacians
# ---------------------------------------------------------------------------


def laplacian_coefficients(h: HodgeMatrices, det_sign: int) -> List[List[Poly]]:
    """c[a][b] = sgn(det g) * <w_a^*, w_b> for the product attached to op."""
    fr = h.frame
    st1 = fr.star_matrix(1)
    out = []
    for a in range(3):
        col = [st1[d][a] for d in range(3)]  # coordinates of w_a^*
        row = []
        for b in range(3):
            e_b = [fr.one if i == b else fr.zero for i in range(3)]
            row.append(h.pairing(1, col, e_b) * det_sign)
        out.append(row)
    return out


def laplacian(coefficients, calculus: int, x: AlgebraElement) -> AlgebraElement:
    """sum_ab c[a][b] X_a X_b |> x for scalar coefficients c."""
    basis = tangent_space(calculus).basis
    x = alg.element(x)
    out = AlgebraElement()
    for b in range(3):
        xb = act_left(basis[b], x)
        if not xb:
            continue
        for a in range(3):
            c = coefficients[a][b]
            if c:
                out = out + act_left(basis[a], xb).scale(c)
    return out


def scalar_coefficients(coefficients, values: dict):
    """Evaluate Poly coefficients at concrete contraction values."""
    out = []
    for row in coefficients:
        r = []
        for c in row:
            v = Poly.lift(c).substitute(values)
            if not v.is_constant():
                raise ValueError(f"coefficient {v} still depends on symbols")
            r.append(v.constant() if v.terms else ZERO)
        out.append(r)
    return out


# ---------------------------------------------------------------------------
# comparing the two braidings
# ---------------------------------------------------------------------------
#
# The exterior algebras of sigma and sigma^-1 have the same range tensors in
# every degree, so forms are identified as tensors; theta_- = q^-6 theta_+.


class Relation:
    """Outcome of one identity between the sigma and sigma^-1 data."""

    __slots__ = ("name", "holds", "witness")

    def __init__(self, name: str, holds: bool, witness: str):
        self.name, self.holds, self.witness = name, holds, witness

    def __repr__(self) -> str:
        return f"Relation({self.name!r}, holds={self.holds}, witness={self.witness!r})"


def _lam_ratio(frame: Frame, k: int):
    """lambda^-_(k) / lambda^+_(k)."""
    return frame.lam(k, -1) / frame.lam(k, 1)


def positive_root(x):
    """The square root of x that is positive at the reference point."""
    r = x.sqrt()
    if isinstance(r, RatFunc):
        v = r.specialize(REFERENCE_S)
        return r if v.re > 0 else -r
    return r if r.re > 0 else -r


def scale_ratio_squared(calculus: int, op: str):
    """(m_-/m_+)^2 forced by the normalization op^2(1) = sgn(det g)."""
    plus = hodge_matrices(calculus, 1, op)
    minus = hodge_matrices(calculus, -1, op)
    return poly_ratio(normalization_value(plus), normalization_value(minus))


@lru_cache(maxsize=None)
def transition(calculus: int, k: int):
    """C[d][c]: coordinate d, in the sigma^-1 basis, of sigma basis form c."""
    fp, fm = Frame.exact(calculus, 1), Frame.exact(calculus, -1)
    return linalg.transpose([fm.coords(k, t) for t in fp.basis[k]])


def _unit(n: int, i: int):
    return [ONE if j == i else ZERO for j in range(n)]


def _tensor_poly(frame: Frame, k: int, coords) -> List[Poly]:
    return frame.tensor(k, [Poly.lift(c) for c in coords], Poly())


def _operators_agree(calculus: int, op: str, ratio, factors: dict) -> List[str]:
    """Compare op_{sigma^-1}(t) with factor_k * op_sigma(t) on every basis
    tensor t, taking m_- = ratio * m_+; returns the failing degrees."""
    fp, fm = Frame.exact(calculus, 1), Frame.exact(calculus, -1)
    g = Contraction.symbolic()
    m = var("m")
    hp = HodgeMatrices(fp, g, op, m)
    hm = HodgeMatrices(fm, g, op, m * ratio)
    bad = []
    for k in range(4):
        cmat = transition(calculus, k) if k >= 2 else linalg.identity(DIMS[k], ZERO, ONE)
        ok = True
        for c in range(DIMS[k]):
            e = _unit(DIMS[k], c)
            lhs = _tensor_poly(fm, 3 - k, hm.apply(k, [cmat[d][c] for d in range(DIMS[k])]))
            rhs = _tensor_poly(fp, 3 - k, hp.apply(k, e))
            if any(x != y * factors[k] for x, y in zip(lhs, rhs)):
                ok = False
        if not ok:
            bad.append(k)
    return bad


def _products_agree(calculus: int, op: str, factors: dict) -> List[str]:
    """Compare the sigma^-1 product of two tensors with factor_k times the
    sigma product; returns the failing degrees among those in factors."""
    hp, hm = hodge_matrices(calculus, 1, op), hodge_matrices(calculus, -1, op)
    bad = []
    for k, factor in sorted(factors.items()):
        cmat = transition(calculus, k) if k >= 2 else linalg.identity(DIMS[k], ZERO, ONE)
        cols = [[cmat[d][c] for d in range(DIMS[k])] for c in range(DIMS[k])]
        for a in range(DIMS[k]):
            for b in range(DIMS[k]):
                lhs = hm.pairing(k, cols[a], cols[b])
                rhs = hp.products[k][a][b] * factor
                if lhs != rhs:
                    bad.append(k)
                    break
            else:
                continue
            break
    return bad


def _verdict(name: str, bad: list, what: str) -> Relation:
    if bad:
        return Relation(name, False, f"{what} fails in degrees {bad}")
    return Relation(name, True, what)


def bridge_relations(calculus: int) -> List[Relation]:
    """Every identity relating the sigma and sigma^-1 operators, products and
    scale factors for one calculus, decided symbolically."""
    cid = check_id(calculus)
    fp, fm = Frame.exact(cid, 1), Frame.exact(cid, -1)
    l2, l3 = _lam_ratio(fp, 2), _lam_ratio(fp, 3)
    out = []

    s_sq = scale_ratio_squared(cid, "S")
    s_ratio = positive_root(s_sq)
    bad = _operators_agree(cid, "S", s_ratio, {0: s_ratio * l3, 1: s_ratio * l3, 2: s_ratio * l2 * l3, 3: s_ratio * l3 * l3})
    out.append(_verdict("S_minus_vs_S_plus", bad, f"S_-(w) vs S_+(w) with m_-/m_+ = {s_ratio}"))
    want = (ONE / l3) ** 3
    out.append(Relation("scale_ratio_S", s_sq == want, f"(m_-/m_+)^2 = {s_sq}, expected {want}"))

    bad = _products_agree(cid, "S", {1: l3 / l2, 2: l3, 3: l3})
    out.append(_verdict("S_products_minus_vs_plus", bad, "{,}_- vs {,}_+"))

    bad = _products_agree(cid, "T", {2: l2 ** 3, 3: l3 ** 3})
    out.append(_verdict("T_products_cubic_ratio", bad, "<,>_- = (lambda^-/lambda^+)^3 <,>_+"))

    t_sq = scale_ratio_squared(cid, "T")
    t_ratio = positive_root(t_sq)
    out.append(Relation("scale_ratio_T", t_sq == ONE / l3, f"lambda^-_3 m_-^2 = lambda^+_3 m_+^2 needs {ONE / l3}, got {t_sq}"))
    bad = _operators_agree(cid, "T", t_ratio, {0: t_ratio * l3, 1: t_ratio * l2, 2: t_ratio, 3: t_ratio})
    out.append(_verdict("T_minus_vs_T_plus", bad, f"T_-(w) vs T_+(w) with m_-/m_+ = {t_ratio}"))

    ok, notes = True, []
    g = Contraction.symbolic()
    for fr in (fp, fm):
        hs = hodge_matrices(cid, fr.sign, "S")
        ht = hodge_matrices(cid, fr.sign, "T")
        gtt = g_theta_theta(fr, g)
        curly, angle = hs.products[3][0][0], ht.products[3][0][0]
        ratio = fr.lam(3, fr.sign) / fr.lam(3, -fr.sign)
        if curly != gtt / fr.lam(3, -fr.sign) or curly != angle * ratio:
            ok = False
            notes.append(f"sign {fr.sign}")
    out.append(Relation("volume_products", ok, "{theta,theta} = g(theta,theta)/lambda^-+_3 = (lambda^+-_3/lambda^-+_3)<theta,theta>" + (" fails for " + ", ".join(notes) if notes else "")))

    out.append(_product_pattern_relation(cid))
    return out


def _product_pattern_relation(calculus: int) -> Relation:
    """Normalized higher S products for sigma^-1 equal lambda^-/lambda^+
    times those for sigma, pair by pair and on the volume."""
    fp, fm = Frame.exact(calculus, 1), Frame.exact(calculus, -1)
    hp, hm = hodge_matrices(calculus, 1, "S"), hodge_matrices(calculus, -1, "S")
    bp = [hp.products[1][a][a] for a in range(3)]
    bm = [hm.products[1][a][a] for a in range(3)]
    failures = []
    for a, b in ((M, P), (M, Z), (P, Z)):
        xp = fp.coords(2, fp.labelled(a, b))
        xm = fm.coords(2, fm.labelled(a, b))
        lhs = hm.pairing(2, xm, xm) * bp[a] * bp[b]
        rhs = hp.pairing(2, xp, xp) * bm[a] * bm[b] * _lam_ratio(fp, 2)
        if lhs != rhs:
            failures.append(f"w{'-+z'[a]}^w{'-+z'[b]}")
    lhs = hm.products[3][0][0] * bp[0] * bp[1] * bp[2]
    rhs = hp.products[3][0][0] * bm[0] * bm[1] * bm[2] * _lam_ratio(fp, 3)
    if lhs != rhs:
        failures.append("theta")
    return Relation(
        "normalized_product_ratios",
        not failures,
        "ratios of higher to first-order S products" + (" fail on " + ", ".join(failures) if failures else ""),
    )


def pattern_relation(calculus: int, sign: int = 1) -> Relation:
    """Replacing each first-order T product <w_a, w_a> by the S product
    {w_a, w_a} turns the T products and operators into the S ones."""
    ht = hodge_matrices(calculus, sign, "T")
    hs = hodge_matrices(calculus, sign, "S")
    # <w-,w-> = -beta, <w+,w+> = -alpha, <wz,wz> = -gamma
    swap = {
        "beta": -hs.products[1][M][M],
        "alpha": -hs.products[1][P][P],
        "gamma": -hs.products[1][Z][Z],
    }
    failures = []
    for label, tmat, smat in (
        [(f"products[{k}]", ht.products[k], hs.products[k]) for k in range(4)]
        + [(f"ops[{k}]", ht.ops[k], hs.ops[k]) for k in range(4)]
    ):
        for trow, srow in zip(tmat, smat):
            if any(Poly.lift(t).substitute(swap) != s for t, s in zip(trow, srow)):
                failures.append(label)
                break
    return Relation(
        "product_pattern",
        not failures,
        "T data with <,> replaced by {,} equals S data" + (" except " + ", ".join(failures) if failures else ""),
    )


def operator_matrix(coefficients, calculus: int, elements: Sequence[AlgebraElement]):
    """Matrix (M[out][in]) of x -> laplacian(x) on the span of elements;
    raises ValueError when an image leaves that span."""
    elements = [alg.element(e) for e in elements]
    monos = sorted({m for e in elements for m in e.terms})
    def vec(x):
        extra = set(x.terms) - set(monos)
        if extra:
            raise ValueError("image leaves the span of the given elements")
        return [x.terms.get(m, ZERO) for m in monos]

    basis = linalg.transpose([vec(e) for e in elements])
    cols = [linalg.solve(basis, vec(laplacian(coefficients, calculus, e)), ZERO) for e in elements]
    return linalg.transpose(cols)


def _sturm_real_roots(coeffs: List[Fraction]) -> int:
    """Number of distinct real roots of a real polynomial (ascending
    coefficients), by a Sturm sequence evaluated at +-infinity."""
    def trim(p):
        while p and p[-1] == 0:
            p = p[:-1]
        return p

    def rem(a, b):
        a = list(a)
        while len(a) >= len(b):
            f = a[-1] / b[-1]
            shift = len(a) - len(b)
            for i, c in enumerate(b):
                a[i + shift] -= f * c
            a = trim(a[:-1])
        return a

    p = trim([Fraction(c) for c in coeffs])
    dp = trim([c * i for i, c in enumerate(p)][1:])
    seq = [p, dp]
    while seq[-1] and len(seq[-1]) > 1:
        r = rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])

    def changes(signs):
        signs = [s for s in signs if s]
        return sum(1 for x, y in zip(signs, signs[1:]) if x != y)

    at_pos = [(q[-1] > 0) - (q[-1] < 0) for q in seq if q]
    at_neg = [((q[-1] > 0) - (q[-1] < 0)) * (-1 if (len(q) - 1) % 2 else 1) for q in seq if q]
    return changes(at_neg) - changes(at_pos)


def has_nonreal_eigenvalue(matrix) -> bool:
    """Exact test on a Gaussian-rational matrix: a non-real coefficient of
    the characteristic polynomial, or fewer real roots than its degree
    counted without multiplicity after removing repeated factors."""
    zero, one = GaussianRational(0), GaussianRational(1)
    cp = linalg.charpoly(matrix, zero, one)
    if any(c.im != 0 for c in cp):
        return True
    real = [Fraction(int(c.re.numerator), int(c.re.denominator)) for c in cp]
    # distinct roots: degree of p / gcd(p, p')
    distinct = len(cp) - 1 - _gcd_degree(real)
    return _sturm_real_roots(real) < distinct


def _gcd_degree(p: List[Fraction]) -> int:
    a = list(p)
    b = [c * i for i, c in enumerate(p)][1:]
    def trim(x):
        while x and x[-1] == 0:
            x = x[:-1]
        return x
    a, b = trim(a), trim(b)
    while b:
        r = list(a)
        while len(r) >= len(b) and r:
            f = r[-1] / b[-1]
            shift = len(r) - len(b)
            for i, c in enumerate(b):
                r[i + shift] -= f * c
            r = trim(r[:-1])
        a, b = b, r
    return len(a) - 1


def laplacian_spectrum(calculus: int, op: str, branch: dict, q0, elements, sign: int = 1):
    """Matrix of the Laplacian (for a contraction given by a solution branch
    with every free symbol set to 1) on span(elements), specialized at q0."""
    h = hodge_matrices(calculus, sign, op)
    free = {n for v in branch.values() for n in Poly.lift(v).variables()}
    ones = {n: Poly.lift(1) for n in free}
    values = {k: Poly.lift(v).substitute(ones) for k, v in branch.items()}
    values.update({n: v for n, v in ones.items() if n not in values})
    g = Contraction.symbolic().substitute(values)
    det_sign = sgn(det_g(Frame.exact(calculus, sign), g))[0]
    coeffs = scalar_coefficients(laplacian_coefficients(h, det_sign), values)
    mat = operator_matrix(coeffs, calculus, elements)
    return [[x.specialize_q(q0) for x in row] for row in mat]
