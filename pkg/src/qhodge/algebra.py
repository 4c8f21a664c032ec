"""The coordinate *-Hopf algebra A(SU_q(2)).

Generators a, c with u = [[a, -q c*], [c, a*]] unitary.  Writing out
u u* = u* u = 1 entrywise gives the normal-ordering rules used here::

    a c  = q c a          a c* = q c* a         c c* = c* c
    a* c = q^-1 c a*      a* c* = q^-1 c* a*
    a a* = 1 - q^2 c c*   a* a = 1 - c c*

The off-diagonal entries of u u* = 1 and u* u = 1 give the q-commutations,
the diagonal ones the last line (derivation in the README).

Normal form: a^k c^m c*^n (k >= 0) or a*^k c^m c*^n (k > 0), stored as the
key (k, m, n) with negative k meaning powers of a*.
"""

from __future__ import annotations

import random
import re
from functools import lru_cache
from typing import Dict, Tuple

from .scalars import ONE, ZERO, RatFunc, as_ratfunc, parse_ratfunc, q_power

Monomial = Tuple[int, int, int]

UNIT: Monomial = (0, 0, 0)


def _qp(k: int) -> RatFunc:
    return _qpow_cache(k)


@lru_cache(maxsize=None)
def _qpow_cache(k: int) -> RatFunc:
    return q_power(k)


def _accumulate(target: dict, key, coef: RatFunc) -> None:
    if key in target:
        v = target[key] + coef
        if v:
            target[key] = v
        else:
            del target[key]
    elif coef:
        target[key] = coef


class AlgebraElement:
    """Finite RatFunc-linear combination of normal-ordered monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Monomial, RatFunc] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def _raw(cls, terms: dict) -> "AlgebraElement":
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def scalar(cls, c) -> "AlgebraElement":
        c = as_ratfunc(c)
        return cls._raw({UNIT: c} if c else {})

    @classmethod
    def monomial(cls, mono: Monomial, coef=ONE) -> "AlgebraElement":
        coef = as_ratfunc(coef)
        return cls._raw({mono: coef} if coef else {})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            try:
                other = AlgebraElement.scalar(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement._raw({k: -v for k, v in self.terms.items()})

    def __add__(self, other) -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            other = AlgebraElement.scalar(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            _accumulate(out, k, v)
        return AlgebraElement._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            other = AlgebraElement.scalar(other)
        return self + (-other)

    def __rsub__(self, other) -> "AlgebraElement":
        return AlgebraElement.scalar(other) - self

    def scale(self, c) -> "AlgebraElement":
        c = as_ratfunc(c)
        if not c:
            return AlgebraElement._raw({})
        return AlgebraElement._raw({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other) -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c12 = c1 * c2
                for m, c in mono_mul(m1, m2).items():
                    _accumulate(out, m, c12 * c if not c.is_one() else c12)
        return AlgebraElement._raw(out)

    def __rmul__(self, other) -> "AlgebraElement":
        return self.scale(other)

    def __pow__(self, n: int) -> "AlgebraElement":
        result = AlgebraElement.scalar(ONE)
        for _ in range(n):
            result = result * self
        return result

    def coefficient(self, mono: Monomial) -> RatFunc:
        return self.terms.get(mono, ZERO)

    def star(self) -> "AlgebraElement":
        return star(self)

    def __repr__(self) -> str:
        return f"AlgebraElement({self})"

    def __str__(self) -> str:
        return format_element(self)


# ---------------------------------------------------------------------------
# normal-ordered multiplication
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _times_a(mono: Monomial) -> Tuple[Tuple[Monomial, RatFunc], ...]:
    """mono * a in normal form."""
    k, m, n = mono
    f = _qp(-(m + n))
    if k >= 0:
        return (((k + 1, m, n), f),)
    # a*^|k| a = a*^(|k|-1) (1 - c c*)
    return (((k + 1, m, n), f), ((k + 1, m + 1, n + 1), -f))


@lru_cache(maxsize=None)
def _times_astar(mono: Monomial) -> Tuple[Tuple[Monomial, RatFunc], ...]:
    """mono * a* in normal form."""
    k, m, n = mono
    f = _qp(m + n)
    if k <= 0:
        return (((k - 1, m, n), f),)
    # a^k a* = a^(k-1) (1 - q^2 c c*)
    return (((k - 1, m, n), f), ((k - 1, m + 1, n + 1), -f * _qp(2)))


@lru_cache(maxsize=None)
def mono_mul(m1: Monomial, m2: Monomial) -> Dict[Monomial, RatFunc]:
    """Product of two normal monomials as a normal-form dictionary."""
    k2, mc, nc = m2
    current: Dict[Monomial, RatFunc] = {m1: ONE}
    step = _times_a if k2 > 0 else _times_astar
    for _ in range(abs(k2)):
        nxt: dict = {}
        for mono, coef in current.items():
            for mm, f in step(mono):
                _accumulate(nxt, mm, coef * f)
        current = nxt
    if mc or nc:
        current = {(k, m + mc, n + nc): v for (k, m, n), v in current.items()}
    return current


# ---------------------------------------------------------------------------
# generators and Hopf structure
# ---------------------------------------------------------------------------

ONE_ELEMENT = AlgebraElement.monomial(UNIT)
A = AlgebraElement.monomial((1, 0, 0))
A_STAR = AlgebraElement.monomial((-1, 0, 0))
C = AlgebraElement.monomial((0, 1, 0))
C_STAR = AlgebraElement.monomial((0, 0, 1))
GENERATORS = {"a": A, "as": A_STAR, "c": C, "cs": C_STAR}


def element(x) -> AlgebraElement:
    if isinstance(x, AlgebraElement):
        return x
    return AlgebraElement.scalar(x)


def mono_element(mono: Monomial) -> AlgebraElement:
    return AlgebraElement.monomial(mono)


def generator_word(mono: Monomial):
    """The normal monomial as a list of generator names (left to right)."""
    k, m, n = mono
    head = ["a"] * k if k >= 0 else ["as"] * (-k)
    return head + ["c"] * m + ["cs"] * n


def split_first(mono: Monomial):
    """Write mono = g * rest with g a generator and rest normal, with no
    reordering needed.  Returns (generator name, rest)."""
    k, m, n = mono
    if k > 0:
        return "a", (k - 1, m, n)
    if k < 0:
        return "as", (k + 1, m, n)
    if m > 0:
        return "c", (0, m - 1, n)
    if n > 0:
        return "cs", (0, 0, n - 1)
    raise ValueError("the unit has no first generator")


def counit(x: AlgebraElement) -> RatFunc:
    total = ZERO
    for (k, m, n), v in x.terms.items():
        if m == 0 and n == 0:
            total = total + v
    return total


def star(x: AlgebraElement) -> AlgebraElement:
    """Antilinear antihomomorphism with a <-> a*, c <-> c*."""
    out = AlgebraElement._raw({})
    for mono, v in x.terms.items():
        out = out + _star_mono(mono).scale(v.conjugate())
    return out


@lru_cache(maxsize=None)
def _star_mono(mono: Monomial) -> AlgebraElement:
    k, m, n = mono
    # (a^k c^m c*^n)* = c^n c*^m (a*)^k
    left = AlgebraElement.monomial((0, n, m))
    right = AlgebraElement.monomial((-k, 0, 0))
    return left * right


_ANTIPODE_GEN = None


def _antipode_generators():
    global _ANTIPODE_GEN
    if _ANTIPODE_GEN is None:
        q = _qp(1)
        _ANTIPODE_GEN = {
            "a": A_STAR,
            "as": A,
            "c": C.scale(-q),
            "cs": C_STAR.scale(-q.inverse()),
        }
    return _ANTIPODE_GEN


@lru_cache(maxsize=None)
def _antipode_mono(mono: Monomial) -> AlgebraElement:
    gens = _antipode_generators()
    out = ONE_ELEMENT
    for g in reversed(generator_word(mono)):
        out = out * gens[g]
    return out


def antipode(x: AlgebraElement) -> AlgebraElement:
    """Algebra antihomomorphism with S(u) = u*: S(a) = a*, S(a*) = a,
    S(c) = -q c, S(c*) = -q^-1 c*."""
    out = AlgebraElement._raw({})
    for mono, v in x.terms.items():
        out = out + _antipode_mono(mono).scale(v)
    return out


def haar(x: AlgebraElement) -> RatFunc:
    """h(a^k c^m c*^n) = 0 unless k = 0 and m = n; h((c c*)^n) =
    (1 - q^2) / (1 - q^(2n+2))."""
    total = ZERO
    for (k, m, n), v in x.terms.items():
        if k == 0 and m == n:
            total = total + v * _haar_power(m)
    return total


@lru_cache(maxsize=None)
def _haar_power(n: int) -> RatFunc:
    return (ONE - _qp(2)) / (ONE - _qp(2 * (n + 1)))


def line_bundle_degree(x: AlgebraElement):
    """n with delta_R(x) = x (x) z^-n, or "mixed"; the zero element has
    degree 0 by convention."""
    degrees = {mono_degree(m) for m in x.terms}
    if not degrees:
        return 0
    if len(degrees) == 1:
        return degrees.pop()
    return "mixed"


def mono_degree(mono: Monomial) -> int:
    k, m, n = mono
    return -k - m + n


def total_degree(mono: Monomial) -> int:
    k, m, n = mono
    return abs(k) + m + n


def u1_project(x: AlgebraElement) -> Dict[int, RatFunc]:
    """pi(a) = z, pi(a*) = z^-1, pi(c) = pi(c*) = 0, as {power of z: coef}."""
    out: dict = {}
    for (k, m, n), v in x.terms.items():
        if m == 0 and n == 0:
            _accumulate(out, k, v)
    return out


# ---------------------------------------------------------------------------
# tensors and the coproduct
# ---------------------------------------------------------------------------


class TensorElement:
    """Element of A (x) A as {(mono, mono): coef}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorElement) and self.terms == other.terms

    def __add__(self, other: "TensorElement") -> "TensorElement":
        out = dict(self.terms)
        for k, v in other.terms.items():
            _accumulate(out, k, v)
        t = TensorElement()
        t.terms = out
        return t

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + other.scale(-ONE)

    def scale(self, c) -> "TensorElement":
        c = as_ratfunc(c)
        t = TensorElement()
        t.terms = {k: v * c for k, v in self.terms.items()} if c else {}
        return t

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        out: dict = {}
        for (l1, r1), c1 in self.terms.items():
            for (l2, r2), c2 in other.terms.items():
                c12 = c1 * c2
                left = mono_mul(l1, l2)
                right = mono_mul(r1, r2)
                for ml, cl in left.items():
                    for mr, cr in right.items():
                        _accumulate(out, (ml, mr), c12 * cl * cr)
        t = TensorElement()
        t.terms = out
        return t

    @staticmethod
    def pure(x: AlgebraElement, y: AlgebraElement) -> "TensorElement":
        t = TensorElement()
        t.terms = {}
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                _accumulate(t.terms, (m1, m2), c1 * c2)
        return t

    def map(self, left, right) -> "TensorElement":
        """Apply linear maps (AlgebraElement -> AlgebraElement) slotwise."""
        out = TensorElement()
        for (l, r), c in self.terms.items():
            out = out + TensorElement.pure(left(mono_element(l)), right(mono_element(r))).scale(c)
        return out

    def multiply_out(self) -> AlgebraElement:
        out: dict = {}
        for (l, r), c in self.terms.items():
            for m, v in mono_mul(l, r).items():
                _accumulate(out, m, c * v)
        return AlgebraElement._raw(out)

    def __repr__(self) -> str:
        return " + ".join(
            f"({c})*[{format_monomial(l)} (x) {format_monomial(r)}]" for (l, r), c in sorted(self.terms.items())
        ) or "0"


_GEN_COPRODUCTS = None


def _generator_coproducts():
    global _GEN_COPRODUCTS
    if _GEN_COPRODUCTS is None:
        q = _qp(1)
        tp = TensorElement.pure
        _GEN_COPRODUCTS = {
            "a": tp(A, A) - tp(C_STAR, C).scale(q),
            "c": tp(C, A) + tp(A_STAR, C),
            "as": tp(A_STAR, A_STAR) - tp(C, C_STAR).scale(q),
            "cs": tp(C_STAR, A_STAR) + tp(A, C_STAR),
        }
    return _GEN_COPRODUCTS


@lru_cache(maxsize=None)
def _coproduct_mono(mono: Monomial) -> TensorElement:
    if mono == UNIT:
        return TensorElement({(UNIT, UNIT): ONE})
    g, rest = split_first(mono)
    return _generator_coproducts()[g] * _coproduct_mono(rest)


def coproduct(x: AlgebraElement) -> TensorElement:
    """Algebra map with Delta u = u (x) u."""
    out = TensorElement()
    for mono, c in x.terms.items():
        out = out + _coproduct_mono(mono).scale(c)
    return out


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------


def format_monomial(mono: Monomial) -> str:
    k, m, n = mono
    parts = []
    if k > 0:
        parts.append("a" if k == 1 else f"a^{k}")
    elif k < 0:
        parts.append("as" if k == -1 else f"as^{-k}")
    if m:
        parts.append("c" if m == 1 else f"c^{m}")
    if n:
        parts.append("cs" if n == 1 else f"cs^{n}")
    return " ".join(parts) if parts else "1"


def format_element(x: AlgebraElement) -> str:
    if not x.terms:
        return "0"
    return " + ".join(f"({x.terms[m]}) * {format_monomial(m)}" for m in sorted(x.terms))


_MONO_TOKEN = re.compile(r"(as|a|cs|c)(?:\^(\d+))?$")


def parse_monomial(text: str) -> Monomial:
    text = text.strip()
    if text == "1":
        return UNIT
    k = m = n = 0
    for tok in text.split():
        mt = _MONO_TOKEN.match(tok)
        if not mt:
            raise ValueError(f"bad monomial token {tok!r}")
        e = int(mt.group(2) or 1)
        name = mt.group(1)
        if name == "a":
            k += e
        elif name == "as":
            k -= e
        elif name == "c":
            m += e
        else:
            n += e
    return (k, m, n)


def parse_element(text: str) -> AlgebraElement:
    """Inverse of format_element."""
    text = text.strip()
    if text == "0":
        return AlgebraElement()
    out: dict = {}
    i = 0
    while i < len(text):
        if text[i] != "(":
            raise ValueError(f"expected '(' at {i} in {text!r}")
        depth, j = 0, i
        while True:
            if text[j] == "(":
                depth += 1
            elif text[j] == ")":
                depth -= 1
                if depth == 0:
                    break
            j += 1
        coef = parse_ratfunc(text[i + 1 : j])
        rest = text[j + 1 :]
        mstar = re.match(r"\s*\*\s*([a-z0-9^ ]+?)\s*(\+\s*(?=\()|$)", rest)
        if not mstar:
            raise ValueError(f"bad term near {rest!r}")
        _accumulate(out, parse_monomial(mstar.group(1)), coef)
        i = j + 1 + mstar.end()
    return AlgebraElement._raw(out)


# ---------------------------------------------------------------------------
# random sampling (tests and cross-checks)
# ---------------------------------------------------------------------------


def monomials_up_to(degree: int):
    """All normal monomials of total degree <= degree."""
    out = []
    for d in range(degree + 1):
        for kk in range(d + 1):
            for m in range(d - kk + 1):
                n = d - kk - m
                out.append((kk, m, n))
                if kk:
                    out.append((-kk, m, n))
    return sorted(set(out))


def random_element(rng: random.Random, degree: int = 2, terms: int = 3) -> AlgebraElement:
    pool = monomials_up_to(degree)
    out: dict = {}
    for _ in range(terms):
        mono = rng.choice(pool)
        coef = as_ratfunc(rng.randint(-3, 3)) * _qp(rng.randint(-1, 1))
        _accumulate(out, mono, coef)
    return AlgebraElement._raw(out)
