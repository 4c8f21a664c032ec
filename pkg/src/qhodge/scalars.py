"""Exact arithmetic in Q(i)(s), the field of rational functions in s = q^(1/2)
with Gaussian-rational coefficients.

Three value types live here:

* ``GaussianRational``: a + b i with a, b rational (gmpy2 ``mpq``).
* ``LaurentPoly``: finite sums of c_k s^k, k in Z.
* ``RatFunc``: num / den in canonical form.  The denominator is an ordinary
  polynomial with nonzero constant term, monic, and coprime to the numerator,
  so two equal field elements always have identical representations.

All values are immutable.
"""

from __future__ import annotations

import re
from fractions import Fraction

from gmpy2 import mpq, is_square, isqrt

__all__ = [
    "GaussianRational",
    "LaurentPoly",
    "RatFunc",
    "ScalarError",
    "PoleError",
    "DomainError",
    "NotASquareError",
    "I",
    "ONE",
    "ZERO",
    "S",
    "Q",
    "as_ratfunc",
    "parse_ratfunc",
    "parse_gaussian",
    "q_power",
    "qint",
]

_Z = mpq(0)
_ONE_Q = mpq(1)


class ScalarError(ArithmeticError):
    """Base class for scalar-field errors."""


class PoleError(ScalarError):
    """Raised when a rational function is evaluated at a pole."""


class DomainError(ScalarError):
    """Raised when a specialization point is outside the allowed domain."""


class NotASquareError(ScalarError):
    """Raised by exact square roots of non-squares."""


def _mpq(x) -> mpq:
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


class GaussianRational:
    """An exact complex number with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _mpq(re))
        object.__setattr__(self, "im", _mpq(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def _raw(cls, re: mpq, im: mpq) -> "GaussianRational":
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    @staticmethod
    def coerce(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex numbers are not exact")
        if isinstance(x, float):
            raise TypeError("floats are not exact")
        return GaussianRational._raw(_mpq(x), _Z)

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)) or type(other).__name__ == "mpq":
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __add__(self, other):
        o = _co(other)
        if o is None:
            return NotImplemented
        return GaussianRational._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _co(other)
        if o is None:
            return NotImplemented
        return GaussianRational._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _co(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _co(other)
        if o is None:
            return NotImplemented
        if self.im == 0:
            if o.im == 0:
                return GaussianRational._raw(self.re * o.re, _Z)
            return GaussianRational._raw(self.re * o.re, self.re * o.im)
        if o.im == 0:
            return GaussianRational._raw(self.re * o.re, self.im * o.re)
        return GaussianRational._raw(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def norm2(self) -> mpq:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        if not self:
            raise ZeroDivisionError("division by zero Gaussian rational")
        if self.im == 0:
            return GaussianRational._raw(1 / self.re, _Z)
        n = self.norm2()
        return GaussianRational._raw(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = _co(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _co(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = GaussianRational._raw(_ONE_Q, _Z)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def sqrt(self) -> "GaussianRational":
        """Exact square root; the root with positive real part (or positive
        imaginary part when purely imaginary) is returned."""
        if not self:
            return self
        if self.im == 0:
            if self.re > 0:
                return GaussianRational._raw(_rational_sqrt(self.re), _Z)
            return GaussianRational._raw(_Z, _rational_sqrt(-self.re))
        # (x + iy)^2 = re + i im  ->  x^2 = (|z| + re)/2
        modulus = _rational_sqrt(self.norm2())
        x = _rational_sqrt((modulus + self.re) / 2)
        y = self.im / (2 * x)
        return GaussianRational._raw(x, y)

    def __repr__(self) -> str:
        return f"GaussianRational({self})"

    def __str__(self) -> str:
        if self.im == 0:
            return _fmt_q(self.re)
        im = _fmt_q(abs(self.im)) + "*i"
        if self.re == 0:
            return ("-" if self.im < 0 else "") + im
        return _fmt_q(self.re) + ("-" if self.im < 0 else "+") + im

    def to_fraction(self) -> Fraction:
        if self.im != 0:
            raise ValueError("not a real number")
        return Fraction(int(self.re.numerator), int(self.re.denominator))


def _co(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)) or type(x).__name__ == "mpq":
        return GaussianRational._raw(_mpq(x), _Z)
    return None


def _rational_sqrt(x: mpq) -> mpq:
    if x < 0:
        raise NotASquareError(f"{x} is negative")
    n, d = x.numerator, x.denominator
    if not (is_square(n) and is_square(d)):
        raise NotASquareError(f"{x} is not a rational square")
    return mpq(isqrt(n), isqrt(d))


def _fmt_q(x: mpq) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


_G0 = GaussianRational._raw(_Z, _Z)
_G1 = GaussianRational._raw(_ONE_Q, _Z)
I = GaussianRational._raw(_Z, _ONE_Q)

_GAUSS_RE = re.compile(
    r"^\s*(?P<re>[+-]?\d+(?:/\d+)?)?\s*(?:(?P<sign>[+-])?\s*(?P<im>\d+(?:/\d+)?)?\s*\*?\s*i)?\s*$"
)

_PURE_IMAG_RE = re.compile(r"^\s*(?P<sign>[+-])?\s*(?P<im>\d+(?:/\d+)?)?\s*\*?\s*i\s*$")


def parse_gaussian(text: str) -> GaussianRational:
    """Parse the "a/b+c/d*i" notation (either part may be omitted)."""
    pure = _PURE_IMAG_RE.match(text)
    if pure:
        im_part = mpq(pure.group("im")) if pure.group("im") else _ONE_Q
        return GaussianRational._raw(_Z, -im_part if pure.group("sign") == "-" else im_part)
    m = _GAUSS_RE.match(text)
    if not m or (m.group("re") is None and "i" not in text):
        raise ValueError(f"not a Gaussian rational: {text!r}")
    re_part = mpq(m.group("re")) if m.group("re") else _Z
    im_part = _Z
    if "i" in text:
        im_part = mpq(m.group("im")) if m.group("im") else _ONE_Q
        if m.group("sign") == "-":
            im_part = -im_part
    return GaussianRational._raw(re_part, im_part)


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------


class LaurentPoly:
    """Finite sum of GaussianRational multiples of s^k, k in Z."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, c in terms.items():
                c = GaussianRational.coerce(c)
                if c:
                    clean[int(k)] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        obj = object.__new__(cls)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def monomial(cls, k: int, c=1) -> "LaurentPoly":
        c = GaussianRational.coerce(c)
        return cls._raw({k: c} if c else {})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self.terms.items())))
        return self._hash

    def low(self) -> int:
        return min(self.terms)

    def high(self) -> int:
        return max(self.terms)

    def is_one(self) -> bool:
        t = self.terms
        return len(t) == 1 and 0 in t and t[0] == _G1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def is_real(self) -> bool:
        return all(c.im == 0 for c in self.terms.values())

    def __neg__(self):
        return LaurentPoly._raw({k: -c for k, c in self.terms.items()})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            if k in out:
                v = out[k] + c
                if v:
                    out[k] = v
                else:
                    del out[k]
            else:
                out[k] = c
        return LaurentPoly._raw(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        a, b = self.terms, other.terms
        if not a or not b:
            return LaurentPoly._raw({})
        if len(a) == 1 and len(b) == 1:
            (ka, ca), = a.items()
            (kb, cb), = b.items()
            return LaurentPoly._raw({ka + kb: ca * cb})
        out = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = ka + kb
                v = ca * cb
                if k in out:
                    out[k] = out[k] + v
                else:
                    out[k] = v
        return LaurentPoly._raw({k: v for k, v in out.items() if v})

    def scale(self, c: GaussianRational) -> "LaurentPoly":
        if not c:
            return LaurentPoly._raw({})
        return LaurentPoly._raw({k: v * c for k, v in self.terms.items()})

    def shift(self, n: int) -> "LaurentPoly":
        if n == 0:
            return self
        return LaurentPoly._raw({k + n: c for k, c in self.terms.items()})

    def conjugate(self) -> "LaurentPoly":
        if self.is_real():
            return self
        return LaurentPoly._raw({k: c.conjugate() for k, c in self.terms.items()})

    def leading(self) -> GaussianRational:
        return self.terms[self.high()]

    def evaluate(self, x: GaussianRational) -> GaussianRational:
        total = _G0
        for k, c in self.terms.items():
            total = total + c * x ** k
        return total

    def substitute_power(self, fn) -> "LaurentPoly":
        """Return sum fn(k) * c_k s^k; fn gives a GaussianRational factor."""
        return LaurentPoly({k: c * fn(k) for k, c in self.terms.items()})

    # dense helpers (ordinary polynomials, ascending coefficient lists)
    def to_dense(self) -> list:
        lo, hi = self.low(), self.high()
        if lo < 0:
            raise ValueError("negative exponents")
        dense = [_G0] * (hi + 1)
        for k, c in self.terms.items():
            dense[k] = c
        return dense

    @classmethod
    def from_dense(cls, dense: list, shift: int = 0) -> "LaurentPoly":
        return cls._raw({i + shift: c for i, c in enumerate(dense) if c})

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_sform()})"

    def to_sform(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            cs = str(c)
            if c.re != 0 and c.im != 0:
                cs = f"({cs})"
            parts.append(f"{cs}*s^{k}")
        return " + ".join(parts)


_P0 = LaurentPoly._raw({})
_P1 = LaurentPoly._raw({0: _G1})


def _dense_trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _dense_divmod(a: list, b: list):
    a = list(a)
    lb = b[-1].inverse()
    db = len(b) - 1
    quot = [_G0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        coef = a[-1] * lb
        shift = len(a) - 1 - db
        quot[shift] = coef
        for i, bc in enumerate(b):
            if bc:
                a[shift + i] = a[shift + i] - coef * bc
        a.pop()
        _dense_trim(a)
    return quot, a


def _dense_monic(p: list) -> list:
    lc = p[-1]
    if lc == _G1:
        return p
    inv = lc.inverse()
    return [c * inv for c in p]


def _dense_gcd(a: list, b: list) -> list:
    """Monic gcd over Q(i)[s] by the Euclidean algorithm on monic remainders."""
    a = _dense_trim(list(a))
    b = _dense_trim(list(b))
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return _dense_monic(a) if a else a
    a = _dense_monic(a)
    b = _dense_monic(b)
    while b:
        if len(b) == 1:
            return [_G1]
        _, r = _dense_divmod(a, b)
        a, b = b, (_dense_monic(r) if r else r)
    return a


def _strip_low(p: LaurentPoly):
    """Split p = s^lo * p0 with p0 an ordinary polynomial, p0(0) != 0."""
    lo = p.low()
    return lo, p.shift(-lo)


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd of two Laurent polynomials, up to units s^k (result has
    nonzero constant term)."""
    if not a:
        return _strip_low(b)[1] if b else b
    if not b:
        return _strip_low(a)[1]
    _, a0 = _strip_low(a)
    _, b0 = _strip_low(b)
    g = _dense_gcd(a0.to_dense(), b0.to_dense())
    return LaurentPoly.from_dense(g)


def poly_exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact division a / b where b has nonzero constant term and divides a
    in Q(i)[s, 1/s]."""
    if b.is_one():
        return a
    if len(b.terms) == 1:
        (k, c), = b.terms.items()
        return a.shift(-k).scale(c.inverse())
    lo, a0 = _strip_low(a)
    q, r = _dense_divmod(a0.to_dense(), b.to_dense())
    if r:
        raise ArithmeticError("inexact polynomial division")
    return LaurentPoly.from_dense(q, lo)


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------


class RatFunc:
    """Canonical element num/den of Q(i)(s).

    Invariants: den has lowest exponent 0, leading coefficient 1, and
    gcd(num, den) = 1.  Zero is 0/1.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = _P1 if den is None else _as_poly(den)
        n, d = _normalize(num, den)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "RatFunc":
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RatFunc":
        return cls._raw(p, _P1)

    # -- predicates ---------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.den.is_one() and self.num.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_constant(self) -> bool:
        return self.den.is_one() and self.num.is_constant()

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num.terms.get(0, _G0)

    def is_real(self) -> bool:
        return self.num.is_real() and self.den.is_real()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            try:
                other = as_ratfunc(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.num, self.den)))
        return self._hash

    # -- field operations ---------------------------------------------------
    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __add__(self, other):
        o = other if isinstance(other, RatFunc) else _rf(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        d1, d2 = self.den, o.den
        if d1.is_one() and d2.is_one():
            return RatFunc._raw(self.num + o.num, _P1)
        if d1 == d2:
            return _make(self.num + o.num, d1)
        g = poly_gcd(d1, d2)
        if g.is_one():
            return _make_reduced(self.num * d2 + o.num * d1, d1 * d2)
        d1g = poly_exact_div(d1, g)
        d2g = poly_exact_div(d2, g)
        return _make(self.num * d2g + o.num * d1g, d1g * d2)

    __radd__ = __add__

    def __sub__(self, other):
        o = other if isinstance(other, RatFunc) else _rf(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _rf(other)
        return NotImplemented if o is None else o - self

    def __mul__(self, other):
        o = other if isinstance(other, RatFunc) else _rf(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return ZERO
        d1, d2 = self.den, o.den
        if d1.is_one() and d2.is_one():
            return RatFunc._raw(self.num * o.num, _P1)
        n1, n2 = self.num, o.num
        if not d2.is_one():
            g = poly_gcd(n1, d2)
            if not g.is_one():
                n1 = poly_exact_div(n1, g)
                d2 = poly_exact_div(d2, g)
        if not d1.is_one():
            g = poly_gcd(n2, d1)
            if not g.is_one():
                n2 = poly_exact_div(n2, g)
                d1 = poly_exact_div(d1, g)
        return _make_reduced(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("division by zero in Q(i)(s)")
        lo, n0 = _strip_low(self.num)
        # self = s^lo n0 / den  ->  inverse = s^-lo den / n0
        lc = n0.leading().inverse()
        return RatFunc._raw(self.den.shift(-lo).scale(lc), n0.scale(lc))

    def __truediv__(self, other):
        o = other if isinstance(other, RatFunc) else _rf(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _rf(other)
        return NotImplemented if o is None else o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if len(self.num.terms) == 1 and self.den.is_one():
            (k, c), = self.num.terms.items()
            return RatFunc._raw(LaurentPoly._raw({k * n: c ** n}), _P1)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structure maps ------------------------------------------------------
    def conjugate(self) -> "RatFunc":
        """Complex conjugation of coefficients; s (hence q) is real."""
        if self.is_real():
            return self
        return RatFunc._raw(self.num.conjugate(), self.den.conjugate())

    def negate_q(self) -> "RatFunc":
        """The substitution q -> -q.  Only defined on functions of q, i.e.
        when every exponent of s is even."""
        for p in (self.num, self.den):
            if any(k % 2 for k in p.terms):
                raise DomainError("q -> -q needs even powers of s only")
        sign = lambda k: GaussianRational(-1 if (k // 2) % 2 else 1)
        return RatFunc(self.num.substitute_power(sign), self.den.substitute_power(sign))

    def specialize(self, s0) -> GaussianRational:
        """Evaluate at s = s0 (a nonzero rational other than +-1)."""
        s0 = GaussianRational.coerce(s0) if not isinstance(s0, GaussianRational) else s0
        if s0.im != 0:
            raise DomainError("specialization point must be real")
        if s0.re == 0 or s0.re == 1 or s0.re == -1:
            raise DomainError("specialization point must avoid 0 and +-1")
        d = self.den.evaluate(s0)
        if not d:
            raise PoleError(f"pole at s = {s0}")
        return self.num.evaluate(s0) / d

    def specialize_q(self, q0) -> GaussianRational:
        """Evaluate at q = q0 when only even powers of s occur."""
        q0 = GaussianRational.coerce(q0) if not isinstance(q0, GaussianRational) else q0
        if q0.im != 0 or q0.re == 0 or q0.re == 1 or q0.re == -1:
            raise DomainError("q0 must be real and avoid 0, +-1")
        for p in (self.num, self.den):
            if any(k % 2 for k in p.terms):
                raise DomainError("half-integer powers of q need specialize(s0)")
        ev = lambda p: sum((c * q0 ** (k // 2) for k, c in p.terms.items()), _G0)
        d = ev(self.den)
        if not d:
            raise PoleError(f"pole at q = {q0}")
        return ev(self.num) / d

    def sqrt(self) -> "RatFunc":
        """Exact square root of a perfect square in Q(i)(s)."""
        if not self.num:
            return self
        return RatFunc(_poly_sqrt(self.num), _poly_sqrt(self.den))

    def degree_weight(self) -> int:
        """Size measure used for pivot selection."""
        return (self.num.high() - self.num.low() if self.num else 0) + self.den.high() + len(
            self.num.terms
        )

    # -- printing ----------------------------------------------------------
    def to_sform(self) -> str:
        """Serialization form: "num / den" in powers of s (den omitted if 1)."""
        if self.den.is_one():
            return self.num.to_sform()
        return f"({self.num.to_sform()}) / ({self.den.to_sform()})"

    def __str__(self) -> str:
        """Readable form in powers of q."""
        if self.den.is_one():
            return _poly_qstr(self.num)
        n = _poly_qstr(self.num)
        if len(self.num.terms) > 1:
            n = f"({n})"
        return f"{n}/({_poly_qstr(self.den)})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


def _poly_sqrt(p: LaurentPoly) -> LaurentPoly:
    lo, p0 = _strip_low(p)
    if lo % 2:
        raise NotASquareError("odd power of s")
    dense = p0.to_dense()
    n = len(dense) - 1
    if n % 2:
        raise NotASquareError("odd degree")
    m = n // 2
    root = [_G0] * (m + 1)
    root[m] = dense[n].sqrt()
    two_lead = root[m] * 2
    # solve top-down for the remaining coefficients
    for k in range(m - 1, -1, -1):
        # coefficient of s^(m+k) in root^2 equals dense[m+k]
        acc = dense[m + k]
        for i in range(k + 1, m):
            j = m + k - i
            if k < j <= m and i <= m:
                acc = acc - root[i] * root[j]
        root[k] = acc / two_lead
    sq = LaurentPoly.from_dense(root) * LaurentPoly.from_dense(root)
    if sq != p0:
        raise NotASquareError("not a perfect square")
    return LaurentPoly.from_dense(root, lo // 2)


def _poly_qstr(p: LaurentPoly) -> str:
    if not p.terms:
        return "0"
    out = []
    for idx, k in enumerate(sorted(p.terms, reverse=True)):
        c = p.terms[k]
        if k == 0:
            mono = ""
        elif k % 2 == 0:
            mono = "q" if k == 2 else f"q^{k // 2}"
        else:
            mono = f"q^({k}/2)"
        negative = False
        if c.im == 0:
            negative = c.re < 0
            cabs = _fmt_q(abs(c.re))
            cstr = "" if (cabs == "1" and mono) else cabs
        elif c.re == 0:
            negative = c.im < 0
            cabs = _fmt_q(abs(c.im))
            cstr = ("" if cabs == "1" else cabs + "*") + "i"
        else:
            cstr = f"({c})"
        if mono and cstr:
            term = f"{cstr}*{mono}"
        else:
            term = cstr or mono
        if idx == 0:
            out.append(("-" if negative else "") + term)
        else:
            out.append((" - " if negative else " + ") + term)
    return "".join(out)


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    return LaurentPoly.monomial(0, GaussianRational.coerce(x))


def _normalize(num: LaurentPoly, den: LaurentPoly):
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return _P0, _P1
    lo, d0 = _strip_low(den)
    num = num.shift(-lo)
    g = poly_gcd(num, d0)
    if not g.is_one():
        num = poly_exact_div(num, g)
        d0 = poly_exact_div(d0, g)
    lc = d0.leading()
    if lc != _G1:
        inv = lc.inverse()
        num = num.scale(inv)
        d0 = d0.scale(inv)
    if d0.is_one():
        d0 = _P1
    return num, d0


def _make(num: LaurentPoly, den: LaurentPoly) -> RatFunc:
    n, d = _normalize(num, den)
    return RatFunc._raw(n, d)


def _make_reduced(num: LaurentPoly, den: LaurentPoly) -> RatFunc:
    """num/den already coprime; only fix the leading coefficient."""
    if den.is_one():
        return RatFunc._raw(num, _P1)
    lc = den.leading()
    if lc != _G1:
        inv = lc.inverse()
        num, den = num.scale(inv), den.scale(inv)
    return RatFunc._raw(num, den)


ZERO = RatFunc._raw(_P0, _P1)
ONE = RatFunc._raw(_P1, _P1)
S = RatFunc._raw(LaurentPoly._raw({1: _G1}), _P1)
Q = RatFunc._raw(LaurentPoly._raw({2: _G1}), _P1)
_IRF = RatFunc._raw(LaurentPoly._raw({0: I}), _P1)


def as_ratfunc(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, GaussianRational):
        return RatFunc._raw(LaurentPoly._raw({0: x} if x else {}), _P1)
    if isinstance(x, LaurentPoly):
        return RatFunc._raw(x, _P1)
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, (int, Fraction)) or type(x).__name__ == "mpq":
        return as_ratfunc(GaussianRational.coerce(x))
    raise TypeError(f"cannot convert {type(x).__name__} to RatFunc")


def _rf(x):
    try:
        return as_ratfunc(x)
    except TypeError:
        return None


def q_power(k, half: bool = False) -> RatFunc:
    """q^k (or q^(k/2) when half=True) as a monomial."""
    e = k if half else 2 * k
    return RatFunc._raw(LaurentPoly._raw({e: _G1}), _P1)


def qint(n: int) -> RatFunc:
    """The sum 1 + q^2 + ... + q^(2(n-1))."""
    return RatFunc._raw(LaurentPoly._raw({4 * j: _G1 for j in range(n)}), _P1)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([sqi])|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        num, sym, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif sym is not None:
            tokens.append(("sym", sym))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ValueError(f"unexpected token {tok!r}")
        self.i += 1
        return tok

    def expr(self) -> RatFunc:
        sign = 1
        if self.peek() in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> RatFunc:
        acc = self.power()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            if self.peek() in (("op", "-"), ("op", "+")):
                sign = -1 if self.take()[1] == "-" else 1
                rhs = self.power() * sign
            else:
                rhs = self.power()
            acc = acc * rhs if op == "*" else acc / rhs
        return acc

    def exponent(self) -> Fraction:
        tok = self.peek()
        if tok == ("op", "("):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            num = self.take("num")[1]
            den = 1
            if self.peek() == ("op", "/"):
                self.take()
                den = self.take("num")[1]
            self.take("op", ")")
            return Fraction(sign * num, den)
        sign = 1
        if tok == ("op", "-"):
            self.take()
            sign = -1
        return Fraction(sign * self.take("num")[1])

    def power(self) -> RatFunc:
        base, is_symbol = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            e = self.exponent()
            if is_symbol == "q":
                twice = e * 2
                if twice.denominator != 1:
                    raise ValueError("q exponents must be multiples of 1/2")
                return RatFunc._raw(LaurentPoly._raw({int(twice): _G1}), _P1)
            if e.denominator != 1:
                raise ValueError("fractional exponent")
            return base ** int(e)
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return as_ratfunc(val), None
        if kind == "sym":
            self.take()
            return {"s": S, "q": Q, "i": _IRF}[val], val
        if (kind, val) in (("op", "-"), ("op", "+")):
            self.take()
            v = self.power()
            return (-v if val == "-" else v), None
        if (kind, val) == ("op", "("):
            self.take()
            v = self.expr()
            self.take("op", ")")
            return v, None
        raise ValueError(f"unexpected token {(kind, val)!r}")


def parse_ratfunc(text: str) -> RatFunc:
    """Parse both the s-form serialization and the q-form readable output."""
    p = _Parser(text)
    value = p.expr()
    if p.i != len(p.tokens):
        raise ValueError(f"trailing input in {text!r}")
    return value
