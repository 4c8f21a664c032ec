"""Independent reference implementations used only by the tests."""

from fractions import Fraction

import sympy

from qhodge.scalars import GaussianRational

s_sym = sympy.Symbol("s", positive=True)


def gauss_to_sympy(c: GaussianRational):
    re = Fraction(int(c.re.numerator), int(c.re.denominator))
    im = Fraction(int(c.im.numerator), int(c.im.denominator))
    return sympy.Rational(re.numerator, re.denominator) + sympy.I * sympy.Rational(im.numerator, im.denominator)


def laurent_to_sympy(p):
    return sum((gauss_to_sympy(c) * s_sym ** k for k, c in p.terms.items()), sympy.Integer(0))


def to_sympy(r):
    """A RatFunc as a sympy expression in s."""
    return laurent_to_sympy(r.num) / laurent_to_sympy(r.den)


def sympy_equal(x, y) -> bool:
    return sympy.simplify(x - y) == 0


def sympy_matrix(mat):
    return sympy.Matrix([[to_sympy(x) for x in row] for row in mat])


class ShiftRepresentation:
    """a e_n = e_(n-1), a* e_n = (1 - q^(2n+2)) e_(n+1), c e_n = t q^n e_n,
    c* e_n = t^-1 q^n e_n on span{e_0, ..., e_N}.  All defining relations
    of A(SU_q(2)) hold on vectors supported well below N."""

    def __init__(self, q: Fraction, t: Fraction, size: int):
        self.q, self.t, self.size = q, t, size

    def apply_generator(self, name: str, vec: dict) -> dict:
        q, t = self.q, self.t
        out: dict = {}
        for n, v in vec.items():
            if name == "a":
                if n > 0:
                    out[n - 1] = out.get(n - 1, 0) + v
            elif name == "as":
                if n + 1 < self.size:
                    out[n + 1] = out.get(n + 1, 0) + v * (1 - q ** (2 * n + 2))
            elif name == "c":
                out[n] = out.get(n, 0) + v * t * q ** n
            elif name == "cs":
                out[n] = out.get(n, 0) + v * q ** n / t
            else:
                raise KeyError(name)
        return {k: x for k, x in out.items() if x}

    def apply_monomial(self, mono, vec: dict) -> dict:
        """Normal monomial (k, m, n) is a^k c^m c*^n (a*^|k| for k < 0),
        applied right to left."""
        k, m, n = mono
        word = ["a" if k > 0 else "as"] * abs(k) + ["c"] * m + ["cs"] * n
        for g in reversed(word):
            vec = self.apply_generator(g, vec)
        return vec

    def apply_element(self, x, vec: dict, s0: Fraction) -> dict:
        out: dict = {}
        for mono, coef in x.terms.items():
            c = coef.specialize(s0)
            assert c.im == 0
            cval = Fraction(int(c.re.numerator), int(c.re.denominator))
            for key, v in self.apply_monomial(mono, vec).items():
                out[key] = out.get(key, 0) + cval * v
        return {k: v for k, v in out.items() if v}
