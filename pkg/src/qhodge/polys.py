"""Sparse multivariate polynomials over the scalar field.

Used for contractions with symbolic entries alpha, beta, gamma, the volume
scale m and the conjugate symbols ``alpha*`` etc.  Reality conditions are
expressed by treating ``x*`` as an independent variable; ``conjugate``
swaps x <-> x* and conjugates coefficients.  Variables listed in
``REAL_SYMBOLS`` are their own conjugates.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Tuple

from .scalars import ONE, as_ratfunc

Key = Tuple[Tuple[str, int], ...]

REAL_SYMBOLS = {"m", "m_minus", "m_check"}


def conjugate_name(name: str) -> str:
    if name in REAL_SYMBOLS:
        return name
    return name[:-1] if name.endswith("*") else name + "*"


def _mul_keys(k1: Key, k2: Key) -> Key:
    if not k1:
        return k2
    if not k2:
        return k1
    d = dict(k1)
    for v, e in k2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in d.items() if e))


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        return as_ratfunc(a) / b
    return a / b


class Poly:
    """sum_c coeff * prod var^exp."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Key, object] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def var(cls, name: str, one=ONE) -> "Poly":
        return cls({((name, 1),): one})

    @staticmethod
    def lift(x) -> "Poly":
        """Wrap a scalar; plain ints stay ints so they mix with any field."""
        if isinstance(x, Poly):
            return x
        return Poly({(): x})

    # -- arithmetic -------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return not (self - other).terms

    __hash__ = None

    def __neg__(self) -> "Poly":
        return Poly({k: -v for k, v in self.terms.items()})

    def __add__(self, other) -> "Poly":
        other = Poly.lift(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            if k in out:
                s = out[k] + v
                if s:
                    out[k] = s
                else:
                    del out[k]
            else:
                out[k] = v
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        return self + (-Poly.lift(other))

    def __rsub__(self, other) -> "Poly":
        return Poly.lift(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            if not other:
                return Poly()
            return Poly({k: v * other for k, v in self.terms.items()})
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = _mul_keys(k1, k2)
                v = v1 * v2
                if k in out:
                    s = out[k] + v
                    if s:
                        out[k] = s
                    else:
                        del out[k]
                else:
                    out[k] = v
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Poly":
        if isinstance(other, Poly):
            if len(other.terms) == 1 and () in other.terms:
                other = other.terms[()]
            else:
                return self.divide_monomial(other)
        return Poly({k: _div(v, other) for k, v in self.terms.items()})

    def __pow__(self, n: int) -> "Poly":
        out = Poly.lift(1)
        for _ in range(n):
            out = out * self
        return out

    def divide_monomial(self, mono: "Poly") -> "Poly":
        """Exact division by a single term (variables may get negative
        exponents, i.e. Laurent monomials in nonzero parameters)."""
        if len(mono.terms) != 1:
            raise ZeroDivisionError("can only divide by a single term")
        ((key, coef),) = mono.terms.items()
        inv_key = tuple((v, -e) for v, e in key)
        return Poly({_mul_keys(k, inv_key): _div(v, coef) for k, v in self.terms.items()})

    # -- structure --------------------------------------------------------
    def variables(self) -> set:
        return {v for k in self.terms for v, _ in k}

    def is_constant(self) -> bool:
        return all(k == () for k in self.terms)

    def constant(self):
        return self.terms.get((), 0)

    def degree_in(self, name: str) -> int:
        return max((dict(k).get(name, 0) for k in self.terms), default=0)

    def coefficient_in(self, name: str, power: int) -> "Poly":
        """Coefficient of name^power, as a polynomial in the other variables."""
        out = {}
        for k, v in self.terms.items():
            d = dict(k)
            if d.get(name, 0) == power:
                d.pop(name, None)
                out[tuple(sorted(d.items()))] = v
        return Poly(out)

    def map_coefficients(self, fn) -> "Poly":
        return Poly({k: fn(v) for k, v in self.terms.items()})

    def conjugate(self) -> "Poly":
        out = {}
        for k, v in self.terms.items():
            nk = tuple(sorted((conjugate_name(n), e) for n, e in k))
            out[nk] = v.conjugate() if not isinstance(v, int) else v
        return Poly(out)

    def substitute(self, values: Mapping[str, object]) -> "Poly":
        """Replace variables by polynomials (or scalars); negative exponents
        require a single-term replacement."""
        out = Poly()
        cache: Dict[Tuple[str, int], Poly] = {}
        for k, v in self.terms.items():
            term = Poly({(): v})
            rest = []
            for name, e in k:
                if name in values:
                    key = (name, e)
                    if key not in cache:
                        base = Poly.lift(values[name])
                        if e >= 0:
                            cache[key] = base ** e
                        else:
                            cache[key] = Poly.lift(1).divide_monomial(base ** (-e))
                    term = term * cache[key]
                else:
                    rest.append((name, e))
            if rest:
                term = term * Poly({tuple(rest): 1})
            out = out + term
        return out

    def sort_key(self):
        return sorted(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in k)
            c = str(self.terms[k])
            if not mono:
                parts.append(f"({c})")
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    __repr__ = __str__


def var(name: str, one=ONE) -> Poly:
    return Poly.var(name, one)


ALPHA = var("alpha")
BETA = var("beta")
GAMMA = var("gamma")
M_SCALE = var("m")


def poly_ratio(num: Poly, den: Poly):
    """The scalar c with num = c * den; raises ValueError if none exists."""
    num, den = Poly.lift(num), Poly.lift(den)
    if not den.terms:
        raise ZeroDivisionError("ratio by the zero polynomial")
    key = min(den.terms)
    c = _div(num.terms.get(key, 0), den.terms[key])
    if not c or num != den * c:
        raise ValueError("the polynomials are not proportional")
    return c


def lift_all(xs: Iterable) -> list:
    return [Poly.lift(x) for x in xs]


# ---------------------------------------------------------------------------
# solving constraint systems on the locus where every variable is nonzero
# ---------------------------------------------------------------------------


class UnsolvedSystemError(ArithmeticError):
    """The triangular solver met an equation it cannot eliminate."""


def strip_monomial_content(p: Poly) -> Poly:
    """Divide out the largest monomial factor (variables are nonzero), so
    that every exponent is nonnegative and no variable divides all terms."""
    if not p.terms:
        return p
    names = p.variables()
    low = {}
    for v in names:
        low[v] = min(dict(k).get(v, 0) for k in p.terms)
    shift = tuple(sorted((v, -e) for v, e in low.items() if e))
    if not shift:
        return p
    return Poly({_mul_keys(k, shift): c for k, c in p.terms.items()})


def _monomial_sqrt(key: Key):
    if any(e % 2 for _, e in key):
        return None
    return tuple((v, e // 2) for v, e in key)


def _substitute_all(eqs, name, expr):
    return [e.substitute({name: expr}) for e in eqs]


def solve_system(equations, priority) -> list:
    """All solution branches of ``equations = 0`` with every variable
    nonzero.

    A branch is a dict ``name -> Poly`` in the remaining free variables.
    Variables are eliminated in ``priority`` order, first through equations
    linear in the variable with a single-term coefficient, then through
    two-term equations ``c1 v^2 M1 + c2 M2`` with an exact square root.
    """
    eqs = [Poly.lift(e) for e in equations]
    return _solve(eqs, {}, list(priority))


def _normalise(eqs):
    out = []
    for e in eqs:
        e = strip_monomial_content(e)
        if e.terms:
            out.append(e)
    out.sort(key=lambda e: (len(e.terms), str(e)))
    return out


def _solve(eqs, sol, priority):
    eqs = _normalise(eqs)
    for e in eqs:
        if e.is_constant():
            return []  # a nonzero monomial cannot vanish here
    if not eqs:
        return [sol]
    for need_constant in (True, False):
        for v in priority:
            for e in eqs:
                if e.degree_in(v) != 1:
                    continue
                coef = e.coefficient_in(v, 1)
                if len(coef.terms) != 1 or (need_constant and not coef.is_constant()):
                    continue
                if any(ex < 0 for k in e.terms for n, ex in k if n == v):
                    continue
                expr = -e.coefficient_in(v, 0) / coef
                return _branch(eqs, sol, priority, v, expr)
    for v in priority:
        for e in eqs:
            if len(e.terms) != 2 or e.degree_in(v) != 2:
                continue
            (k1, c1), (k2, c2) = e.terms.items()
            if dict(k2).get(v, 0) == 2:
                (k1, c1), (k2, c2) = (k2, c2), (k1, c1)
            if dict(k1).get(v, 0) != 2 or dict(k2).get(v, 0) != 0:
                continue
            rest1 = tuple((n, x) for n, x in k1 if n != v)
            ratio_key = _mul_keys(k2, tuple((n, -x) for n, x in rest1))
            root_key = _monomial_sqrt(ratio_key)
            if root_key is None:
                continue
            try:
                root = (-c2 / c1).sqrt()
            except ArithmeticError:
                continue
            out = []
            for sgn in (1, -1):
                expr = Poly({root_key: root * sgn})
                out.extend(_branch(eqs, sol, priority, v, expr))
            return out
    raise UnsolvedSystemError("cannot eliminate: " + "; ".join(str(e) for e in eqs))


def _branch(eqs, sol, priority, v, expr):
    if not expr.terms:
        return []
    new_sol = {k: val.substitute({v: expr}) for k, val in sol.items()}
    new_sol[v] = expr
    rest = [p for p in priority if p != v]
    return _solve(_substitute_all(eqs, v, expr), new_sol, rest)


def branch_satisfies(branch: dict, equations) -> bool:
    """Whether every equation vanishes identically on the branch."""
    return all(not Poly.lift(e).substitute(branch).terms for e in equations)


def branch_contained(inner: dict, outer: dict, ignore=()) -> bool:
    """Whether the parametrized set ``inner`` lies in ``outer``; entries of
    ``outer`` for the names in ``ignore`` (auxiliary parameters) are skipped."""
    for name, expr in outer.items():
        if name in ignore:
            continue
        diff = Poly.var(name) - expr
        if diff.substitute(inner).terms:
            return False
    return True


def same_solution_set(first: list, second: list, ignore=()) -> bool:
    """Mutual containment of two unions of branches."""
    def covered(xs, ys):
        return all(any(branch_contained(x, y, ignore) for y in ys) for x in xs)

    return covered(first, second) and covered(second, first)


def conjugate_closure(equations) -> list:
    out = []
    for e in equations:
        e = Poly.lift(e)
        out.append(e)
        out.append(e.conjugate())
    return out
