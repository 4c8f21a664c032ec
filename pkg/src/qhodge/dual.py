"""The dual Hopf *-algebra generated by K^{+-1}, E, F and eps_-.

A word eps_-^s F^i E^j K^l is the tuple (s, i, j, l).  Relations::

    K E = q E K,   K F = q^-1 F K,   [E, F] = (K^2 - K^-2) / (q - q^-1),
    eps_- central,  eps_-^2 = 1.

Functionals act on A(SU_q(2)) from the left by X |> h = h_(1) X(h_(2)),
which is computed from the values on generators and the module-algebra rule
E |> (x y) = (E |> x)(K |> y) + (K^-1 |> x)(E |> y).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Tuple

from . import algebra as alg
from .algebra import AlgebraElement, Monomial, mono_degree, split_first, _accumulate
from .scalars import ONE, ZERO, RatFunc, as_ratfunc, q_power

Word = Tuple[int, int, int, int]

UNIT_WORD: Word = (0, 0, 0, 0)


def _qp(k: int) -> RatFunc:
    return alg._qp(k)


@lru_cache(maxsize=None)
def _spow(k: int) -> RatFunc:
    return q_power(k, half=True)


class Functional:
    """Finite RatFunc-linear combination of PBW words."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Word, RatFunc] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def _raw(cls, terms: dict) -> "Functional":
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def word(cls, w: Word, coef=ONE) -> "Functional":
        coef = as_ratfunc(coef)
        return cls._raw({w: coef} if coef else {})

    @classmethod
    def scalar(cls, c) -> "Functional":
        return cls.word(UNIT_WORD, c)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Functional):
            try:
                other = Functional.scalar(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return Functional._raw({k: -v for k, v in self.terms.items()})

    def __add__(self, other) -> "Functional":
        if not isinstance(other, Functional):
            other = Functional.scalar(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            _accumulate(out, k, v)
        return Functional._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Functional":
        if not isinstance(other, Functional):
            other = Functional.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return Functional.scalar(other) - self

    def scale(self, c) -> "Functional":
        c = as_ratfunc(c)
        if not c:
            return Functional._raw({})
        return Functional._raw({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other) -> "Functional":
        if not isinstance(other, Functional):
            return self.scale(other)
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c12 = c1 * c2
                for w, c in word_mul(w1, w2).items():
                    _accumulate(out, w, c12 * c)
        return Functional._raw(out)

    def __rmul__(self, other) -> "Functional":
        return self.scale(other)

    def __truediv__(self, other) -> "Functional":
        return self.scale(as_ratfunc(other).inverse())

    def __pow__(self, n: int) -> "Functional":
        out = Functional.scalar(ONE)
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, h: AlgebraElement) -> RatFunc:
        return evaluate(self, h)

    def __repr__(self) -> str:
        return f"Functional({self})"

    def __str__(self) -> str:
        return format_functional(self)


# ---------------------------------------------------------------------------
# PBW multiplication
# ---------------------------------------------------------------------------

K = Functional.word((0, 0, 0, 1))
K_INV = Functional.word((0, 0, 0, -1))
E = Functional.word((0, 0, 1, 0))
F = Functional.word((0, 1, 0, 0))
EPS_MINUS = Functional.word((1, 0, 0, 0))
UNIT = Functional.word(UNIT_WORD)


def k_power(l: int) -> Functional:
    return Functional.word((0, 0, 0, l))


@lru_cache(maxsize=None)
def _e_times(w: Word) -> Dict[Word, RatFunc]:
    """E * (eps^s F^i E^j K^l) in normal form."""
    s, i, j, l = w
    if i == 0:
        return {(s, 0, j + 1, l): ONE}
    # E F^i ... = F (E F^(i-1) ...) + C F^(i-1) ..., C = (K^2 - K^-2)/(q - q^-1)
    out: dict = {}
    for (s2, i2, j2, l2), c in _e_times((s, i - 1, j, l)).items():
        _accumulate(out, (s2, i2 + 1, j2, l2), c)
    inv = (_qp(1) - _qp(-1)).inverse()
    # K^{+-2} F^(i-1) E^j K^l = q^{+-2(j-(i-1))} F^(i-1) E^j K^(l+-2)
    e = 2 * (j - (i - 1))
    _accumulate(out, (s, i - 1, j, l + 2), _qp(e) * inv)
    _accumulate(out, (s, i - 1, j, l - 2), -_qp(-e) * inv)
    return out


@lru_cache(maxsize=None)
def word_mul(w1: Word, w2: Word) -> Dict[Word, RatFunc]:
    s1, i1, j1, l1 = w1
    s2, i2, j2, l2 = w2
    # K^l1 F^i2 E^j2 = q^{l1 (j2 - i2)} F^i2 E^j2 K^l1
    current: Dict[Word, RatFunc] = {((s1 + s2) % 2, i2, j2, l1 + l2): _qp(l1 * (j2 - i2))}
    for _ in range(j1):
        nxt: dict = {}
        for w, c in current.items():
            for ww, cc in _e_times(w).items():
                _accumulate(nxt, ww, c * cc)
        current = nxt
    if i1:
        current = {(s, i + i1, j, l): c for (s, i, j, l), c in current.items()}
    return current


# ---------------------------------------------------------------------------
# coproduct, antipode, star
# ---------------------------------------------------------------------------


class FunctionalTensor:
    """Element of U (x) U as {(word, word): coef}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    def __eq__(self, other) -> bool:
        return isinstance(other, FunctionalTensor) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            _accumulate(out, k, v)
        t = FunctionalTensor()
        t.terms = out
        return t

    def __sub__(self, other):
        return self + other.scale(-ONE)

    def scale(self, c):
        c = as_ratfunc(c)
        t = FunctionalTensor()
        t.terms = {k: v * c for k, v in self.terms.items()} if c else {}
        return t

    def __mul__(self, other):
        out: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                c12 = c1 * c2
                for wa, ca in word_mul(a1, a2).items():
                    for wb, cb in word_mul(b1, b2).items():
                        _accumulate(out, (wa, wb), c12 * ca * cb)
        t = FunctionalTensor()
        t.terms = out
        return t

    @staticmethod
    def pure(f: Functional, g: Functional) -> "FunctionalTensor":
        t = FunctionalTensor()
        t.terms = {}
        for w1, c1 in f.terms.items():
            for w2, c2 in g.terms.items():
                _accumulate(t.terms, (w1, w2), c1 * c2)
        return t

    def by_right_word(self) -> Dict[Word, Functional]:
        """Group as sum over right words r of (left functional) (x) r."""
        groups: Dict[Word, dict] = {}
        for (wl, wr), c in self.terms.items():
            groups.setdefault(wr, {})[wl] = c
        return {r: Functional._raw(d) for r, d in groups.items()}

    def evaluate(self, t: alg.TensorElement) -> RatFunc:
        total = ZERO
        for (wl, wr), c in self.terms.items():
            for (ml, mr), v in t.terms.items():
                x = evaluate_word(wl, ml)
                if x:
                    y = evaluate_word(wr, mr)
                    if y:
                        total = total + c * v * x * y
        return total

    def __repr__(self) -> str:
        return " + ".join(
            f"({c})*[{format_word(a)} (x) {format_word(b)}]" for (a, b), c in sorted(self.terms.items())
        ) or "0"


def _gen_coproducts():
    tp = FunctionalTensor.pure
    return {
        "K": tp(K, K),
        "Kinv": tp(K_INV, K_INV),
        "E": tp(E, K) + tp(K_INV, E),
        "F": tp(F, K) + tp(K_INV, F),
        "eps": tp(EPS_MINUS, EPS_MINUS),
    }


@lru_cache(maxsize=None)
def _coproduct_word(w: Word) -> FunctionalTensor:
    gens = _GEN_DELTA
    s, i, j, l = w
    out = FunctionalTensor({(UNIT_WORD, UNIT_WORD): ONE})
    factors = ["eps"] * s + ["F"] * i + ["E"] * j + (["K"] * l if l > 0 else ["Kinv"] * (-l))
    for g in factors:
        out = out * gens[g]
    return out


_GEN_DELTA = _gen_coproducts()


def dual_coproduct(f: Functional) -> FunctionalTensor:
    out = FunctionalTensor()
    for w, c in f.terms.items():
        out = out + _coproduct_word(w).scale(c)
    return out


def dual_counit(f: Functional) -> RatFunc:
    """eps(K) = eps(eps_-) = 1, eps(E) = eps(F) = 0."""
    total = ZERO
    for (s, i, j, l), c in f.terms.items():
        if i == 0 and j == 0:
            total = total + c
    return total


def dual_antipode(f: Functional) -> Functional:
    """Antihomomorphism with S(K) = K^-1, S(E) = -qE, S(F) = -q^-1 F,
    S(eps_-) = eps_-."""
    out = Functional()
    for (s, i, j, l), c in f.terms.items():
        term = k_power(-l) * (E.scale(-_qp(1)) ** j) * (F.scale(-_qp(-1)) ** i) * (EPS_MINUS ** s)
        out = out + term.scale(c)
    return out


def dual_star(f: Functional) -> Functional:
    """Antilinear antihomomorphism with K* = K, E* = F, eps_-* = eps_-."""
    out = Functional()
    for (s, i, j, l), c in f.terms.items():
        term = k_power(l) * (F ** j) * (E ** i) * (EPS_MINUS ** s)
        out = out + term.scale(c.conjugate())
    return out


# ---------------------------------------------------------------------------
# actions and evaluation
# ---------------------------------------------------------------------------


def _k_act(l: int, mono: Monomial) -> RatFunc:
    """K^l |> mono = q^{l deg/2} mono."""
    return _spow(l * mono_degree(mono))


_GEN_E = None
_GEN_F = None


def _generator_tables():
    global _GEN_E, _GEN_F
    if _GEN_E is None:
        q = _qp(1)
        _GEN_E = {
            "a": alg.C_STAR.scale(-q),
            "c": alg.A_STAR,
            "as": AlgebraElement(),
            "cs": AlgebraElement(),
        }
        _GEN_F = {
            "a": AlgebraElement(),
            "c": AlgebraElement(),
            "as": alg.C,
            "cs": alg.A.scale(-q.inverse()),
        }
    return _GEN_E, _GEN_F


_GEN_MONO = {"a": (1, 0, 0), "as": (-1, 0, 0), "c": (0, 1, 0), "cs": (0, 0, 1)}


def _raising(table_index: int):
    @lru_cache(maxsize=None)
    def act(mono: Monomial) -> AlgebraElement:
        if mono == alg.UNIT:
            return AlgebraElement()
        g, rest = split_first(mono)
        table = _generator_tables()[table_index]
        gmono = _GEN_MONO[g]
        out = AlgebraElement()
        first = table[g]
        if first:
            out = out + first * alg.mono_element(rest).scale(_k_act(1, rest))
        tail = act(rest)
        if tail:
            out = out + (alg.mono_element(gmono).scale(_k_act(-1, gmono)) * tail)
        return out

    return act


_e_act_mono = _raising(0)
_f_act_mono = _raising(1)


def _apply_mono_map(fn, x: AlgebraElement) -> AlgebraElement:
    out: dict = {}
    for mono, c in x.terms.items():
        for m, v in fn(mono).terms.items():
            _accumulate(out, m, c * v)
    return AlgebraElement._raw(out)


@lru_cache(maxsize=None)
def act_word_mono(w: Word, mono: Monomial) -> AlgebraElement:
    """(eps^s F^i E^j K^l) |> mono."""
    s, i, j, l = w
    if j > 0:
        inner = act_word_mono((0, 0, j - 1, l), mono)
        x = _apply_mono_map(_e_act_mono, inner)
    else:
        x = alg.mono_element(mono).scale(_k_act(l, mono))
    for _ in range(i):
        x = _apply_mono_map(_f_act_mono, x)
    if s:
        x = AlgebraElement._raw(
            {m: (-c if sum(map(abs, m)) % 2 else c) for m, c in x.terms.items()}
        )
    return x


def act_left(f: Functional, h: AlgebraElement) -> AlgebraElement:
    """X |> h = h_(1) X(h_(2))."""
    out: dict = {}
    for w, cw in f.terms.items():
        for mono, ch in h.terms.items():
            c = cw * ch
            for m, v in act_word_mono(w, mono).terms.items():
                _accumulate(out, m, c * v)
    return AlgebraElement._raw(out)


@lru_cache(maxsize=None)
def evaluate_word(w: Word, mono: Monomial) -> RatFunc:
    return alg.counit(act_word_mono(w, mono))


def evaluate(f: Functional, h: AlgebraElement) -> RatFunc:
    """The pairing <f, h>."""
    total = ZERO
    for w, cw in f.terms.items():
        for mono, ch in h.terms.items():
            v = evaluate_word(w, mono)
            if v:
                total = total + cw * ch * v
    return total


def act_right(h: AlgebraElement, f: Functional) -> AlgebraElement:
    """h <| X = X(h_(1)) h_(2)."""
    out = AlgebraElement()
    for (ml, mr), c in alg.coproduct(h).terms.items():
        v = evaluate(f, alg.mono_element(ml))
        if v:
            out = out + alg.mono_element(mr).scale(c * v)
    return out


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------


def format_word(w: Word) -> str:
    s, i, j, l = w
    parts = []
    if s:
        parts.append("epsm")
    if i:
        parts.append("F" if i == 1 else f"F^{i}")
    if j:
        parts.append("E" if j == 1 else f"E^{j}")
    if l:
        parts.append("K" if l == 1 else f"K^{l}")
    return " ".join(parts) if parts else "1"


def format_functional(f: Functional) -> str:
    if not f.terms:
        return "0"
    return " + ".join(f"({f.terms[w]}) * {format_word(w)}" for w in sorted(f.terms))


def parse_word(text: str) -> Word:
    s = i = j = l = 0
    text = text.strip()
    if text == "1":
        return UNIT_WORD
    for tok in text.split():
        name, _, exp = tok.partition("^")
        e = int(exp) if exp else 1
        if name == "epsm":
            s = (s + e) % 2
        elif name == "F":
            i += e
        elif name == "E":
            j += e
        elif name == "K":
            l += e
        else:
            raise ValueError(f"bad token {tok!r}")
    return (s, i, j, l)
