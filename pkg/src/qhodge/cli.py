"""Exact Hodge operators on quantum SU(2) and the Podles sphere.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import __version__
from . import algebra as alg
from . import checks, exterior, sphere
from .hodge import Frame, hodge_matrices, symmetry_class
from .tangent import CALCULUS_IDS

LABELS = {
    0: ("1",),
    1: ("w-", "w+", "wz"),
    2: ("w-^w+", "w+^wz", "wz^w-"),
    3: ("theta",),
}


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument parsing helpers
# ---------------------------------------------------------------------------


def parse_calculus(text: str, allow_all: bool = True) -> List[int]:
    if allow_all and text == "all":
        return list(CALCULUS_IDS)
    try:
        cid = int(text)
    except ValueError:
        raise UsageError(f"invalid calculus id {text!r}") from None
    if cid not in CALCULUS_IDS:
        raise UsageError(f"unknown calculus id {cid}; expected 1..7")
    return [cid]


def parse_sign(text: str) -> List[int]:
    table = {"both": [1, -1], "+": [1], "+1": [1], "1": [1], "-": [-1], "-1": [-1]}
    if text not in table:
        raise UsageError(f"invalid sign {text!r}; use +, - or both")
    return table[text]


def parse_q(text: str) -> Fraction:
    """A rational q = p/r, not 0 or +-1, whose square root is rational so
    that s = q^(1/2) is exact.  Returns s."""
    try:
        q0 = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--q expects a rational p/r, got {text!r}") from None
    if q0 in (0, 1, -1):
        raise UsageError("--q must avoid 0 and +-1")
    if q0 < 0:
        raise UsageError("--q must be positive so that q^(1/2) is real")
    num, den = _isqrt_exact(q0.numerator), _isqrt_exact(q0.denominator)
    if num is None or den is None:
        raise UsageError(f"--q {text}: q^(1/2) is not rational; pick q = (a/b)^2")
    return Fraction(num, den)


def _isqrt_exact(n: int) -> Optional[int]:
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None


def _emit(payload, fmt: str, out: Optional[str], text_lines: Optional[Sequence[str]] = None) -> None:
    if fmt == "json":
        body = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        body = "\n".join(text_lines if text_lines is not None else [str(payload)]) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _threads() -> int:
    raw = os.environ.get("QHODGE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"QHODGE_THREADS must be an integer, got {raw!r}") from None


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _check_names(requested: Optional[List[str]]) -> Optional[List[str]]:
    if not requested:
        return None
    names: List[str] = []
    for item in requested:
        group = checks.GROUPS.get(item, (item,))
        for name in group:
            if name not in checks.CHECK_NAMES:
                raise UsageError(f"unknown check {item!r}; choose from {', '.join(checks.CHECK_NAMES)}")
            if name not in names:
                names.append(name)
    return names


def cmd_verify(args) -> int:
    calculi = parse_calculus(args.calculus)
    signs = parse_sign(args.sign)
    names = _check_names(args.check)
    points = (parse_q(args.q),) if args.q else None
    reports = checks.verify_all(calculi, signs, names, points, threads=_threads())
    ok = all(r.passed for r in reports)
    payload = {"passed": ok, "reports": [r.to_json() for r in reports]}
    lines = []
    for r in reports:
        for c in r.checks:
            lines.append(f"calculus {r.calculus} sign {r.sign:+d}  {c.criterion:>2} {c.name:<24} {c.status.upper():<4}  {c.witness}")
    lines.append("PASS" if ok else "FAIL")
    _emit(payload, args.format, args.out, lines)
    return 0 if ok else 1


def _form_string(coords, k: int) -> str:
    parts = [f"({c}) {LABELS[k][i]}" for i, c in enumerate(coords) if c]
    return " + ".join(parts) if parts else "0"


def cmd_table(args) -> int:
    (cid,) = parse_calculus(args.calculus, allow_all=False)
    (sign,) = parse_sign(args.sign)
    if args.what == "hodge":
        h = hodge_matrices(cid, sign, args.op)
        rows = []
        for k in range(4):
            for i, label in enumerate(LABELS[k]):
                e = [1 if j == i else 0 for j in range(len(LABELS[k]))]
                rows.append({"degree": k, "source": label, "image": _form_string(h.apply(k, e), 3 - k)})
        for k in range(4):
            for i, label in enumerate(LABELS[k]):
                rows.append({"degree": k, "product": f"({label}, {label})", "value": str(h.products[k][i][i])})
        payload = {"calculus": cid, "sign": sign, "op": args.op, "rows": rows}
        lines = [
            f"{args.op}({r['source']}) = {r['image']}" if "source" in r else f"{r['product']} = {r['value']}"
            for r in rows
        ]
    else:
        branches = symmetry_class(Frame.exact(cid, sign), args.op)
        rows = [{k: str(v) for k, v in sorted(b.items())} for b in branches]
        payload = {"calculus": cid, "sign": sign, "class": f"G_{args.op}", "branches": rows}
        lines = [", ".join(f"{k} = {v}" for k, v in r.items()) for r in rows]
    _emit(payload, args.format, args.out, lines)
    return 0


MATRIX_OBJECTS = ("sigma", "antisymmetrizer2", "antisymmetrizer3")


def cmd_matrix(args) -> int:
    (cid,) = parse_calculus(args.calculus, allow_all=False)
    (sign,) = parse_sign(args.sign)
    if args.object == "sigma":
        mat = exterior.braiding(cid, sign)
    else:
        mat = exterior.antisymmetrizer(cid, sign, int(args.object[-1]))
    if args.q:
        s0 = parse_q(args.q)
        fmt = lambda x: str(x.specialize(s0))
    else:
        fmt = str
    # row i holds the image of basis tensor i
    rows = [[fmt(mat[out][i]) for out in range(len(mat))] for i in range(len(mat[0]))]
    payload = {"calculus": cid, "sign": sign, "object": args.object, "layout": "row i = image of basis tensor i", "rows": rows}
    lines = ["  ".join(r) for r in rows]
    _emit(payload, args.format, args.out, lines)
    return 0


def cmd_sphere(args) -> int:
    (sign,) = parse_sign(args.sign)
    if args.what == "probe":
        calculi = list(CALCULUS_IDS) if args.all or not args.calculus else parse_calculus(args.calculus)
        result = {}
        for cid in calculi:
            if sphere.projectability(cid) != 1:
                continue
            result[str(cid)] = sphere.probe(cid, sign)
        _emit(result, args.format, args.out, [f"{k}: {v}" for k, v in result.items()])
        return 0
    if not args.calculus:
        raise UsageError("sphere laplacian needs --calculus")
    (cid,) = parse_calculus(args.calculus, allow_all=False)
    if sphere.projectability(cid) != 1:
        raise UsageError(f"calculus {cid} is not projectable")
    if not sphere.probe(cid, sign):
        raise UsageError(f"calculus {cid} has no Hodge operator on the sphere")
    basis = sphere.monomials(args.degree)
    names = sphere.monomial_labels(args.degree)
    rows = []
    for name, f in zip(names, basis):
        image = sphere.laplacian(cid, sign, f)
        rows.append({"monomial": name, "image": alg.format_element(image), "casimir": alg.format_element(sphere.casimir(f))})
    payload = {"calculus": cid, "sign": sign, "degree": args.degree, "rows": rows}
    lines = [f"{r['monomial']}: {r['image']}" for r in rows]
    _emit(payload, args.format, args.out, lines)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qhodge", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"qhodge {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(p, calculus_default=None):
        p.add_argument("--calculus", default=calculus_default, help="calculus id 1..7")
        p.add_argument("--sign", default="+", help="braiding: + (sigma), - (sigma^-1) or both")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--out", help="write to this file instead of stdout")

    v = sub.add_parser("verify", help="run the acceptance checks")
    common(v, "all")
    v.set_defaults(sign="both")
    v.add_argument("--q", help="extra numeric point q = p/r (a rational square)")
    v.add_argument("--check", action="append", help="check name, 'sphere' or 'all'; repeatable")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="Hodge actions and products, or symmetry classes")
    t.add_argument("what", choices=("hodge", "classes"))
    common(t, "7")
    t.add_argument("--op", choices=("S", "T"), default="S")
    t.set_defaults(func=cmd_table)

    m = sub.add_parser("matrix", help="export the braiding or antisymmetrizers")
    common(m, "7")
    m.add_argument("--object", choices=MATRIX_OBJECTS, default="sigma")
    m.add_argument("--q", help="specialize at q = p/r (a rational square)")
    m.set_defaults(func=cmd_matrix)

    s = sub.add_parser("sphere", help="Hodge theory on the Podles sphere")
    s.add_argument("what", choices=("probe", "laplacian"))
    common(s)
    s.add_argument("--all", action="store_true")
    s.add_argument("--degree", type=int, default=2)
    s.set_defaults(func=cmd_sphere)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("missing command: verify, table, matrix or sphere")
        if getattr(args, "degree", 0) < 0:
            raise UsageError("--degree must be non-negative")
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"qhodge: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
