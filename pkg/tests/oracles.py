"""Independent reference computations built on sympy, used only by the tests."""

import sympy as sp

from fano12.field import QExt
from fano12.poly import Poly

SQRT5 = sp.sqrt(5)


def to_sympy_scalar(c):
    if isinstance(c, QExt):
        return sp.Rational(c.r.numerator, c.r.denominator) + sp.Rational(c.s.numerator, c.s.denominator) * SQRT5
    return sp.Rational(c.numerator, c.denominator)


def to_sympy(p: Poly, symbols):
    expr = sp.Integer(0)
    for e, c in p.terms.items():
        term = to_sympy_scalar(c)
        for s, k in zip(symbols, e):
            term *= s**k
        expr += term
    return sp.expand(expr)


def from_sympy_scalar(x):
    x = sp.nsimplify(sp.expand(x), [SQRT5])
    r, s = sp.expand(x).as_independent(SQRT5)
    s = sp.simplify(s / SQRT5)
    return QExt(str(sp.Rational(r)), str(sp.Rational(s)))


def sympy_matrix(m):
    return sp.Matrix([[to_sympy_scalar(x) if not isinstance(x, int) else x for x in row] for row in m])


def naive_mul(p: dict, q: dict) -> dict:
    """Schoolbook product of exponent->coefficient dicts, dropping zeros."""
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c != 0}


def naive_diff(p: dict, i: int) -> dict:
    out = {}
    for e, c in p.items():
        if e[i]:
            out[e[:i] + (e[i] - 1,) + e[i + 1 :]] = c * e[i]
    return out
