"""Binary forms: gcd, squarefree decomposition, linear factors, resultants.

A binary form is a homogeneous :class:`Poly` in two variables ``(t0, t1)``.
Internally forms are dehomogenized at ``t0 = 1`` into dense coefficient lists
(lowest degree first) and handled with Euclid's algorithm; powers of ``t0``
and ``t1`` are split off beforehand so the round trip is lossless.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

import mpmath

from .field import QQ, Field, QExt, Scalar
from .poly import Poly
from .projpoint import ProjPoint

__all__ = [
    "Factor",
    "P1Divisor",
    "binary_form",
    "normalize_form",
    "binary_gcd",
    "squarefree_and_roots",
    "linear_form_at",
    "binary_resultant",
    "is_squarefree",
]

T_NAMES = ("t0", "t1")


def binary_form(coeffs: Sequence, field: Field = QQ, names=T_NAMES) -> Poly:
    """Form ``sum c_k t0^(d-k) t1^k`` from ``coeffs = [c_0, ..., c_d]``."""
    d = len(coeffs) - 1
    return Poly({(d - k, k): c for k, c in enumerate(coeffs)}, 2, field, names)


def _check_form(f: Poly) -> None:
    if f.nvars != 2:
        raise ValueError("binary forms have exactly two variables")
    if not f.is_homogeneous():
        raise ValueError(f"not homogeneous: {f}")


def normalize_form(f: Poly) -> Poly:
    """Scale so the lex-leading coefficient (highest power of t0) is 1."""
    if f.is_zero():
        return f
    return f.scale(f.field.one / f.leading_term()[1])


# dense univariate helpers, coefficient lists lowest degree first


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _udivmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv = 1 / b[-1] if not isinstance(b[-1], int) else Fraction(1, b[-1])
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        c = a[-1] * inv
        q[k] = c
        for i, bc in enumerate(b):
            a[i + k] = a[i + k] - c * bc
        a.pop()
        _trim(a)
    return _trim(q), a


def _umonic(a: list) -> list:
    lead = a[-1]
    return [c / lead for c in a]


def _ugcd(a: list, b: list) -> list:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _udivmod(a, b)[1]
    return _umonic(a) if a else a


def _uderiv(a: list) -> list:
    return _trim([c * k for k, c in enumerate(a)][1:])


def _umul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _trim(out)


def _split_form(f: Poly) -> tuple[int, int, list, int]:
    """Write ``f = t0^a * t1^b * h`` and return (a, b, dehomogenized h, deg h)."""
    _check_form(f)
    d = f.total_degree()
    a = min(e[0] for e in f.terms)
    b = min(e[1] for e in f.terms)
    h_deg = d - a - b
    dense = [f.field.zero] * (h_deg + 1)
    for (e0, e1), c in f.terms.items():
        dense[e1 - b] = c
    return a, b, dense, h_deg


def _rehomogenize(dense: list, degree: int, field: Field, names=T_NAMES) -> Poly:
    return Poly({(degree - k, k): c for k, c in enumerate(dense)}, 2, field, names)


def binary_gcd(f: Poly, g: Poly) -> Poly:
    """Normalized gcd of two binary forms; ``gcd(f, 0)`` is ``f`` normalized."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero forms is undefined")
    if f.is_zero():
        return normalize_form(g)
    if g.is_zero():
        return normalize_form(f)
    if f.field is not g.field:
        raise TypeError("forms over different fields")
    fa, fb, fh, _ = _split_form(f)
    ga, gb, gh, _ = _split_form(g)
    h = _ugcd(fh, gh)
    a, b = min(fa, ga), min(fb, gb)
    # h(0) != 0 since both dehomogenized parts have nonzero constant terms
    core = _rehomogenize(h, len(h) - 1, f.field, f.names)
    t0, t1 = Poly.monomial((1, 0), 1, f.field, f.names), Poly.monomial((0, 1), 1, f.field, f.names)
    return normalize_form(core * t0**a * t1**b)


def binary_gcd_all(forms: Sequence[Poly]) -> Poly:
    nonzero = [f for f in forms if not f.is_zero()]
    if not nonzero:
        raise ValueError("all forms are zero")
    g = normalize_form(nonzero[0])
    for f in nonzero[1:]:
        g = binary_gcd(g, f)
    return g


def divides(g: Poly, f: Poly) -> bool:
    """Exact divisibility of binary forms."""
    return binary_quotient(f, g) is not None


def binary_quotient(f: Poly, g: Poly) -> Poly | None:
    """``f / g`` when ``g`` divides ``f`` exactly, else ``None``."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero form")
    if f.is_zero():
        return f
    fa, fb, fh, _ = _split_form(f)
    ga, gb, gh, _ = _split_form(g)
    if ga > fa or gb > fb:
        return None
    q, r = _udivmod(fh, gh)
    if r:
        return None
    deg = f.total_degree() - g.total_degree()
    t_pow = Poly.monomial((fa - ga, fb - gb), 1, f.field, f.names)
    qf = _rehomogenize(q, len(q) - 1, f.field, f.names) * t_pow
    if qf.total_degree() != deg:
        return None
    return qf


def is_squarefree(f: Poly) -> bool:
    """True iff ``f`` has no repeated factor over the algebraic closure."""
    fa, fb, fh, _ = _split_form(f)
    if fa > 1 or fb > 1:
        return False
    return len(_ugcd(fh, _uderiv(fh))) <= 1


def _yun(a: list) -> list[tuple[list, int]]:
    """Squarefree decomposition of a univariate polynomial with a(0) != 0."""
    if len(a) <= 1:
        return []
    out = []
    b = _uderiv(a)
    c = _ugcd(a, b)
    w = _udivmod(a, c)[0]
    y = _udivmod(b, c)[0]
    i = 1
    while len(w) > 1:
        z = _trim([yy - dd for yy, dd in _zip_pad(y, _uderiv(w))])
        g = _ugcd(w, z)
        if len(g) > 1:
            out.append((g, i))
        w = _udivmod(w, g)[0]
        y = _udivmod(z, g)[0]
        i += 1
    return out


def _zip_pad(a: list, b: list):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


# root search: numerical candidates, exact confirmation


def _to_mp(c: Scalar, conj: bool = False):
    if isinstance(c, QExt):
        if conj:
            c = c.conjugate()
        return c.to_mpc()
    return mpmath.mpf(c.numerator) / c.denominator


def _numeric_roots(dense: list, conj: bool = False) -> list:
    coeffs = [_to_mp(c, conj) for c in reversed(dense)]
    for steps in (100, 400, 2000):
        try:
            return mpmath.polyroots(coeffs, maxsteps=steps, extraprec=200)
        except mpmath.libmp.NoConvergence:
            continue
    raise ArithmeticError("root approximation failed to converge")


def _real(z, scale) -> bool:
    return abs(mpmath.im(z)) <= mpmath.mpf(10) ** -25 * (1 + abs(z) + scale)


def _field_roots(dense: list, field: Field) -> list[Scalar]:
    """All roots in ``field`` of a squarefree univariate polynomial.

    After scaling to a monic polynomial with integral coefficients, every root
    in the field is an algebraic integer, so rounding a sufficiently accurate
    approximation recovers it; each candidate is then confirmed exactly.
    """
    n = len(dense) - 1
    if n < 1:
        return []
    if n == 1:
        return [-dense[0] / dense[1]]
    with mpmath.workdps(80):
        if field is QQ:
            den = lcm(*(c.denominator for c in dense))
            ints = [int(c * den) for c in dense]
            lead = ints[-1]
            found = []
            for z in _numeric_roots(dense):
                if not _real(z, 0):
                    continue
                s = int(mpmath.nint(mpmath.re(z) * lead))
                cand = Fraction(s, lead)
                if _horner(ints, cand) == 0 and cand not in found:
                    found.append(cand)
            return found
        den = lcm(*(x.denominator for c in dense for x in (c.r, c.s)))
        scaled = [c * den for c in dense]
        lead = scaled[-1]
        xs = [z for z in _numeric_roots(scaled) if _real(z, 0)]
        ys = [z for z in _numeric_roots(scaled, conj=True) if _real(z, 0)]
        l1, l2 = lead.to_mpc(), lead.conjugate().to_mpc()
        found = []
        sq5 = mpmath.sqrt(5)
        for x in xs:
            for y in ys:
                b1, b2 = mpmath.re(x) * l1, mpmath.re(y) * l2
                m = int(mpmath.nint(b1 + b2))
                k = int(mpmath.nint((b1 - b2) / sq5))
                if (m - k) % 2:
                    continue
                cand = QExt(Fraction(m, 2), Fraction(k, 2)) / lead
                if cand not in found and _horner(scaled, cand) == 0:
                    found.append(cand)
        return found


def _horner(dense: list, x):
    acc = 0
    for c in reversed(dense):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class Factor:
    """One factor of a divisor on P^1; ``point`` is set for linear factors."""

    form: Poly
    multiplicity: int
    point: ProjPoint | None = None

    @property
    def degree(self) -> int:
        return self.form.total_degree()

    def __str__(self):
        label = str(self.point) if self.point is not None else f"[{self.form}]"
        return f"{self.multiplicity}*{label}" if self.multiplicity != 1 else label


@dataclass(frozen=True)
class P1Divisor:
    """Effective divisor on P^1 as a list of pairwise coprime factors."""

    factors: tuple[Factor, ...]

    @property
    def degree(self) -> int:
        return sum(f.degree * f.multiplicity for f in self.factors)

    def points(self) -> dict[ProjPoint, int]:
        return {f.point: f.multiplicity for f in self.factors if f.point is not None}

    def is_reduced(self) -> bool:
        return all(f.multiplicity == 1 for f in self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        if not self.factors:
            return "0"
        return " + ".join(str(f) for f in self.factors)


def linear_form_at(point: ProjPoint, field: Field, names=T_NAMES) -> Poly:
    """The normalized linear form vanishing at ``point`` = (p0 : p1)."""
    p0, p1 = point.coords
    return normalize_form(Poly({(1, 0): p1, (0, 1): -p0}, 2, field, names))


def squarefree_and_roots(f: Poly) -> list[Factor]:
    """Factor a binary form into linear factors and a nonlinear remainder.

    Returns factors with multiplicities. Linear factors over the coefficient
    field carry their zero as a point of P^1; whatever does not split into
    linear factors is kept together per multiplicity level. The product of
    the factors equals ``f`` up to a nonzero scalar.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero form")
    field = f.field
    a, b, h, _ = _split_form(f)
    out: list[Factor] = []
    if a:
        pt = ProjPoint((0, 1), field)
        out.append(Factor(linear_form_at(pt, field, f.names), a, pt))
    if b:
        pt = ProjPoint((1, 0), field)
        out.append(Factor(linear_form_at(pt, field, f.names), b, pt))
    residues = []
    for part, mult in _yun(h):
        rest = part
        for root in _field_roots(part, field):
            pt = ProjPoint((1, root), field)
            out.append(Factor(linear_form_at(pt, field, f.names), mult, pt))
            rest = _udivmod(rest, [-root, field.one])[0]
        if len(rest) > 1:
            residues.append(Factor(normalize_form(_rehomogenize(rest, len(rest) - 1, field, f.names)), mult))
    out.sort(key=lambda fa: fa.point)
    residues.sort(key=lambda fa: (fa.degree, fa.multiplicity))
    return out + residues


def divisor_of(f: Poly) -> P1Divisor:
    return P1Divisor(tuple(squarefree_and_roots(f)))


def binary_resultant(f: Poly, g: Poly, x: int, y: int) -> Poly:
    """Resultant of ``f, g`` viewed as binary forms in variables ``x, y``.

    Coefficients live in the remaining variables; the result is the Sylvester
    determinant, a polynomial free of ``x`` and ``y``.
    """
    from .linalg import det_cofactor

    def coeffs(p: Poly) -> list[Poly]:
        d = max(e[x] + e[y] for e in p.terms)
        out = [Poly.zero(p.nvars, p.field, p.names) for _ in range(d + 1)]
        for e, c in p.terms.items():
            if e[x] + e[y] != d:
                raise ValueError("not homogeneous in the eliminated pair")
            k = e[y]
            rest = list(e)
            rest[x] = rest[y] = 0
            out[k] = out[k] + Poly({tuple(rest): c}, p.nvars, p.field, p.names)
        return out  # out[k] multiplies x^(d-k) y^k

    fc, gc = coeffs(f), coeffs(g)
    m, n = len(fc) - 1, len(gc) - 1
    zero = Poly.zero(f.nvars, f.field, f.names)
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(fc):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(gc):
            row[i + k] = c
        rows.append(row)
    return det_cofactor(rows, zero)
