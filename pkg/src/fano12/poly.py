"""Sparse exact multivariate polynomials over QQ or QQ(sqrt5)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .field import QQ, QQ5, Field, QExt, Scalar, field_of

__all__ = ["Poly", "gens", "torus_weight", "partial_derivatives", "poly_substitute"]

Exps = tuple  # exponent vector


class Poly:
    """Immutable sparse polynomial in ``nvars`` variables.

    ``terms`` maps exponent tuples to nonzero coefficients of ``field``.
    Variable names are cosmetic: they drive printing only and never take part
    in equality.
    """

    __slots__ = ("nvars", "terms", "field", "names")

    def __init__(
        self,
        terms: Mapping[Exps, object] | None = None,
        nvars: int | None = None,
        field: Field = QQ,
        names: Sequence[str] | None = None,
    ):
        clean: dict[Exps, Scalar] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(k) for k in e)
            if nvars is None:
                nvars = len(e)
            if len(e) != nvars or min(e, default=0) < 0:
                raise ValueError(f"bad exponent vector {e} for {nvars} variables")
            c = field(c)
            if c != 0:
                clean[e] = clean[e] + c if e in clean else c
                if clean[e] == 0:
                    del clean[e]
        if nvars is None:
            raise ValueError("nvars required for the zero polynomial")
        if names is not None and len(names) != nvars:
            raise ValueError("names length differs from nvars")
        self.nvars = nvars
        self.terms = clean
        self.field = field
        self.names = tuple(names) if names is not None else None

    @classmethod
    def _raw(cls, terms, nvars, field, names):
        p = cls.__new__(cls)
        p.nvars, p.terms, p.field, p.names = nvars, terms, field, names
        return p

    # constructors

    @classmethod
    def const(cls, c, nvars: int, field: Field | None = None, names=None) -> Poly:
        field = field or field_of(c)
        return cls({(0,) * nvars: c}, nvars, field, names)

    @classmethod
    def zero(cls, nvars: int, field: Field = QQ, names=None) -> Poly:
        return cls({}, nvars, field, names)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1, field: Field = QQ, names=None) -> Poly:
        return cls({tuple(exps): coeff}, len(exps), field, names)

    # basic queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, exps: Sequence[int]) -> Scalar:
        return self.terms.get(tuple(exps), self.field.zero)

    def sorted_terms(self) -> list[tuple[Exps, Scalar]]:
        """Terms in descending lexicographic order of exponents."""
        return sorted(self.terms.items(), reverse=True)

    def leading_term(self) -> tuple[Exps, Scalar]:
        return max(self.terms.items())

    def with_names(self, names: Sequence[str]) -> Poly:
        return Poly._raw(self.terms, self.nvars, self.field, tuple(names))

    def promote(self) -> Poly:
        """Lift a rational polynomial to QQ(sqrt5) coefficients."""
        if self.field is QQ5:
            return self
        return Poly._raw({e: QQ5(c) for e, c in self.terms.items()}, self.nvars, QQ5, self.names)

    def to_rational(self) -> Poly | None:
        """Inverse of :meth:`promote`; ``None`` if some coefficient is irrational."""
        if self.field is QQ:
            return self
        out = {}
        for e, c in self.terms.items():
            if c.s != 0:
                return None
            out[e] = c.r
        return Poly._raw(out, self.nvars, QQ, self.names)

    def map_coeffs(self, fn, field: Field | None = None) -> Poly:
        return Poly({e: fn(c) for e, c in self.terms.items()}, self.nvars, field or self.field, self.names)

    # arithmetic

    def _check(self, other: Poly) -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")
        if self.field is not other.field:
            raise TypeError(f"field mismatch: {self.field} vs {other.field}; promote explicitly")

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, QExt)):
            if isinstance(other, QExt) and self.field is QQ:
                raise TypeError("QExt scalar with a rational polynomial; promote explicitly")
            return Poly.const(self.field(other), self.nvars, self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e)
            v = c if v is None else v + c
            if v == 0:
                terms.pop(e, None)
            else:
                terms[e] = v
        return Poly._raw(terms, self.nvars, self.field, self.names or other.names)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self.terms.items()}, self.nvars, self.field, self.names)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c) -> Poly:
        c = self.field(c)
        if c == 0:
            return Poly.zero(self.nvars, self.field, self.names)
        return Poly._raw({e: c * v for e, v in self.terms.items()}, self.nvars, self.field, self.names)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QExt)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Exps, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = terms.get(e)
                terms[e] = c1 * c2 if v is None else v + c1 * c2
        terms = {e: c for e, c in terms.items() if c != 0}
        return Poly._raw(terms, self.nvars, self.field, self.names or other.names)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, Poly):
            return NotImplemented
        c = self.field(c)
        return self.scale(self.field.one / c)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Poly.const(self.field.one, self.nvars, self.field, self.names)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, QExt)):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * self.nvars: other}
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # calculus and substitution

    def diff(self, i: int) -> Poly:
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1 :]
                terms[ne] = c * e[i]
        return Poly._raw(terms, self.nvars, self.field, self.names)

    def substitute(self, images: Sequence[Poly]) -> Poly:
        return poly_substitute(self, images)

    def evaluate(self, point: Sequence) -> Scalar:
        if len(point) != self.nvars:
            raise ValueError(f"arity mismatch: {self.nvars} vs {len(point)}")
        point = [self.field(x) for x in point]
        total = self.field.zero
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x**k
            total = total + v
        return total

    def is_proportional(self, other: Poly) -> Scalar | None:
        """Return ``c`` with ``self == c * other`` (``other`` nonzero), else ``None``."""
        if other.is_zero():
            return None
        if self.is_zero():
            return self.field.zero
        if self.terms.keys() != other.terms.keys():
            return None
        e0 = next(iter(other.terms))
        c = self.terms[e0] / other.terms[e0]
        if all(self.terms[e] == c * v for e, v in other.terms.items()):
            return c
        return None

    # printing

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r}, nvars={self.nvars}, field={self.field})"


def gens(nvars: int, field: Field = QQ, names: Sequence[str] | None = None) -> list[Poly]:
    """The variables of a polynomial ring, as polynomials."""
    out = []
    for i in range(nvars):
        e = [0] * nvars
        e[i] = 1
        out.append(Poly({tuple(e): 1}, nvars, field, names))
    return out


def poly_substitute(p: Poly, images: Sequence[Poly]) -> Poly:
    """Ring-homomorphic substitution ``x_i -> images[i]``."""
    if len(images) != p.nvars:
        raise ValueError(f"expected {p.nvars} images, got {len(images)}")
    if not images:
        raise ValueError("substitution needs at least one image")
    target = images[0]
    for q in images[1:]:
        if q.nvars != target.nvars:
            raise ValueError("images live in different rings")
        if q.field is not target.field:
            raise TypeError("images over different fields")
    if p.field is not target.field:
        raise TypeError(f"field mismatch: {p.field} vs {target.field}; promote explicitly")
    # cache powers, they repeat across monomials
    cache: dict[tuple[int, int], Poly] = {}

    def power(i: int, k: int) -> Poly:
        key = (i, k)
        if key not in cache:
            cache[key] = images[i] ** k
        return cache[key]

    result = Poly.zero(target.nvars, target.field, target.names)
    for e, c in p.terms.items():
        term = Poly.const(c, target.nvars, target.field, target.names)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        result = result + term
    return result


def partial_derivatives(p: Poly) -> list[Poly]:
    return [p.diff(i) for i in range(p.nvars)]


def torus_weight(p: Poly, weights: Sequence[int]) -> int | None:
    """Common weight of all terms of ``p``, or ``None`` if mixed or ``p == 0``."""
    if len(weights) != p.nvars:
        raise ValueError("weight vector length differs from nvars")
    found = {sum(w * k for w, k in zip(weights, e)) for e in p.terms}
    if len(found) == 1:
        return found.pop()
    return None


def _fmt_coeff(c: Scalar) -> tuple[str, str]:
    """Split a coefficient into (sign, magnitude-text)."""
    if isinstance(c, QExt):
        if c.s == 0:
            return _fmt_coeff(c.r)
        if c.r == 0:
            sign = "-" if c.s < 0 else "+"
            mag = abs(c.s)
            return sign, ("sqrt5" if mag == 1 else f"{mag}*sqrt5")
        return "+", "(" + str(c.r) + ("-" if c.s < 0 else "+") + _sqrt5_part(abs(c.s)) + ")"
    sign = "-" if c < 0 else "+"
    return sign, str(abs(c))


def _sqrt5_part(s: Fraction) -> str:
    return "sqrt5" if s == 1 else f"{s}*sqrt5"


def format_poly(p: Poly) -> str:
    """Canonical text: terms in descending lex order, e.g. ``y0*y6 - y3^2``."""
    if not p.terms:
        return "0"
    names = p.names or tuple(f"x{i}" for i in range(p.nvars))
    pieces = []
    for e, c in p.sorted_terms():
        mono = "*".join(
            (n if k == 1 else f"{n}^{k}") for n, k in zip(names, e) if k
        )
        sign, mag = _fmt_coeff(c)
        if mono:
            body = mono if mag == "1" else f"{mag}*{mono}"
        else:
            body = mag
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def from_int_terms(terms: Iterable[tuple[int, Sequence[int]]], nvars: int, names=None) -> Poly:
    """Build a rational polynomial from ``(coeff, exponents)`` pairs."""
    out: dict[Exps, int] = {}
    for c, e in terms:
        out[tuple(e)] = out.get(tuple(e), 0) + c
    return Poly(out, nvars, QQ, names)
