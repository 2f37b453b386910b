"""Exact coefficient fields: the rationals and Q(sqrt5).

Rationals are plain :class:`fractions.Fraction` values. Elements of the real
quadratic field are :class:`QExt` instances ``r + s*sqrt5``. The two fields
are never mixed implicitly: a ``QExt`` combines with another ``QExt`` or with
a Python ``int`` (the common subring), and a ``Fraction`` must be lifted with
:func:`promote` first.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

import mpmath

__all__ = [
    "QQ",
    "QQ5",
    "Field",
    "QExt",
    "PHI",
    "SQRT5",
    "Scalar",
    "promote",
    "qext_inverse",
    "qext_is_rational",
    "field_of",
    "format_scalar",
    "parse_scalar",
    "pretty_scalar",
]


class QExt:
    """An element ``r + s*sqrt5`` of Q(sqrt5), immutable."""

    __slots__ = ("r", "s")

    def __init__(self, r=0, s=0):
        r = _as_fraction(r)
        s = _as_fraction(s)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)

    def __setattr__(self, name, value):
        raise AttributeError("QExt is immutable")

    def _lift(self, other):
        if isinstance(other, QExt):
            return other
        if isinstance(other, int):
            return QExt(other)
        if isinstance(other, Fraction):
            raise TypeError("mixing Fraction and QExt; call promote() explicitly")
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QExt(self.r + o.r, self.s + o.s)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QExt(self.r - o.r, self.s - o.s)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QExt(o.r - self.r, o.s - self.s)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QExt(self.r * o.r + 5 * self.s * o.s, self.r * o.s + self.s * o.r)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return QExt(-self.r, -self.s)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = QExt(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> QExt:
        return QExt(self.r, -self.s)

    def norm(self) -> Fraction:
        return self.r * self.r - 5 * self.s * self.s

    def trace(self) -> Fraction:
        return 2 * self.r

    def inverse(self) -> QExt:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt5)")
        return QExt(self.r / n, -self.s / n)

    def __bool__(self):
        return bool(self.r) or bool(self.s)

    def __eq__(self, other):
        if isinstance(other, QExt):
            return self.r == other.r and self.s == other.s
        if isinstance(other, (int, Fraction)):
            return self.s == 0 and self.r == other
        return NotImplemented

    def __hash__(self):
        if self.s == 0:
            return hash(self.r)
        return hash((self.r, self.s))

    def __repr__(self):
        return f"QExt({self.r!s}, {self.s!s})"

    def __str__(self):
        return format_scalar(self)

    def to_mpc(self):
        return mpmath.mpf(self.r.numerator) / self.r.denominator + (
            mpmath.mpf(self.s.numerator) / self.s.denominator
        ) * mpmath.sqrt(5)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected a rational, got {type(x).__name__}")


Scalar = Union[Fraction, QExt]

PHI = QExt(Fraction(1, 2), Fraction(1, 2))
SQRT5 = QExt(0, 1)


class Field:
    """Coefficient field tag; calling it coerces a value into the field."""

    def __init__(self, name: str, elem_type: type):
        self.name = name
        self.elem_type = elem_type

    def __call__(self, x) -> Scalar:
        if self.elem_type is Fraction:
            if isinstance(x, QExt):
                raise TypeError("QExt value in the rational field; use qext_is_rational")
            return _as_fraction(x)
        if isinstance(x, QExt):
            return x
        return QExt(_as_fraction(x))

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def __repr__(self):
        return self.name

    def __reduce__(self):
        return (_field_by_name, (self.name,))


QQ = Field("QQ", Fraction)
QQ5 = Field("QQ(sqrt5)", QExt)


def _field_by_name(name: str) -> Field:
    return {"QQ": QQ, "QQ(sqrt5)": QQ5}[name]


def field_of(x) -> Field:
    if isinstance(x, QExt):
        return QQ5
    if isinstance(x, (int, Fraction)):
        return QQ
    raise TypeError(f"not a scalar: {x!r}")


def promote(x) -> QExt:
    """Explicit embedding Q -> Q(sqrt5)."""
    return QQ5(x)


def qext_inverse(a: QExt) -> QExt:
    return a.inverse()


def qext_is_rational(a: QExt) -> Fraction | None:
    """Return the rational value of ``a`` if its sqrt5 part vanishes."""
    if a.s == 0:
        return a.r
    return None


def _fmt_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def format_scalar(x: Scalar) -> str:
    """Serialize to ``p/q`` or ``p/q+r/s*sqrt5`` (lowest terms, no spaces)."""
    if isinstance(x, QExt):
        sign = "-" if x.s < 0 else "+"
        return f"{_fmt_fraction(x.r)}{sign}{_fmt_fraction(abs(x.s))}*sqrt5"
    return _fmt_fraction(_as_fraction(x))


def pretty_scalar(x: Scalar) -> str:
    """Compact display form: ``3``, ``-1/2``, ``(3/2+1/2*sqrt5)``."""
    if isinstance(x, QExt):
        if x.s == 0:
            return pretty_scalar(x.r)
        s = "sqrt5" if abs(x.s) == 1 else f"{abs(x.s)}*sqrt5"
        sign = "-" if x.s < 0 else "+"
        if x.r == 0:
            return ("-" if x.s < 0 else "") + s
        return f"({x.r}{sign}{s})"
    return str(_as_fraction(x))


_RAT = r"[+-]?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(rf"^(?P<r>{_RAT})(?:(?P<sign>[+-])(?P<s>\d+(?:/\d+)?)\*sqrt5)?$")


def parse_scalar(text: str) -> Scalar:
    m = _SCALAR_RE.match(text)
    if m is None:
        raise ValueError(f"malformed scalar: {text!r}")
    r = Fraction(m.group("r"))
    if m.group("s") is None:
        return r
    s = Fraction(m.group("s"))
    if m.group("sign") == "-":
        s = -s
    return QExt(r, s)
