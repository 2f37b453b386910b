"""Pencils of quadrics ``u0*q0 + u1*qinf``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from .binary import divisor_of
from .field import QQ, Field
from .linalg import det, rank, solve_linear
from .poly import Poly
from .projpoint import ProjPoint
from .varieties import ParamCurve, ParamSurface, QuadricForm, point_membership

__all__ = [
    "QuadricPencil",
    "DegeneratePencilError",
    "pencil_discriminant",
    "singular_members",
    "base_locus_contains",
    "express_in_pencil",
    "pencil_pair",
    "affine_parameter",
]

U_NAMES = ("u0", "u1")


class DegeneratePencilError(ValueError):
    """Every member of the pencil is singular."""


@dataclass(frozen=True)
class QuadricPencil:
    q0: QuadricForm
    qinf: QuadricForm

    def __post_init__(self):
        if self.q0.size != self.qinf.size:
            raise ValueError("generators live in different spaces")
        rows = [_upper(self.q0), _upper(self.qinf)]
        if rank(rows) != 2:
            raise ValueError("pencil generators are proportional")

    @classmethod
    def from_polys(cls, q0: Poly, qinf: Poly) -> QuadricPencil:
        return cls(QuadricForm.from_poly(q0), QuadricForm.from_poly(qinf))

    @property
    def field(self) -> Field:
        return self.q0.field

    @property
    def size(self) -> int:
        return self.q0.size

    def gram_at(self, u0, u1) -> list[list]:
        f = self.field
        u0, u1 = f(u0), f(u1)
        return [[u0 * a + u1 * b for a, b in zip(r0, r1)] for r0, r1 in zip(self.q0.gram, self.qinf.gram)]

    def member(self, u0, u1) -> QuadricForm:
        return QuadricForm(self.gram_at(u0, u1), self.field, self.q0.names)

    def member_poly(self, u0, u1) -> Poly:
        return self.member(u0, u1).to_poly()

    def describe_member(self, u0, u1) -> str:
        return f"{u0}*Q0 + {u1}*Qinf = {self.member_poly(u0, u1)}"


def _upper(q: QuadricForm) -> list:
    n = q.size
    return [q.gram[i][j] for i in range(n) for j in range(i, n)]


def pencil_discriminant(p: QuadricPencil) -> Poly:
    """``det(u0*M0 + u1*Minf)`` as a binary form of degree ``n+1`` in ``(u0, u1)``.

    Computed by evaluating the determinant at ``(1, k)`` for ``k = 0..n+1``
    and at ``(0, 1)``, then interpolating the dehomogenized polynomial.
    """
    f = p.field
    deg = p.size
    ks = list(range(deg + 1))
    values = [det(p.gram_at(1, k), f.one) for k in ks]
    vander = [[f(k) ** j for j in range(deg + 1)] for k in ks]
    coeffs = solve_linear(vander, values)
    # coefficient of u0^(deg-j) u1^j is coeffs[j]
    disc = Poly({(deg - j, j): c for j, c in enumerate(coeffs)}, 2, f, U_NAMES)
    top = det(p.gram_at(0, 1), f.one)
    if disc.coefficient((0, deg)) != top:
        raise ArithmeticError("interpolated discriminant disagrees at (0:1)")
    return disc


@dataclass(frozen=True)
class SingularMember:
    point: ProjPoint
    corank: int
    multiplicity: int

    @property
    def pair(self) -> tuple[int, int] | tuple:
        return pencil_pair(self.point)

    @property
    def u(self) -> str:
        return affine_parameter(self.point)


def singular_members(p: QuadricPencil) -> list[SingularMember]:
    """Linear factors of the discriminant with the corank of each member."""
    disc = pencil_discriminant(p)
    if disc.is_zero():
        raise DegeneratePencilError("discriminant vanishes identically")
    out = []
    for fac in divisor_of(disc):
        if fac.point is None:
            continue
        u0, u1 = fac.point.coords
        out.append(SingularMember(fac.point, p.member(u0, u1).corank(), fac.multiplicity))
    return out


def base_locus_contains(p: QuadricPencil, x: ProjPoint | ParamCurve | ParamSurface) -> bool:
    """Whether both generators vanish on a point or identically on a parametrization."""
    gens = [p.q0.to_poly(), p.qinf.to_poly()]
    if isinstance(x, ProjPoint):
        return point_membership(x, gens)
    return all(x.pullback(g).is_zero() for g in gens)


def express_in_pencil(p: QuadricPencil, q: QuadricForm | Poly) -> ProjPoint | None:
    """The pencil parameter of ``q`` (up to scale), or ``None`` if ``q`` is not a member."""
    if isinstance(q, Poly):
        q = QuadricForm.from_poly(q)
    if q.size != p.size:
        return None
    fld = p.field if p.field is q.field else _common(p.field, q.field)
    cols = [[fld(x) for x in _upper(p.q0)], [fld(x) for x in _upper(p.qinf)]]
    m = [[a, b] for a, b in zip(*cols)]
    sol = solve_linear(m, [fld(x) for x in _upper(q)])
    if sol is None:
        return None
    return ProjPoint(sol, fld)


def _common(a: Field, b: Field) -> Field:
    from .field import QQ5

    return QQ5 if QQ5 in (a, b) else QQ


def pencil_pair(point: ProjPoint) -> tuple:
    """Primitive integer representative of a rational pencil parameter.

    The sign is fixed by making the last nonzero entry positive, so the
    Mukai-Umemura member reads ``(-1, 4)``.
    """
    coords = point.coords
    if any(not isinstance(c, Fraction) for c in coords):
        return tuple(coords)
    den = lcm(*(c.denominator for c in coords))
    ints = [int(c * den) for c in coords]
    g = gcd(*ints)
    ints = [k // g for k in ints]
    last = next(k for k in reversed(ints) if k != 0)
    if last < 0:
        ints = [-k for k in ints]
    return tuple(ints)


def affine_parameter(point: ProjPoint) -> str:
    """``u = u0/u1`` as text, ``inf`` when ``u1 = 0``."""
    u0, u1 = point.coords
    if u1 == 0:
        return "inf"
    return str(u0 / u1)
