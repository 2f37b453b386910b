"""Projective geometry with torus weights.

Parametrized curves and surfaces, quadrics as symmetric Gram matrices, linear
subspaces, intersection divisors on P^1 and Jacobian rank tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .binary import P1Divisor, T_NAMES, binary_gcd_all, divisor_of
from .field import QQ, QQ5, Field
from .linalg import det_cofactor, kernel_basis, rank, rref
from .poly import Poly, gens, torus_weight
from .projpoint import ProjPoint

__all__ = [
    "WeightedProjSpace",
    "ParamCurve",
    "ParamSurface",
    "QuadricForm",
    "LinearSubspace",
    "CurveContainedError",
    "SingularityCheck",
    "quadric_singular_locus",
    "restrict_to_line",
    "intersection_divisor",
    "singular_on_family",
    "point_membership",
    "curve_contains_point",
    "coordinate_swap",
    "linear_forms_of",
]


@dataclass(frozen=True)
class WeightedProjSpace:
    labels: tuple[str, ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("coordinate labels must be distinct")
        if len(self.weights) != len(self.labels):
            raise ValueError("one weight per coordinate")

    @property
    def dim(self) -> int:
        return len(self.labels) - 1

    def coords(self, field: Field = QQ) -> list[Poly]:
        return gens(len(self.labels), field, self.labels)

    def point(self, *coords) -> ProjPoint:
        return ProjPoint(coords)

    def coordinate_point(self, label: str) -> ProjPoint:
        i = self.labels.index(label)
        return ProjPoint([1 if j == i else 0 for j in range(len(self.labels))])


def _fix_field(p: Poly, field: Field) -> Poly:
    if p.field is field:
        return p
    if field is QQ5:
        return p.promote()
    raise TypeError(f"cannot move {p.field} polynomial into {field}")


@dataclass(frozen=True)
class ParamCurve:
    """Image of P^1 under binary forms of a common degree without common factor."""

    space: WeightedProjSpace
    forms: tuple[Poly, ...]

    def __post_init__(self):
        if len(self.forms) != len(self.space.labels):
            raise ValueError("one binary form per ambient coordinate")
        degs = {f.total_degree() for f in self.forms if not f.is_zero()}
        if not degs:
            raise ValueError("all coordinate forms vanish")
        if len(degs) != 1 or not all(f.is_homogeneous() and f.nvars == 2 for f in self.forms):
            raise ValueError("coordinate forms must be binary forms of one degree")
        fields = {f.field.name for f in self.forms if not f.is_zero()}
        if len(fields) > 1:
            raise TypeError("coordinate forms over different fields")
        if binary_gcd_all(self.forms).total_degree() != 0:
            raise ValueError("coordinate forms share a common factor")

    @classmethod
    def from_exponents(cls, exps: Sequence[int], space: WeightedProjSpace | None = None) -> ParamCurve:
        """Monomial curve ``(t0^(d-e) t1^e)_e`` with ``d = max(exps)``."""
        d = max(exps)
        if space is None:
            space = WeightedProjSpace(tuple(f"y{e}" for e in exps), tuple(exps))
        forms = tuple(Poly.monomial((d - e, e), 1, QQ, T_NAMES) for e in exps)
        return cls(space, forms)

    @property
    def degree(self) -> int:
        return next(f.total_degree() for f in self.forms if not f.is_zero())

    @property
    def field(self) -> Field:
        return next(f.field for f in self.forms if not f.is_zero())

    @property
    def coords(self) -> list[Poly]:
        return self.uniform_forms()

    def uniform_forms(self) -> list[Poly]:
        fld = self.field
        return [_fix_field(f, fld) if not f.is_zero() else Poly.zero(2, fld, T_NAMES) for f in self.forms]

    def pullback(self, form: Poly) -> Poly:
        fld = QQ5 if QQ5 in (self.field, form.field) else QQ
        images = [_fix_field(f, fld) for f in self.uniform_forms()]
        return _fix_field(form, fld).substitute(images)

    def at(self, t: Sequence) -> ProjPoint:
        fld = self.field
        return ProjPoint([f.evaluate(t) for f in self.uniform_forms()], fld)


@dataclass(frozen=True)
class ParamSurface:
    """Surface given by polynomials in two affine parameters."""

    space: WeightedProjSpace
    polys: tuple[Poly, ...]
    param_names: tuple[str, str] = ("a", "b")

    def __post_init__(self):
        if len(self.polys) != len(self.space.labels):
            raise ValueError("one polynomial per ambient coordinate")
        if all(p.is_zero() for p in self.polys):
            raise ValueError("all coordinate polynomials vanish")
        if any(p.nvars != 2 for p in self.polys):
            raise ValueError("surface parametrizations use two parameters")

    @property
    def field(self) -> Field:
        return next(p.field for p in self.polys if not p.is_zero())

    @property
    def degree_bounds(self) -> tuple[int, ...]:
        return tuple(max(p.total_degree(), 0) for p in self.polys)

    @property
    def coords(self) -> list[Poly]:
        fld = self.field
        return [_fix_field(p, fld) if not p.is_zero() else Poly.zero(2, fld, self.param_names) for p in self.polys]

    def pullback(self, form: Poly) -> Poly:
        fld = QQ5 if QQ5 in (self.field, form.field) else QQ
        return _fix_field(form, fld).substitute([_fix_field(p, fld) for p in self.coords])

    def at(self, params: Sequence) -> ProjPoint:
        return ProjPoint([p.evaluate(params) for p in self.coords], self.field)


class QuadricForm:
    """Quadric hypersurface stored as a symmetric Gram matrix ``M``.

    The form is ``v M v^T``; off-diagonal entries are half the mixed
    coefficients.
    """

    def __init__(self, gram: Sequence[Sequence], field: Field = QQ, names: Sequence[str] | None = None):
        n = len(gram)
        m = [[field(x) for x in row] for row in gram]
        if any(len(row) != n for row in m):
            raise ValueError("Gram matrix must be square")
        if any(m[i][j] != m[j][i] for i in range(n) for j in range(i)):
            raise ValueError("Gram matrix must be symmetric")
        if all(x == 0 for row in m for x in row):
            raise ValueError("zero quadric")
        self.gram = m
        self.field = field
        self.names = tuple(names) if names is not None else None

    @classmethod
    def from_poly(cls, q: Poly) -> QuadricForm:
        if q.is_zero() or q.total_degree() != 2 or not q.is_homogeneous():
            raise ValueError(f"not a quadratic form: {q}")
        n = q.nvars
        half = q.field(Fraction(1, 2))
        m = [[q.field.zero] * n for _ in range(n)]
        for e, c in q.terms.items():
            idx = [i for i, k in enumerate(e) for _ in range(k)]
            i, j = idx
            if i == j:
                m[i][i] = c
            else:
                m[i][j] = m[j][i] = c * half
        return cls(m, q.field, q.names)

    @property
    def size(self) -> int:
        return len(self.gram)

    def to_poly(self) -> Poly:
        n = self.size
        terms = {}
        for i in range(n):
            for j in range(i, n):
                c = self.gram[i][j] if i == j else self.gram[i][j] * 2
                if c != 0:
                    e = [0] * n
                    e[i] += 1
                    e[j] += 1
                    terms[tuple(e)] = c
        return Poly(terms, n, self.field, self.names)

    def rank(self) -> int:
        return rank(self.gram)

    def corank(self) -> int:
        return self.size - self.rank()

    def is_smooth(self) -> bool:
        return self.corank() == 0

    def __eq__(self, other):
        if not isinstance(other, QuadricForm):
            return NotImplemented
        return self.gram == other.gram

    def __repr__(self):
        return f"QuadricForm({self.to_poly()})"


@dataclass(frozen=True)
class LinearSubspace:
    """Projective linear subspace, kept both as span and as cut."""

    points: tuple[ProjPoint, ...]
    equations: tuple[tuple, ...] = dc_field(default=())

    @classmethod
    def span(cls, points: Sequence[ProjPoint]) -> LinearSubspace:
        pts = [list(p.coords) for p in points]
        if not pts:
            return cls((), ())
        r, rk, _ = rref(pts)
        basis = tuple(ProjPoint(row) for row in r[:rk])
        eqs = tuple(tuple(v) for v in kernel_basis(pts))
        return cls(basis, eqs)

    @classmethod
    def cut(cls, equations: Sequence[Sequence], n_coords: int) -> LinearSubspace:
        eqs = [list(e) for e in equations]
        if not eqs:
            eqs = [[0] * n_coords]
        r, rk, _ = rref(eqs, n_coords)
        span_vecs = kernel_basis(eqs, n_coords)
        pts = tuple(ProjPoint(v) for v in span_vecs)
        return cls(pts, tuple(tuple(row) for row in r[:rk]))

    @property
    def dim(self) -> int:
        return len(self.points) - 1

    def is_empty(self) -> bool:
        return not self.points

    def cutting_forms(self, names: Sequence[str] | None = None) -> list[Poly]:
        return linear_forms_of(self.equations, names)

    def contains(self, p: ProjPoint) -> bool:
        return all(sum((a * x for a, x in zip(eq, p.coords)), 0) == 0 for eq in self.equations)

    def __str__(self):
        if self.is_empty():
            return "{}"
        return "<" + ", ".join(str(p) for p in self.points) + ">"


def linear_forms_of(rows: Sequence[Sequence], names: Sequence[str] | None = None) -> list[Poly]:
    out = []
    for row in rows:
        n = len(row)
        out.append(Poly({tuple(1 if j == i else 0 for j in range(n)): c for i, c in enumerate(row)}, n, _row_field(row), names))
    return out


def _row_field(row) -> Field:
    from .field import QExt

    return QQ5 if any(isinstance(x, QExt) for x in row) else QQ


def quadric_singular_locus(q: QuadricForm) -> LinearSubspace:
    """Projectivized kernel of the Gram matrix (empty when the quadric is smooth)."""
    ker = kernel_basis(q.gram)
    if not ker:
        return LinearSubspace((), ())
    return LinearSubspace.span([ProjPoint(v) for v in ker])


def restrict_to_line(forms: Sequence[Poly], p: ProjPoint, q: ProjPoint) -> list[Poly]:
    """Pull forms back along ``(s : t) -> s*p + t*q``."""
    if rank([list(p.coords), list(q.coords)]) != 2:
        raise ValueError("line needs two distinct spanning points")
    fld = QQ5 if QQ5 in (p.field, q.field, *(f.field for f in forms)) else QQ
    s, t = gens(2, fld, ("s", "t"))
    images = [s * fld(a) + t * fld(b) for a, b in zip(p.coords, q.coords)]
    return [_fix_field(f, fld).substitute(images) for f in forms]


class CurveContainedError(ValueError):
    """The curve lies inside the subspace, so there is no finite intersection."""


def intersection_divisor(c: ParamCurve, cut: Sequence[Poly]) -> P1Divisor:
    """Scheme-theoretic intersection of a curve with ``{cut = 0}`` as a divisor on P^1."""
    pulled = [c.pullback(f) for f in cut]
    if all(p.is_zero() for p in pulled):
        raise CurveContainedError("curve is contained in the cut locus")
    return divisor_of(binary_gcd_all(pulled))


@dataclass(frozen=True)
class SingularityCheck:
    singular: bool
    witness: str | None = None
    minors_checked: int = 0

    def __bool__(self):
        return self.singular


def singular_on_family(equations: Sequence[Poly], family: ParamCurve | ParamSurface, codim: int) -> SingularityCheck:
    """Whether every ``codim x codim`` Jacobian minor vanishes along the family."""
    if codim < 1 or codim > len(equations):
        raise ValueError("codim must be between 1 and the number of equations")
    n = len(family.coords)
    if any(e.nvars != n for e in equations):
        raise ValueError("equations and family live in different ambient spaces")
    jac = [[family.pullback(e.diff(j)) for j in range(n)] for e in equations]
    zero = jac[0][0] - jac[0][0]
    count = 0
    for rows in combinations(range(len(equations)), codim):
        for cols in combinations(range(n), codim):
            minor = det_cofactor([[jac[r][c] for c in cols] for r in rows], zero)
            count += 1
            if not minor.is_zero():
                return SingularityCheck(False, f"rows {rows} cols {cols}: {minor}", count)
    return SingularityCheck(True, None, count)


def point_membership(p: ProjPoint, forms: Sequence[Poly]) -> bool:
    """True iff every form vanishes at ``p``."""
    for f in forms:
        if p.field is QQ5:
            f = _fix_field(f, QQ5)
        if f.evaluate(p.coords) != 0:
            return False
    return True


def curve_contains_point(c: ParamCurve, p: ProjPoint) -> bool:
    """Whether ``p`` lies on the image of ``c`` (over the algebraic closure).

    ``p`` is on the curve iff the 2x2 minors ``p_i f_j - p_j f_i`` have a
    common zero on P^1; the coordinate forms have no common zero, so such a
    zero maps to ``p``.
    """
    fld = QQ5 if QQ5 in (c.field, p.field) else QQ
    fs = [_fix_field(f, fld) for f in c.uniform_forms()]
    pc = [fld(x) for x in p.coords]
    minors = [fs[j].scale(pc[i]) - fs[i].scale(pc[j]) for i, j in combinations(range(len(fs)), 2)]
    if all(m.is_zero() for m in minors):
        return True
    return binary_gcd_all(minors).total_degree() >= 1


def coordinate_swap(p, perm: Sequence[int]):
    """Apply a coordinate permutation ``x_i -> x_perm[i]`` to a polynomial or point."""
    if isinstance(p, ProjPoint):
        return ProjPoint([p.coords[perm[i]] for i in range(len(perm))], p.field)
    if isinstance(p, Poly):
        return Poly({tuple(e[perm[i]] for i in range(len(perm))): c for e, c in p.terms.items()}, p.nvars, p.field, p.names)
    if isinstance(p, ParamCurve):
        return ParamCurve(p.space, tuple(p.forms[perm[i]] for i in range(len(perm))))
    raise TypeError(f"cannot permute {type(p).__name__}")


def weight_of(p: Poly, space: WeightedProjSpace) -> int | None:
    return torus_weight(p, space.weights)
