"""Graded pieces of ideals of parametrized varieties.

The degree-``d`` piece of the ideal of a parametrized variety is the kernel of
the evaluation map sending a degree-``d`` form to its pullback. The matrix is
sparse and usually block diagonal (monomial curves map monomials to
monomials, torus-invariant surfaces respect the weight grading), so kernels
are computed block by block and then brought to reduced echelon form.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

from .field import Field
from .linalg import kernel_basis, rank, rref
from .poly import Poly
from .varieties import CurveContainedError, LinearSubspace, ParamCurve, ParamSurface, intersection_divisor

__all__ = [
    "monomials",
    "EvaluationMap",
    "IdealPiece",
    "evaluation_map",
    "ideal_piece",
    "forms_through_curve",
    "forms_through_surface",
    "is_quadratically_normal",
    "QuadraticNormality",
    "span_contains",
    "same_span",
    "multisecant_degree",
    "coordinate_lines",
    "max_coordinate_secant",
]


def monomials(nvars: int, d: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total degree ``d``, descending lexicographic order."""
    if nvars == 1:
        return [(d,)]
    out = []
    for k in range(d, -1, -1):
        out.extend((k,) + rest for rest in monomials(nvars - 1, d - k))
    return out


def _monomials_upto(nvars: int, d: int) -> list[tuple[int, ...]]:
    out = []
    for k in range(d, -1, -1):
        out.extend(monomials(nvars, k))
    return out


@dataclass
class EvaluationMap:
    """Restriction of degree-``d`` forms to a parametrization.

    ``columns[j]`` is the pullback of ``source[j]`` as a sparse map
    ``target monomial -> coefficient``; ``matrix`` is the dense
    source-by-target matrix of the same data.
    """

    degree: int
    source: list[tuple[int, ...]]
    target: list[tuple[int, ...]]
    columns: list[dict]
    field: Field

    @property
    def matrix(self) -> list[list]:
        index = {t: i for i, t in enumerate(self.target)}
        zero = self.field.zero
        rows = []
        for col in self.columns:
            row = [zero] * len(self.target)
            for t, c in col.items():
                row[index[t]] = c
            rows.append(row)
        return rows

    def blocks(self) -> list[tuple[list[int], list[tuple[int, ...]]]]:
        """Connected components of the source/target incidence graph."""
        parent = list(range(len(self.source)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        owner: dict = {}
        for j, col in enumerate(self.columns):
            for t in col:
                if t in owner:
                    a, b = find(owner[t]), find(j)
                    if a != b:
                        parent[max(a, b)] = min(a, b)
                else:
                    owner[t] = j
        groups: dict[int, list[int]] = {}
        for j in range(len(self.source)):
            groups.setdefault(find(j), []).append(j)
        out = []
        for cols in groups.values():
            targets = sorted({t for j in cols for t in self.columns[j]}, reverse=True)
            out.append((cols, targets))
        return sorted(out)

    def rank_and_kernel(self) -> tuple[int, list[list]]:
        zero = self.field.zero
        total_rank = 0
        vectors = []
        for cols, targets in self.blocks():
            if not targets:
                for j in cols:
                    v = [zero] * len(self.source)
                    v[j] = self.field.one
                    vectors.append(v)
                continue
            # rows: targets, columns: sources of this block
            m = [[self.columns[j].get(t, zero) for j in cols] for t in targets]
            total_rank += rank(m, len(cols))
            for k in kernel_basis(m, len(cols)):
                v = [zero] * len(self.source)
                for j, x in zip(cols, k):
                    v[j] = x
                vectors.append(v)
        if vectors:
            r, rk, _ = rref(vectors, len(self.source))
            vectors = r[:rk]
        return total_rank, vectors


@dataclass
class IdealPiece:
    """Certificate for one graded piece: basis forms plus the rank count."""

    degree: int
    forms: list[Poly]
    rank: int
    n_source: int
    n_target: int

    @property
    def dim(self) -> int:
        return len(self.forms)

    def as_dict(self) -> dict:
        return {
            "degree": self.degree,
            "dim": self.dim,
            "rank": self.rank,
            "source_dim": self.n_source,
            "target_dim": self.n_target,
            "basis": [str(f) for f in self.forms],
        }


def evaluation_map(variety: ParamCurve | ParamSurface, d: int) -> EvaluationMap:
    if d < 1:
        raise ValueError("degree must be positive")
    coords = variety.coords
    n = len(coords)
    fld = variety.field
    source = monomials(n, d)
    cache: dict[tuple[int, int], Poly] = {}

    def power(i, k):
        if (i, k) not in cache:
            cache[(i, k)] = coords[i] ** k
        return cache[(i, k)]

    columns = []
    for e in source:
        img = Poly.const(fld.one, 2, fld)
        for i, k in enumerate(e):
            if k:
                img = img * power(i, k)
        columns.append(dict(img.terms))
    if isinstance(variety, ParamCurve):
        target = monomials(2, d * variety.degree)
    else:
        target = _monomials_upto(2, d * max(variety.degree_bounds))
    return EvaluationMap(d, source, target, columns, fld)


def ideal_piece(variety: ParamCurve | ParamSurface, d: int) -> IdealPiece:
    emap = evaluation_map(variety, d)
    rk, vectors = emap.rank_and_kernel()
    names = variety.space.labels
    forms = [Poly(dict(zip(emap.source, v)), len(names), emap.field, names) for v in vectors]
    assert rk + len(forms) == comb(len(names) + d - 1, d), "rank-nullity violated"
    return IdealPiece(d, forms, rk, len(emap.source), len(emap.target))


def forms_through_curve(c: ParamCurve, d: int) -> list[Poly]:
    return ideal_piece(c, d).forms


def forms_through_surface(s: ParamSurface, d: int) -> list[Poly]:
    return ideal_piece(s, d).forms


@dataclass
class QuadraticNormality:
    normal: bool
    rank: int
    kernel_dim: int
    target_dim: int

    def __bool__(self):
        return self.normal


def is_quadratically_normal(c: ParamCurve) -> QuadraticNormality:
    """Quadrics restrict onto the complete linear system of degree ``2 deg`` on P^1."""
    piece = ideal_piece(c, 2)
    return QuadraticNormality(piece.rank == piece.n_target, piece.rank, piece.dim, piece.n_target)


def _coeff_rows(forms: Sequence[Poly]) -> tuple[list[list], list]:
    keys = sorted({e for f in forms for e in f.terms}, reverse=True)
    fld = forms[0].field
    return [[f.terms.get(k, fld.zero) for k in keys] for f in forms], keys


def span_contains(basis: Sequence[Poly], f: Poly) -> bool:
    """Whether ``f`` is a linear combination of ``basis``."""
    if f.is_zero():
        return True
    if not basis:
        return False
    rows, _ = _coeff_rows(list(basis) + [f])
    return rank(rows[:-1]) == rank(rows)


def same_span(a: Sequence[Poly], b: Sequence[Poly]) -> bool:
    """Mutual membership of two families of forms."""
    return all(span_contains(b, f) for f in a) and all(span_contains(a, f) for f in b)


def multisecant_degree(c: ParamCurve, line: LinearSubspace | Sequence[Poly]) -> int:
    """Length of the scheme ``line ∩ curve``; raises if the curve lies on the line."""
    cut = line.cutting_forms(c.space.labels) if isinstance(line, LinearSubspace) else list(line)
    return intersection_divisor(c, cut).degree


def coordinate_lines(n_coords: int) -> list[tuple[tuple[int, int], LinearSubspace]]:
    """All lines spanned by two coordinate points."""
    out = []
    for i, j in combinations(range(n_coords), 2):
        eqs = [[1 if k == m else 0 for k in range(n_coords)] for m in range(n_coords) if m not in (i, j)]
        out.append(((i, j), LinearSubspace.cut(eqs, n_coords)))
    return out


def max_coordinate_secant(c: ParamCurve) -> tuple[int, tuple[str, str] | None]:
    """Largest intersection length of the curve with a coordinate line."""
    best, where = 0, None
    labels = c.space.labels
    for (i, j), line in coordinate_lines(len(labels)):
        try:
            k = multisecant_degree(c, line)
        except CurveContainedError:
            continue
        if k > best:
            best, where = k, (labels[i], labels[j])
    return best, where
