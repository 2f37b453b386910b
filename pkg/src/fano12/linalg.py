"""Dense exact linear algebra over QQ or QQ(sqrt5).

Matrices are plain lists of rows. Elimination normalizes every pivot to 1 and
picks the first nonzero entry in each column; there is no magnitude pivoting
since the arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .field import QExt, promote

__all__ = [
    "Matrix",
    "rref",
    "rank",
    "kernel_basis",
    "solve_linear",
    "det",
    "det_cofactor",
    "mat_vec",
    "identity",
]

Matrix = list  # list of rows


def identity(n: int, one=1, zero=0) -> Matrix:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def _copy(m: Sequence[Sequence]) -> Matrix:
    """Copy with entries coerced into one field (ints would become floats under "/")."""
    if any(isinstance(x, QExt) for row in m for x in row):
        return [[x if isinstance(x, QExt) else promote(x) for x in row] for row in m]
    return [[Fraction(x) if isinstance(x, int) else x for x in row] for row in m]


def rref(m: Sequence[Sequence], ncols: int | None = None) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form; returns (R, rank, pivot columns)."""
    a = _copy(m)
    nrows = len(a)
    if ncols is None:
        ncols = len(a[0]) if a else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        piv = a[r][c]
        row = a[r]
        for j in range(c, ncols):
            if row[j] != 0:
                row[j] = row[j] / piv
        for i in range(nrows):
            if i != r:
                f = a[i][c]
                if f != 0:
                    other = a[i]
                    for j in range(c, ncols):
                        if row[j] != 0:
                            other[j] = other[j] - f * row[j]
        pivots.append(c)
        r += 1
    return a, len(pivots), pivots


def _unit(a: Matrix):
    if any(isinstance(x, QExt) for row in a for x in row):
        return QExt(0), QExt(1)
    return Fraction(0), Fraction(1)


def rank(m: Sequence[Sequence], ncols: int | None = None) -> int:
    return rref(m, ncols)[1]


def kernel_basis(m: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    """Echelon-normalized basis of the right null space.

    One vector per free column ``f``: entry ``f`` is 1, other free entries 0.
    """
    if ncols is None:
        ncols = len(m[0]) if m else 0
    r, rk, pivots = rref(m, ncols)
    zero, one = _unit(r)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for i, p in enumerate(pivots):
            v[p] = -r[i][f]
        basis.append(v)
    return basis


def solve_linear(m: Sequence[Sequence], b: Sequence) -> list | None:
    """A solution of ``m x = b`` (free variables 0), or ``None`` if inconsistent."""
    ncols = len(m[0]) if m else 0
    aug = [list(row) + [bi] for row, bi in zip(m, b)]
    r, rk, pivots = rref(aug, ncols + 1)
    zero, _ = _unit(r)
    if ncols in pivots:
        return None
    x = [zero] * ncols
    for i, p in enumerate(pivots):
        x[p] = r[i][ncols]
    return x


def mat_vec(m: Sequence[Sequence], v: Sequence, zero=0) -> list:
    out = []
    for row in m:
        acc = zero
        for a, x in zip(row, v):
            if a != 0 and x != 0:
                acc = acc + a * x
        out.append(acc)
    return out


def det(m: Sequence[Sequence], one=1):
    """Determinant by elimination over a field."""
    a = _copy(m)
    n = len(a)
    result = one
    for c in range(n):
        pr = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pr is None:
            return one - one
        if pr != c:
            a[c], a[pr] = a[pr], a[c]
            result = -result
        piv = a[c][c]
        result = result * piv
        for i in range(c + 1, n):
            f = a[i][c] / piv
            if f != 0:
                for j in range(c, n):
                    a[i][j] = a[i][j] - f * a[c][j]
    return result


def det_cofactor(m: Sequence[Sequence], zero):
    """Laplace expansion over any commutative ring (no division).

    Row ``i`` is expanded against the set of columns still unused; minors are
    memoized by that set, so the cost is ``O(n 2^n)`` ring operations.
    """
    n = len(m)
    if n == 0:
        return zero + 1
    memo: dict[int, object] = {}

    def minor(i: int, cols: int):
        # determinant of rows i.. against the columns in bitmask ``cols``
        if i == n:
            return zero + 1
        if cols in memo:
            return memo[cols]
        total = zero
        sign_pos = 0
        for j in range(n):
            if not cols >> j & 1:
                continue
            a = m[i][j]
            if a != 0:
                term = a * minor(i + 1, cols & ~(1 << j))
                total = total + term if sign_pos % 2 == 0 else total - term
            sign_pos += 1
        memo[cols] = total
        return total

    return minor(0, (1 << n) - 1)
