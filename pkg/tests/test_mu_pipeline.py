from fractions import Fraction

import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from fano12.field import PHI, QExt
from fano12.mukai_umemura import (
    build_boundary_param,
    conic_orbit_certificate,
    displayed_coordinate_change,
    gamma_image_over_extension,
    identify_mu_quadric,
    m12_weights,
    mu_quadric_expected,
    normalize_integer,
    phi12_coefficients,
    unique_quadric_through_boundary,
    weight_zero_shift,
)
from fano12.poly import format_poly
from oracles import from_sympy_scalar, to_sympy, to_sympy_scalar

A, B, X, Yv = sp.symbols("a b x y")
Z = sp.symbols("z3 z4 z6 z8 z9")
Yc = sp.symbols("y0 y1 y3 y5 y6")
PHI_S = (1 + sp.sqrt(5)) / 2
INDICES = (3, 4, 6, 8, 9)


def _sympy_boundary():
    f = sp.Poly(sp.expand((X + A * Yv) * (X + B * Yv) ** 11), X, Yv)
    return [sp.expand(f.coeff_monomial(X ** (12 - i) * Yv**i)) for i in INDICES]


def test_boundary_matches_independent_expansion():
    param = build_boundary_param()
    ref = _sympy_boundary()
    for i, r in zip(INDICES, ref):
        assert to_sympy(param.polys[i], (A, B)) == r
    assert format_poly(param.polys[3]) == "55*a*b^2 + 165*b^3"


def test_diagonal_collapses_to_binomials():
    param = build_boundary_param()
    vals = [param.polys[i].evaluate([1, 1]) for i in INDICES]
    assert vals == [220, 495, 924, 495, 220]
    assert [v / 11 for v in vals] == [20, 45, 84, 45, 20]


def test_unique_quadric_against_sympy_nullspace():
    q, piece = unique_quadric_through_boundary()
    assert format_poly(q) == "1764*z3*z9 - 784*z4*z8 + 125*z6^2"
    assert piece.rank == 14 and piece.dim == 1
    coords = _sympy_boundary()
    mons = [Z[i] * Z[j] for i in range(5) for j in range(i, 5)]
    imgs = [sp.Poly(sp.expand(m.subs(dict(zip(Z, coords)))), A, B) for m in mons]
    keys = sorted({k for p in imgs for k in p.monoms()})
    mat = sp.Matrix([[p.coeff_monomial(A ** k[0] * B ** k[1]) for p in imgs] for k in keys])
    (ns,) = mat.nullspace()
    ref = sp.expand(sum(c * m for c, m in zip(ns, mons)))
    assert sp.simplify(ref / to_sympy(q, Z)).is_constant()


def test_gamma_branches_and_factors():
    img = gamma_image_over_extension()
    k1, k2 = img.factors
    assert k1 == 11
    assert k2 == -11 * PHI**10
    coords = _sympy_boundary()
    t = sp.symbols("t")
    shown = [to_sympy_scalar(c) for c in displayed_coordinate_change()]
    for i, (ab, k) in enumerate((((-PHI_S**2 * t, t), 11), ((t, -PHI_S**2 * t), -11 * PHI_S**10))):
        for j, (c, e) in enumerate(zip(coords, (0, 1, 3, 5, 6))):
            val = sp.expand(c.subs({A: ab[0], B: ab[1]}))
            assert sp.simplify(val - k * shown[j] * t ** (3 + e)) == 0


def test_identification():
    mu = identify_mu_quadric()
    assert mu.coordinate_change == displayed_coordinate_change()
    assert mu.pair == (-1, 4) and mu.u == Fraction(-1, 4)
    assert mu.common_factor == 44100 * PHI**2
    assert format_poly(mu.rational_quadric) == "y0*y6 + 4*y1*y5 - 5*y3^2"


def test_identification_oracle_in_sympy():
    shown = [to_sympy_scalar(c) for c in displayed_coordinate_change()]
    q = to_sympy(mu_quadric_expected(), Z)
    sub = sp.expand(q.subs({z: c * y for z, c, y in zip(Z, shown, Yc)}))
    target = -Yc[0] * Yc[4] - 4 * Yc[1] * Yc[3] + 5 * Yc[2] ** 2
    ratio = sp.nsimplify(sp.simplify(sub / target), [sp.sqrt(5)])
    assert sp.simplify(ratio - 44100 * PHI_S**2) == 0
    assert from_sympy_scalar(ratio) == 44100 * PHI**2


def test_branch_choice_does_not_matter():
    assert identify_mu_quadric(branch=1).pair == (-1, 4)


nonzero = st.tuples(st.integers(-5, 5), st.integers(-5, 5)).filter(lambda p: p != (0, 0))


@given(nonzero)
def test_rescaling_the_change_does_not_matter(rs):
    mu = identify_mu_quadric(rescale=QExt(*rs))
    assert mu.pair == (-1, 4)


def test_weights_and_shift():
    w = m12_weights()
    assert [w[i] for i in INDICES] == [-3, -2, 0, 2, 3]
    assert all(w[i] == i - 6 for i in range(13))
    assert phi12_coefficients() == {1: 1, 6: 11, 11: 1}
    assert weight_zero_shift() == 11


def test_conic_orbit():
    cert = conic_orbit_certificate()
    assert cert.passed
    assert cert.facts["linear relations"] == ["z6 - 11*zbar"]


def test_normalize_integer():
    q, _ = unique_quadric_through_boundary()
    assert normalize_integer(q.scale(Fraction(-3, 7))) == q
