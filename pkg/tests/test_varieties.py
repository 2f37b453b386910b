import pytest
from hypothesis import given
from hypothesis import strategies as st

from fano12.binary import T_NAMES
from fano12.field import QQ
from fano12.poly import Poly, gens
from fano12.projpoint import ProjPoint
from fano12.varieties import (
    CurveContainedError,
    LinearSubspace,
    ParamCurve,
    QuadricForm,
    WeightedProjSpace,
    coordinate_swap,
    curve_contains_point,
    intersection_divisor,
    quadric_singular_locus,
    restrict_to_line,
    singular_on_family,
)

SPACE = WeightedProjSpace(("y0", "y1", "y3", "y5", "y6"), (0, 1, 3, 5, 6))
Y = SPACE.coords()
GAMMA = ParamCurve.from_exponents((0, 1, 3, 5, 6), SPACE)


def test_projpoint_canonical_form_and_order():
    assert ProjPoint((2, 4)) == ProjPoint((1, 2)) == (3, 6)
    assert sorted([ProjPoint((1, 1)), ProjPoint((1, 0)), ProjPoint((0, 1))]) == [(0, 1), (1, 0), (1, 1)]
    with pytest.raises(ValueError):
        ProjPoint((0, 0))


def test_curve_validation():
    t0, t1 = gens(2, QQ, T_NAMES)
    with pytest.raises(ValueError):
        ParamCurve(WeightedProjSpace(("a", "b"), (0, 1)), (t0 * t0, t0 * t1))
    with pytest.raises(ValueError):
        ParamCurve(WeightedProjSpace(("a", "b"), (0, 1)), (t0 * t0, t1))


def test_quadric_gram_and_singular_loci():
    q0 = QuadricForm.from_poly(Y[0] * Y[4] - Y[2] ** 2)
    qinf = QuadricForm.from_poly(Y[2] ** 2 - Y[1] * Y[3])
    assert q0.to_poly() == Y[0] * Y[4] - Y[2] ** 2
    assert q0.rank() == 3 and qinf.rank() == 3
    assert quadric_singular_locus(q0) == LinearSubspace.span([ProjPoint((0, 1, 0, 0, 0)), ProjPoint((0, 0, 0, 1, 0))])
    assert quadric_singular_locus(QuadricForm.from_poly(Y[0] * Y[4] - Y[1] * Y[3] + Y[2] ** 2)).is_empty()


def test_intersection_divisors_of_the_sextic():
    l01 = LinearSubspace.span([ProjPoint((1, 0, 0, 0, 0)), ProjPoint((0, 1, 0, 0, 0))])
    assert str(intersection_divisor(GAMMA, l01.cutting_forms(SPACE.labels))) == "3*(1 : 0)"
    with pytest.raises(CurveContainedError):
        intersection_divisor(GAMMA, [Y[0] * Y[4] - Y[2] ** 2])


def test_point_on_curve():
    assert curve_contains_point(GAMMA, ProjPoint((1, 2, 8, 32, 64)))
    assert not curve_contains_point(GAMMA, ProjPoint((1, 2, 8, 32, 65)))
    assert not curve_contains_point(GAMMA, ProjPoint((0, 1, 0, 0, 0)))


def test_singular_on_family_finds_a_witness():
    # the cone y0*y6 - y1*y5 is singular only at P3; the sextic is smooth on it
    chk = singular_on_family([Y[0] * Y[4] - Y[1] * Y[3]], GAMMA, 1)
    assert not chk and chk.witness
    t0, t1 = gens(2, QQ, T_NAMES)
    z = Poly.zero(2, QQ, T_NAMES)
    axis = ParamCurve(SPACE, (z, t0, z, t1, z))
    assert singular_on_family([Y[0] * Y[4] - Y[2] ** 2], axis, 1)


def test_restriction_to_lines():
    p, q = ProjPoint((1, 0, 0, 0, 0)), ProjPoint((0, 0, 0, 0, 1))
    (r,) = restrict_to_line([Y[0] * Y[4] - Y[2] ** 2], p, q)
    assert str(r) == "s*t"
    with pytest.raises(ValueError):
        restrict_to_line([Y[0]], p, p)


def test_swap_symmetry_of_the_sextic():
    t0, t1 = gens(2, QQ, T_NAMES)
    swapped = coordinate_swap(GAMMA, (4, 3, 2, 1, 0))
    assert tuple(swapped.forms) == tuple(f.substitute([t1, t0]) for f in GAMMA.forms)


@given(st.integers(-30, 30), st.integers(-30, 30))
def test_parametrized_points_lie_on_curve_and_pencil(a, b):
    if a == 0 and b == 0:
        return
    pt = GAMMA.at([a, b])
    assert curve_contains_point(GAMMA, pt)
    for q in (Y[0] * Y[4] - Y[2] ** 2, Y[2] ** 2 - Y[1] * Y[3]):
        assert q.evaluate(pt.coords) == 0
