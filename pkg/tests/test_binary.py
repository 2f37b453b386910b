from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from fano12.binary import (
    T_NAMES,
    binary_form,
    binary_gcd,
    binary_quotient,
    binary_resultant,
    divides,
    divisor_of,
    is_squarefree,
)
from fano12.field import PHI, QQ, QQ5
from fano12.poly import Poly, gens
from fano12.projpoint import ProjPoint
from oracles import to_sympy

T0, T1 = sp.symbols("t0 t1")
forms = st.lists(st.integers(-6, 6), min_size=1, max_size=6).filter(any).map(binary_form)


def test_divisor_with_boundary_roots():
    t0, t1 = gens(2, QQ, T_NAMES)
    div = divisor_of(t0**2 * t1**2 * (t0 - t1))
    assert str(div) == "2*(0 : 1) + 2*(1 : 0) + (1 : 1)"
    assert div.degree == 5 and not div.is_reduced()


def test_quintic_residue_stays_together():
    t0, t1 = gens(2, QQ, T_NAMES)
    div = divisor_of(t1**5 - t0**5)
    assert div.points() == {ProjPoint((1, 1)): 1}
    assert div.degree == 5
    assert [f.degree for f in div] == [1, 4]


def test_roots_over_extension():
    t0, t1 = gens(2, QQ5, T_NAMES)
    p2 = PHI * PHI
    f = (t0.scale(p2) + t1) * (t0 + t1.scale(p2))
    pts = divisor_of(f).points()
    assert set(pts) == {ProjPoint((1, -p2), QQ5), ProjPoint((1, -p2.inverse()), QQ5)}


def test_gcd_of_zero_forms():
    with pytest.raises(ValueError):
        binary_gcd(Poly.zero(2), Poly.zero(2))


def test_resultant_detects_common_root():
    t0, t1 = gens(2, QQ, T_NAMES)
    assert binary_resultant((t0 - t1) * t0, (t0 - t1) * t1, 0, 1).is_zero()
    assert not binary_resultant(t0**2 + t1**2, t0 * t1, 0, 1).is_zero()


@given(forms, forms)
def test_gcd_divides_both_and_matches_sympy(f, g):
    d = binary_gcd(f, g)
    assert divides(d, f) and divides(d, g)
    ref = sp.Poly(sp.gcd(to_sympy(f, (T0, T1)), to_sympy(g, (T0, T1))), T0, T1)
    assert d.total_degree() == ref.total_degree()


@given(forms, forms)
def test_quotient_roundtrip(f, g):
    q = binary_quotient(f * g, g)
    assert q is not None and q * g == f * g


@given(forms)
def test_factorization_reassembles(f):
    prod = Poly.const(1, 2, QQ, T_NAMES)
    for fac in divisor_of(f):
        prod = prod * fac.form**fac.multiplicity
    assert prod.is_proportional(f) is not None
    expr = to_sympy(f, (T0, T1))
    assert is_squarefree(f) == (sp.Poly(expr, T0, T1).sqf_part().total_degree() == f.total_degree())


@given(forms, forms)
def test_resultant_matches_sympy(f, g):
    if f.total_degree() == 0 or g.total_degree() == 0:
        return
    ours = binary_resultant(f, g, 0, 1)
    ref = sp.resultant(to_sympy(f, (T0, T1)).subs(T0, 1), to_sympy(g, (T0, T1)).subs(T0, 1), T1)
    # sympy works affinely; the forms agree when neither drops degree at t0 = 1
    if f.coefficient((0, f.total_degree())) != 0 and g.coefficient((0, g.total_degree())) != 0:
        assert abs(ours.coefficient((0, 0))) == abs(Fraction(int(sp.numer(ref)), int(sp.denom(ref))))
    assert ours.is_zero() == (binary_gcd(f, g).total_degree() > 0)
