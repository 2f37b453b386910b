from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fano12.field import (
    PHI,
    QQ,
    QQ5,
    SQRT5,
    QExt,
    field_of,
    format_scalar,
    parse_scalar,
    pretty_scalar,
    promote,
    qext_is_rational,
)

rationals = st.builds(Fraction, st.integers(-10**4, 10**4), st.integers(1, 60))
qexts = st.builds(QExt, rationals, rationals)


def test_golden_ratio_identities():
    assert PHI * PHI == PHI + 1
    assert PHI * PHI.conjugate() == -1
    assert SQRT5 * SQRT5 == 5
    assert (3 - PHI**2) * (1 - 3 * PHI**2) == -(PHI**2)
    assert PHI**-2 == 2 - PHI


def test_phi_tenth_power():
    # phi^n = F(n) phi + F(n-1)
    assert PHI**10 == 55 * PHI + 34


def test_mixing_requires_promotion():
    with pytest.raises(TypeError):
        PHI + Fraction(1, 2)
    assert PHI + promote(Fraction(1, 2)) == QExt(1, Fraction(1, 2))
    assert PHI + 1 == QExt(Fraction(3, 2), Fraction(1, 2))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        QExt(0, 0).inverse()
    with pytest.raises(ZeroDivisionError):
        PHI / QExt(0)


def test_rational_detection_and_fields():
    assert qext_is_rational(QExt(3, 0)) == 3
    assert qext_is_rational(PHI) is None
    assert field_of(PHI) is QQ5 and field_of(Fraction(1, 3)) is QQ
    with pytest.raises(TypeError):
        QQ(PHI)


def test_formatting():
    assert format_scalar(Fraction(-1, 2)) == "-1/2"
    assert format_scalar(PHI) == "1/2+1/2*sqrt5"
    assert pretty_scalar(QExt(3)) == "3"
    assert pretty_scalar(PHI) == "(1/2+1/2*sqrt5)"
    with pytest.raises(ValueError):
        parse_scalar("1/2 + sqrt5")


def test_immutability():
    with pytest.raises(AttributeError):
        PHI.r = 3


@given(qexts, qexts, qexts)
def test_field_axioms(a, b, c):
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0 and a + 0 == a and a * 1 == a
    if a != 0:
        assert a * a.inverse() == 1


@given(qexts, qexts)
def test_norm_and_conjugation_multiplicative(a, b):
    assert (a * b).norm() == a.norm() * b.norm()
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert a.trace() == (a + a.conjugate()).r


@given(st.one_of(rationals, qexts))
def test_serialization_roundtrip(x):
    y = parse_scalar(format_scalar(x))
    assert y == x and type(y) is type(x)


@given(qexts)
def test_hash_consistent_with_equality(a):
    if a.s == 0:
        assert hash(a) == hash(a.r) and a == a.r
