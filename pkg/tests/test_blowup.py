import pytest
from hypothesis import given
from hypothesis import strategies as st

from fano12.blowup import E, H, Q_SIDE, X_SIDE, DivClass, ThreefoldData, blowup_ring, class_identity, dimension_count, triple_product


def test_rings():
    assert blowup_ring(X_SIDE).as_tuple() == (22, 0, -2, 0)
    assert blowup_ring(Q_SIDE).as_tuple() == (2, 0, -6, -16)


def test_anticanonical_products():
    rx, rq = blowup_ring(X_SIDE), blowup_ring(Q_SIDE)
    assert triple_product(rx, H - E, H - E, E) == 4
    assert [triple_product(rq, 3 * H - E, 3 * H - E, 2 * H - m * E) for m in (1, 2, 3)] == [4, -16, -36]
    # both sides have the same anticanonical degree
    assert triple_product(rx, H - E, H - E, H - E) == triple_product(rq, 3 * H - E, 3 * H - E, 3 * H - E) == 16


def test_class_identity_and_counts():
    assert class_identity([(2, H - 2 * E), (-1, 2 * H - 5 * E)], E)
    assert not class_identity([(2, H - 2 * E)], E)
    d = dimension_count()
    assert d["axioms"] == {"h0(X, H)": 14, "h0(C, O(2))": 3, "h0(C, I/I^2(2))": 6}
    assert d["dim |H' - 2E| lower bound"] == 4


def test_validation():
    with pytest.raises(ValueError):
        ThreefoldData(0, 1, 2, 0)
    with pytest.raises(ValueError):
        ThreefoldData(22, 5, 2, 0)


classes = st.builds(DivClass, st.integers(-5, 5), st.integers(-5, 5))


@given(classes, classes, classes, classes)
def test_triple_product_symmetric_and_linear(a, b, c, d):
    r = blowup_ring(Q_SIDE)
    assert triple_product(r, a, b, c) == triple_product(r, c, a, b) == triple_product(r, b, a, c)
    assert triple_product(r, a + d, b, c) == triple_product(r, a, b, c) + triple_product(r, d, b, c)
