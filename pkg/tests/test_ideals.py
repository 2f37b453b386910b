import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from fano12.ideals import (
    evaluation_map,
    ideal_piece,
    is_quadratically_normal,
    max_coordinate_secant,
    monomials,
    multisecant_degree,
    same_span,
    span_contains,
)
from fano12.poly import gens
from fano12.varieties import LinearSubspace, ParamCurve

GAMMA = ParamCurve.from_exponents((0, 1, 3, 5, 6))


def _oracle_rank(exps, d):
    """Rank of restriction of degree-d forms to a monomial curve, via sympy."""
    t = sp.symbols("t")
    mons = monomials(len(exps), d)
    images = [sp.Poly(t ** sum(k * e for k, e in zip(m, exps)), t) for m in mons]
    top = d * max(exps)
    mat = sp.Matrix([[img.coeff_monomial(t**j) for j in range(top + 1)] for img in images])
    return mat.rank()


def test_monomial_counts():
    assert len(monomials(5, 2)) == 15 and len(monomials(5, 3)) == 35
    assert monomials(2, 2) == [(2, 0), (1, 1), (0, 2)]


def test_quadrics_through_the_sextic():
    piece = ideal_piece(GAMMA, 2)
    y0, y1, y3, y5, y6 = gens(5, names=GAMMA.space.labels)
    assert piece.dim == 2 and piece.rank == 13 == _oracle_rank((0, 1, 3, 5, 6), 2)
    assert [str(f) for f in piece.forms] == ["y0*y6 - y3^2", "y1*y5 - y3^2"]
    assert same_span(piece.forms, [y0 * y6 - y3**2, y3**2 - y1 * y5])
    assert not span_contains(piece.forms, y0 * y6 - y1 * y5 + y3**2)


def test_cubics_and_linear_forms():
    assert ideal_piece(GAMMA, 1).dim == 0
    cubics = ideal_piece(GAMMA, 3)
    assert cubics.dim == 16 and cubics.rank == 19 == _oracle_rank((0, 1, 3, 5, 6), 3)


def test_normality_trichotomy():
    assert is_quadratically_normal(GAMMA)
    for exps in ((0, 1, 2, 5, 6), (0, 1, 4, 5, 6)):
        qn = is_quadratically_normal(ParamCurve.from_exponents(exps))
        assert not qn and qn.kernel_dim == 3 and qn.rank == 12 == _oracle_rank(exps, 2)


def test_four_secant_lines():
    c = ParamCurve.from_exponents((0, 1, 2, 5, 6))
    assert max_coordinate_secant(c) == (4, ("y5", "y6"))
    assert max_coordinate_secant(ParamCurve.from_exponents((0, 1, 4, 5, 6))) == (4, ("y0", "y1"))
    assert max_coordinate_secant(GAMMA)[0] == 3
    # the line {y1 = y2 = y5 = 0} meets the curve only in length 2
    line = LinearSubspace.cut([[0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0]], 5)
    assert multisecant_degree(c, line) == 2


def test_block_decomposition_is_by_weight():
    emap = evaluation_map(GAMMA, 2)
    for cols, targets in emap.blocks():
        weights = {sum(k * e for k, e in zip(emap.source[j], (0, 1, 3, 5, 6))) for j in cols}
        assert len(weights) == 1


exponent_sets = st.lists(st.integers(0, 7), min_size=3, max_size=5, unique=True).map(sorted).filter(
    lambda e: e[0] == 0 and sp.gcd(list(e)) == 1
)


@given(exponent_sets, st.integers(1, 2))
def test_rank_nullity_on_monomial_curves(exps, d):
    c = ParamCurve.from_exponents(exps)
    piece = ideal_piece(c, d)
    assert piece.rank + piece.dim == len(monomials(len(exps), d))
    for f in piece.forms:
        assert c.pullback(f).is_zero()
