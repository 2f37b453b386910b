"""Certificates for the boundary surface, the base surface of the pencil, the
nodal member, and the symmetries of the sextic."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product

from .binary import T_NAMES, binary_resultant, is_squarefree
from .cert import Certificate
from .field import QQ
from .ideals import ideal_piece, span_contains
from .linalg import rank
from .mukai_umemura import (
    Y_SPACE,
    Z_SPACE,
    build_boundary_param,
    gamma_curve,
    gamma_image_over_extension,
    gamma_pencil,
    q0_poly,
    qinf_poly,
    quintic_expected,
    unique_quadric_through_boundary,
)
from .pencils import singular_members
from .poly import Poly, gens, torus_weight
from .projpoint import ProjPoint
from .varieties import (
    LinearSubspace,
    ParamCurve,
    QuadricForm,
    coordinate_swap,
    curve_contains_point,
    intersection_divisor,
    point_membership,
    quadric_singular_locus,
    restrict_to_line,
    singular_on_family,
)

__all__ = [
    "diagonal_sextic",
    "verify_boundary_singularities",
    "base_surface_forms",
    "verify_base_surface",
    "surface_degree_count",
    "verify_nodal_member",
    "verify_symmetries",
    "Y_POINTS",
    "SWAP",
]

Y_POINTS = {k: Y_SPACE.coordinate_point(f"y{k}") for k in (0, 1, 3, 5, 6)}
# t0 <-> t1 reverses the coordinate order y_i <-> y_(6-i)
SWAP = (4, 3, 2, 1, 0)


def diagonal_sextic() -> ParamCurve:
    forms = tuple(Poly.monomial((6 - e, e), k, QQ, T_NAMES) for e, k in zip((0, 1, 3, 5, 6), (20, 45, 84, 45, 20)))
    return ParamCurve(Z_SPACE, forms)


def _line_curve(space, i: int, j: int) -> ParamCurve:
    t0, t1 = gens(2, QQ, T_NAMES)
    zero = Poly.zero(2, QQ, T_NAMES)
    forms = [zero] * len(space.labels)
    forms[i], forms[j] = t0, t1
    return ParamCurve(space, tuple(forms))


def _diagonal_matches(param) -> tuple[bool, object]:
    """``a = b = t`` sends the boundary to ``11 t^3`` times the dehomogenized diagonal sextic."""
    (t,) = gens(1, QQ, ("t",))
    shown = diagonal_sextic().uniform_forms()
    ratio = None
    for i, f in zip(sorted(param.polys), shown):
        img = param.polys[i].substitute([t, t])
        target = Poly({(e[1] + 3,): c for e, c in f.terms.items()}, 1, QQ, ("t",))
        r = img.is_proportional(target)
        if r is None or r == 0 or (ratio is not None and r != ratio):
            return False, None
        ratio = r
    return True, ratio


def verify_boundary_singularities() -> Certificate:
    cert = Certificate("boundary surface")
    param = build_boundary_param()
    quadric, _ = unique_quadric_through_boundary(param)
    quintic = quintic_expected()
    cert.expect("quintic vanishes on the boundary", param.surface.pullback(quintic).is_zero())
    piece5 = ideal_piece(param.surface, 5)
    cert.expect("quintic in degree-5 piece", span_contains(piece5.forms, quintic))
    # 35 multiples of the quadric plus one new generator
    cert.expect("degree-5 piece dimension", piece5.dim == 36, piece5.dim)
    cert.expect("quintic not a multiple of the quadric", piece5.dim > 35 and not _divisible_by(quintic, quadric))
    eqs = [quadric, quintic]
    loci = {
        "line z6=z8=z9=0": _line_curve(Z_SPACE, 0, 1),
        "line z3=z4=z6=0": _line_curve(Z_SPACE, 3, 4),
        "sextic over Q(sqrt5)": gamma_image_over_extension(param).curve,
        "diagonal sextic": diagonal_sextic(),
    }
    for name, fam in loci.items():
        chk = singular_on_family(eqs, fam, 2)
        cert.expect(f"singular along {name}", chk.singular, chk.singular)
        cert.expect(f"{name} on the boundary", all(fam.pullback(e).is_zero() for e in eqs))
    ok, ratio = _diagonal_matches(param)
    cert.expect("diagonal image proportional to (20:45:84:45:20)", ok, str(ratio))
    witness = _smooth_witness(eqs, param.surface.at([1, 2]))
    cert.expect("point (a,b)=(1,2) is smooth", witness is not None, witness)
    return cert


def _divisible_by(f: Poly, g: Poly) -> bool:
    """Whether ``f`` lies in ``g * (forms of complementary degree)``, by linear algebra."""
    from .ideals import monomials

    d = f.total_degree() - g.total_degree()
    mults = [g * Poly.monomial(e, 1, QQ, g.names) for e in monomials(g.nvars, d)]
    return span_contains(mults, f)


def _smooth_witness(eqs, point: ProjPoint):
    jac = [[e.diff(j).evaluate(point.coords) for j in range(len(point))] for e in eqs]
    for a, b in combinations(range(len(point)), 2):
        m = jac[0][a] * jac[1][b] - jac[0][b] * jac[1][a]
        if m != 0:
            return f"minor cols ({a},{b}) = {m}"
    return None


def base_surface_forms() -> list[Poly]:
    """Bihomogeneous quotient map ``P^1 x P^1 -> P^4`` in ``(w1, v1, w2, v2)``."""
    w1, v1, w2, v2 = gens(4, QQ, ("w1", "v1", "w2", "v2"))
    return [v1**2 * v2**2, w1**2 * v2**2, w1 * v1 * w2 * v2, v1**2 * w2**2, w1**2 * w2**2]


def _pull_to_square(form: Poly) -> Poly:
    return form.substitute(base_surface_forms())


def _jacobian_rank(eqs, point: ProjPoint) -> int:
    return rank([[e.diff(j).evaluate(point.coords) for j in range(len(point))] for e in eqs])


def surface_degree_count(seed: int = 12, attempts: int = 20) -> dict:
    """Count ``F`` meeting two random hyperplanes via a resultant on ``P^1 x P^1``.

    The pulled-back hyperplanes are (2,2)-forms; eliminating ``(w1 : v1)``
    leaves a binary form of degree 8 in ``(w2 : v2)``. When it is squarefree
    and the forms have no common factor the solutions are 8 distinct points,
    and the 2:1 quotient halves the count.
    """
    rng = random.Random(seed)
    for attempt in range(attempts):
        hyper = [[rng.randint(-9, 9) for _ in range(5)] for _ in range(2)]
        forms = base_surface_forms()
        g = [sum((f.scale(c) for f, c in zip(forms, h)), Poly.zero(4, QQ, forms[0].names)) for h in hyper]
        res = binary_resultant(g[0], g[1], 0, 1)
        res2 = Poly({(e[2], e[3]): c for e, c in res.terms.items()}, 2, QQ, T_NAMES)
        if res2.is_zero() or res2.total_degree() != 8 or not is_squarefree(res2):
            continue
        # swap the roles of the factors: distinct first coordinates too
        resb = binary_resultant(g[0], g[1], 2, 3)
        resb2 = Poly({(e[0], e[1]): c for e, c in resb.terms.items()}, 2, QQ, T_NAMES)
        if resb2.is_zero() or not is_squarefree(resb2):
            continue
        return {
            "seed": seed,
            "attempt": attempt,
            "hyperplanes": hyper,
            "solutions": res2.total_degree(),
            "map degree": _fibre_size((2, 3)),
            "degree": res2.total_degree() // _fibre_size((2, 3)),
        }
    raise ArithmeticError("no generic hyperplane pair found")


def _fibre_size(w: tuple[int, int]) -> int:
    """Number of affine points ``(s1, s2)`` with the same image as ``w``."""
    y0, y1, y3, y5, y6 = [f.evaluate([w[0], 1, w[1], 1]) for f in base_surface_forms()]
    roots1 = {s for s in (w[0], -w[0]) if Fraction(s) ** 2 * y0 == y1}
    roots2 = {s for s in (w[1], -w[1]) if Fraction(s) ** 2 * y0 == y5}
    # square roots of y1/y0, y5/y0 are exactly +-w; match the mixed coordinate
    return sum(1 for s1, s2 in product(roots1, roots2) if Fraction(s1 * s2) * y0 == y3 and Fraction(s1 * s2) ** 2 * y0 == y6)


def verify_base_surface() -> Certificate:
    cert = Certificate("base surface")
    q0, qinf = q0_poly(), qinf_poly()
    eqs = [q0, qinf]
    cert.expect("quadrics vanish on the quotient map", all(_pull_to_square(e).is_zero() for e in eqs))
    forms = base_surface_forms()
    w1, v1, w2, v2 = gens(4, QQ, ("w1", "v1", "w2", "v2"))
    flipped = [f.substitute([-w1, v1, -w2, v2]) for f in forms]
    cert.expect("map invariant under (w1,w2) -> (-w1,-w2)", flipped == forms)
    cert.expect("map is 2:1", _fibre_size((2, 3)) == 2, _fibre_size((2, 3)))
    for k in (0, 1, 5, 6):
        p = Y_POINTS[k]
        cert.expect(f"P{k} on F", point_membership(p, eqs))
        jr = _jacobian_rank(eqs, p)
        cert.expect(f"P{k} singular on F", jr < 2, f"jacobian rank {jr}")
    generic = ProjPoint([f.evaluate([2, 1, 3, 1]) for f in forms])
    cert.expect("generic point smooth", _jacobian_rank(eqs, generic) == 2, str(generic))
    lines = {"l01": (0, 1), "l16": (1, 6), "l65": (6, 5), "l50": (5, 0)}
    for name, (i, j) in lines.items():
        restricted = restrict_to_line(eqs, Y_POINTS[i], Y_POINTS[j])
        cert.expect(f"{name} on F", all(r.is_zero() for r in restricted))
    for i, j in ((0, 6), (1, 5)):
        restricted = restrict_to_line(eqs, Y_POINTS[i], Y_POINTS[j])
        cert.expect(f"l{i}{j} not on F", not all(r.is_zero() for r in restricted))
    gamma = gamma_curve()
    for k, expected in ((0, True), (6, True), (1, False), (5, False)):
        cert.expect(f"gamma through P{k} is {expected}", curve_contains_point(gamma, Y_POINTS[k]) == expected)
    for name, (i, j), point in (("l01", (0, 1), (1, 0)), ("l65", (6, 5), (0, 1))):
        line = LinearSubspace.span([Y_POINTS[i], Y_POINTS[j]])
        div = intersection_divisor(gamma, line.cutting_forms(Y_SPACE.labels))
        pts = div.points()
        ok = div.degree == 3 and list(pts.items()) == [(ProjPoint(point), 3)]
        cert.expect(f"{name} 3-tangent to gamma", ok, str(div))
    count = surface_degree_count()
    cert.expect("degree of F", count["degree"] == 4 and count["solutions"] == 8 and count["map degree"] == 2, count)
    return cert


def verify_nodal_member() -> Certificate:
    cert = Certificate("nodal member")
    pencil = gamma_pencil()
    q1 = pencil.member_poly(1, 1)
    y0, y1, y3, y5, y6 = Y_SPACE.coords()
    cert.expect("Q0 + Qinf", q1 == y0 * y6 - y1 * y5 and q1 == q0_poly() + qinf_poly(), str(q1))
    form = QuadricForm.from_poly(q1)
    sing = quadric_singular_locus(form)
    cert.expect("singular locus is P3", sing.dim == 0 and sing.contains(Y_POINTS[3]), str(sing))
    cert.expect("corank 1", form.corank() == 1, form.corank())
    cert.expect("P3 not on F", not point_membership(Y_POINTS[3], [q0_poly(), qinf_poly()]))
    # plane {y5 = lam*y0, y6 = lam*y1} parametrized by (p, q, r), lam symbolic
    p, q, r, lam = gens(4, QQ, ("p", "q", "r", "lam"))
    plane = [p, q, r, lam * p, lam * q]
    cert.expect("plane inside Q1 for all lambda", q1.substitute(plane).is_zero())
    cert.expect("plane through P3", all(f.evaluate([0, 0, 1, 7]) == 0 for f in (plane[0], plane[1], plane[3], plane[4])))
    t0, t1, lt = gens(3, QQ, ("t0", "t1", "lam"))
    gamma = [t0**6, t0**5 * t1, t0**3 * t1**3, t0 * t1**5, t1**6]
    g = t1**5 - lt * t0**5
    cut = [gamma[3] - lt * gamma[0], gamma[4] - lt * gamma[1]]
    cert.expect("cut equations are t0*g and t1*g", cut[0] == t0 * g and cut[1] == t1 * g)
    t0b, t1b = gens(2, QQ, T_NAMES)
    for value in (2, 3):
        gb = t1b**5 - t0b**5 * value
        div = intersection_divisor(gamma_curve(), _plane_cut(value))
        ok = div.degree == 5 and div.is_reduced() and is_squarefree(gb) and g.substitute([t0b, t1b, Poly.const(value, 2)]) == gb
        cert.expect(f"plane meets gamma in 5 distinct points at lambda={value}", ok, str(div))
    for name, (i, j) in (("l01", (0, 1)), ("l65", (6, 5))):
        cert.expect(f"plane misses {name}", _plane_misses_line(Y_POINTS[i], Y_POINTS[j]))
    return cert


def _plane_cut(lam) -> list[Poly]:
    y0, y1, y3, y5, y6 = Y_SPACE.coords()
    return [y5 - y0 * lam, y6 - y1 * lam]


def _plane_misses_line(a: ProjPoint, b: ProjPoint) -> bool:
    """``s*a + t*b`` in the plane forces ``s = t = 0`` for every ``lam != 0``.

    The plane equations restricted to the line are linear in ``(s, t)`` with
    coefficients linear in ``lam``; the system has only the zero solution
    iff its 2x2 determinant is nonzero, checked as a polynomial in ``lam``
    with no nonzero root.
    """
    lam_poly = gens(1, QQ, ("lam",))[0]
    rows = []
    for eq in ((3, 0), (4, 1)):
        # y_eq0 - lam*y_eq1 evaluated on s*a + t*b
        rows.append([Poly.const(a.coords[eq[0]], 1, QQ, ("lam",)) - lam_poly.scale(a.coords[eq[1]]),
                     Poly.const(b.coords[eq[0]], 1, QQ, ("lam",)) - lam_poly.scale(b.coords[eq[1]])])
    d = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    # only root allowed is lam = 0: d must be a nonzero monomial in lam
    return not d.is_zero() and len(d.terms) == 1


def verify_symmetries() -> Certificate:
    cert = Certificate("symmetries")
    pencil = gamma_pencil()
    weights = Y_SPACE.weights
    for u in ((1, 0), (0, 1), (1, 1), (-1, 4), (2, -7)):
        m = pencil.member_poly(*u)
        cert.expect(f"member {u} has weight 6", torus_weight(m, weights) == 6, torus_weight(m, weights))
        cert.expect(f"member {u} swap invariant", coordinate_swap(m, SWAP) == m)
    gamma = gamma_curve()
    t0, t1 = gens(2, QQ, T_NAMES)
    swapped = coordinate_swap(gamma, SWAP)
    reparam = tuple(f.substitute([t1, t0]) for f in gamma.forms)
    cert.expect("gamma swap invariant", tuple(swapped.forms) == reparam)
    hits = set()
    for member in singular_members(pencil):
        u0, u1 = member.point.coords
        locus = quadric_singular_locus(pencil.member(u0, u1))
        try:
            div = intersection_divisor(gamma, locus.cutting_forms(Y_SPACE.labels))
        except ValueError:
            continue
        for pt in div.points():
            if pt is not None:
                hits.add(gamma.at(pt.coords))
    expected = {Y_POINTS[0], Y_POINTS[6]}
    cert.expect("gamma meets singular loci only at P0, P6", hits == expected, sorted(str(h) for h in hits))
    return cert
