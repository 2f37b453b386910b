"""Identification of the Mukai-Umemura quadric inside the pencil.

Pipeline: expand the boundary parametrization ``(x+ay)(x+by)^11`` into the
five weight coordinates, find the unique quadric containing its image, push
the double curve ``a^2 + 3ab + b^2 = 0`` through the map over Q(sqrt5), match
it with the monomial sextic to get the diagonal coordinate change, and read
off the pencil parameter of the transformed quadric.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, lcm

from .binary import T_NAMES
from .cert import Certificate, PipelineError
from .field import PHI, QQ, QQ5, QExt
from .ideals import IdealPiece, ideal_piece
from .linalg import solve_linear
from .pencils import QuadricPencil, express_in_pencil, pencil_pair
from .poly import Poly, gens
from .projpoint import ProjPoint
from .varieties import ParamCurve, ParamSurface, WeightedProjSpace

__all__ = [
    "Y_SPACE",
    "Z_SPACE",
    "M12_INDICES",
    "gamma_curve",
    "gamma_pencil",
    "q0_poly",
    "qinf_poly",
    "mu_quadric_expected",
    "quintic_expected",
    "BoundarySurfaceParam",
    "build_boundary_param",
    "m12_weights",
    "phi12_coefficients",
    "weight_zero_shift",
    "conic_orbit_certificate",
    "unique_quadric_through_boundary",
    "gamma_image_over_extension",
    "GammaImage",
    "MuIdentification",
    "identify_mu_quadric",
    "displayed_coordinate_change",
    "normalize_integer",
    "weights_check",
]

Y_SPACE = WeightedProjSpace(("y0", "y1", "y3", "y5", "y6"), (0, 1, 3, 5, 6))
Z_SPACE = WeightedProjSpace(("z3", "z4", "z6", "z8", "z9"), (-3, -2, 0, 2, 3))
# which coefficient of a degree-12 binary form each z-coordinate reads
M12_INDICES = (3, 4, 6, 8, 9)


def gamma_curve() -> ParamCurve:
    return ParamCurve.from_exponents((0, 1, 3, 5, 6), Y_SPACE)


def q0_poly() -> Poly:
    y0, y1, y3, y5, y6 = Y_SPACE.coords()
    return y0 * y6 - y3**2


def qinf_poly() -> Poly:
    y0, y1, y3, y5, y6 = Y_SPACE.coords()
    return y3**2 - y1 * y5


def gamma_pencil() -> QuadricPencil:
    return QuadricPencil.from_polys(q0_poly(), qinf_poly())


def mu_quadric_expected() -> Poly:
    z3, z4, z6, z8, z9 = Z_SPACE.coords()
    return z3 * z9 * 1764 - z4 * z8 * 784 + z6**2 * 125


def quintic_expected() -> Poly:
    z3, z4, z6, z8, z9 = Z_SPACE.coords()
    return (
        z4**2 * z6 * z8**2 * 32
        - z3**2 * z8**3 * 630
        + z3 * z4 * z6 * z8 * z9 * 81
        - z4**3 * z9**2 * 630
        + z3**2 * z6 * z9**2 * 2187
    )


def m12_weights() -> dict[int, int]:
    """Torus weight of the coefficient of ``x^(12-i) y^i``.

    The torus ``diag(s^-1, s)`` of SL2 scales ``x^(12-i) y^i`` by
    ``s^(i - (12 - i))``; weights are halved to the PGL2 torus.
    """
    return {i: (i - (12 - i)) // 2 for i in range(13)}


def phi12_coefficients() -> dict[int, int]:
    """Coefficients of ``xy(x^10 + 11 x^5 y^5 + y^10)`` indexed by the power of y."""
    x, y = gens(2, QQ, ("x", "y"))
    f = x * y * (x**10 + x**5 * y**5 * 11 + y**10)
    return {e[1]: int(c) for e, c in f.terms.items()}


def weight_zero_shift() -> Fraction:
    """The multiple of the constant coordinate subtracted from ``z6``.

    The weight-zero coordinate ``z6 - k*zbar`` must vanish at the point
    ``(phi12, 1)``, which forces ``k = z6(phi12)/1``.
    """
    return Fraction(phi12_coefficients().get(6, 0), 1)


def conic_orbit_certificate() -> Certificate:
    """The torus orbit closure of ``(phi12, 1)`` is a plane conic on which the map is undefined."""
    cert = Certificate("conic")
    t0, t1 = gens(2, QQ, T_NAMES)
    coeffs = phi12_coefficients()
    # orbit point t: coefficient of y^i scales by t^(i-6); homogenize with t = t1/t0
    # in coordinates (z1, z6, z11, zbar), cleared by t0*t1: (t0^2, 11 t0 t1, t1^2, t0 t1)
    space = WeightedProjSpace(("z1", "z6", "z11", "zbar"), (-5, 0, 5, 0))
    conic = ParamCurve(space, (t0**2, t0 * t1 * coeffs[6], t1**2, t0 * t1))
    lin = ideal_piece(conic, 1)
    quad = ideal_piece(conic, 2)
    cert.expect("linear relations", lin.dim == 1, [str(f) for f in lin.forms])
    # quadrics modulo (linear form) * (variables)
    cert.expect("new quadric relations", quad.dim - 4 * lin.dim == 1, quad.dim - 4 * lin.dim)
    z1, z6, z11, zb = space.coords()
    cert.expect("z6 - 11*zbar vanishes on the orbit", conic.pullback(z6 - zb * 11).is_zero())
    cert.expect("z1*z11 - zbar^2 vanishes on the orbit", conic.pullback(z1 * z11 - zb**2).is_zero())
    cert.expect("curve degree", conic.degree == 2, conic.degree)
    # coefficients other than y^1, y^6, y^11 vanish on the orbit, so z3, z4, z8, z9
    # and the shifted weight-zero coordinate all vanish: the map is undefined on C
    others = [i for i in M12_INDICES if i not in coeffs]
    cert.expect("map coordinates vanish on the conic", others == [3, 4, 8, 9] and coeffs[6] == weight_zero_shift())
    return cert


@dataclass
class BoundarySurfaceParam:
    polys: dict[int, Poly]  # M12 index -> polynomial in (a, b)
    surface: ParamSurface

    def coordinate(self, i: int) -> Poly:
        return self.polys[i]


def _closed_forms() -> dict[int, Poly]:
    a, b = gens(2, QQ, ("a", "b"))
    return {
        3: (a + b * 3) * b**2 * comb(11, 2),
        4: (a + b * 2) * b**3 * comb(11, 3),
        6: (a + b) * b**5 * comb(11, 5),
        8: (a * 2 + b) * b**7 * comb(11, 3),
        9: (a * 3 + b) * b**8 * comb(11, 2),
    }


def build_boundary_param() -> BoundarySurfaceParam:
    """Expand ``(x + a y)(x + b y)^11`` and read the five weight coordinates."""
    x, y, a, b = gens(4, QQ, ("x", "y", "a", "b"))
    f = (x + a * y) * (x + b * y) ** 11
    polys = {}
    for i in M12_INDICES:
        terms = {}
        for e, c in f.terms.items():
            if e[0] == 12 - i and e[1] == i:
                terms[(e[2], e[3])] = c
        polys[i] = Poly(terms, 2, QQ, ("a", "b"))
    closed = _closed_forms()
    for i in M12_INDICES:
        if polys[i] != closed[i]:
            raise PipelineError(f"coefficient z{i} = {polys[i]} disagrees with {closed[i]}")
    # the boundary lies in P(M12): zbar = 0, so z6 - 11 zbar is just z6
    surface = ParamSurface(Z_SPACE, tuple(polys[i] for i in M12_INDICES), ("a", "b"))
    return BoundarySurfaceParam(polys, surface)


def normalize_integer(p: Poly) -> Poly:
    """Scale a rational polynomial to coprime integer coefficients, leading term positive."""
    coeffs = list(p.terms.values())
    den = lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    g = gcd(*ints)
    scale = Fraction(den, g)
    if p.leading_term()[1] < 0:
        scale = -scale
    return p.scale(scale)


def unique_quadric_through_boundary(param: BoundarySurfaceParam | None = None) -> tuple[Poly, IdealPiece]:
    param = param or build_boundary_param()
    piece = ideal_piece(param.surface, 2)
    if piece.dim != 1:
        raise PipelineError(f"expected a unique quadric through the boundary, found {piece.dim}")
    q = normalize_integer(piece.forms[0])
    if not param.surface.pullback(q).is_zero():
        raise PipelineError("quadric does not vanish on the boundary surface")
    return q, piece


def displayed_coordinate_change() -> tuple[QExt, ...]:
    """``(5(3-phi^2), 15(2-phi^2), 42(1-phi^2), 15(1-2phi^2), 5(1-3phi^2))``."""
    p2 = PHI * PHI
    return (5 * (3 - p2), 15 * (2 - p2), 42 * (1 - p2), 15 * (1 - 2 * p2), 5 * (1 - 3 * p2))


def _displayed_curve() -> ParamCurve:
    c = displayed_coordinate_change()
    forms = tuple(Poly.monomial((6 - e, e), k, QQ5, T_NAMES) for e, k in zip((0, 1, 3, 5, 6), c))
    return ParamCurve(Z_SPACE, forms)


@dataclass
class GammaImage:
    curve: ParamCurve  # branch image with the common t^3 and scalar removed
    factors: tuple[QExt, QExt]  # constant parts of the proportionality factors (times t^3)
    raw: tuple[list[Poly], list[Poly]]  # substituted coordinates, one list per branch
    conic_factorization: bool


def _branch_coordinates(param: BoundarySurfaceParam, first: bool) -> list[Poly]:
    (t,) = gens(1, QQ5, ("t",))
    p2 = PHI * PHI
    a_img, b_img = (t.scale(-p2), t) if first else (t, t.scale(-p2))
    return [param.polys[i].promote().substitute([a_img, b_img]) for i in M12_INDICES]


def _proportionality(raw: list[Poly], target: ParamCurve) -> QExt | None:
    """Constant ``k`` with ``raw_i(t) = k t^3 target_i(1, t)`` for all i."""
    k = None
    for r, f in zip(raw, target.uniform_forms()):
        dehom = Poly({(e[1] + 3,): c for e, c in f.terms.items()}, 1, QQ5, ("t",))
        ratio = r.is_proportional(dehom)
        if ratio is None or ratio == 0 or (k is not None and ratio != k):
            return None
        k = ratio
    return k


def gamma_image_over_extension(param: BoundarySurfaceParam | None = None) -> GammaImage:
    """Image of the two components of ``a^2 + 3ab + b^2 = 0`` in the z-coordinates."""
    param = param or build_boundary_param()
    shown = _displayed_curve()
    raw1 = _branch_coordinates(param, first=True)
    raw2 = _branch_coordinates(param, first=False)
    k1 = _proportionality(raw1, shown)
    k2 = _proportionality(raw2, shown)
    if k1 is None or k2 is None:
        raise PipelineError("branch images are not proportional to the displayed sextic")
    a, b = gens(2, QQ5, ("a", "b"))
    p2 = PHI * PHI
    factored = (a + b.scale(p2)) * (a + b.scale(p2.inverse()))
    conic_ok = factored == a**2 + a * b * 3 + b**2
    if not conic_ok:
        raise PipelineError("a^2 + 3ab + b^2 does not split over Q(sqrt5)")
    return GammaImage(shown, (k1, k2), (raw1, raw2), conic_ok)


@dataclass
class MuIdentification:
    coordinate_change: tuple[QExt, ...]
    substituted: Poly
    rational_quadric: Poly
    common_factor: QExt
    point: ProjPoint
    pair: tuple
    u: Fraction


def _coordinate_change_from_branch(raw: list[Poly]) -> tuple[QExt, ...]:
    """Solve ``c_i * gamma_i = z_i`` coefficientwise for each coordinate."""
    gamma = gamma_curve()
    # strip the common t^3 and rehomogenize to degree 6 in (t0, t1)
    shift = min(min(e[0] for e in r.terms) for r in raw)
    out = []
    for r, g in zip(raw, gamma.uniform_forms()):
        z_form = Poly({(6 - (e[0] - shift), e[0] - shift): c for e, c in r.terms.items()}, 2, QQ5, T_NAMES)
        g5 = g.promote()
        keys = sorted(set(z_form.terms) | set(g5.terms), reverse=True)
        m = [[g5.coefficient(k)] for k in keys]
        rhs = [z_form.coefficient(k) for k in keys]
        sol = solve_linear(m, rhs)
        if sol is None or sol[0] == 0:
            raise PipelineError("branch image does not match the monomial sextic coordinatewise")
        out.append(sol[0])
    return tuple(out)


def identify_mu_quadric(branch: int = 0, rescale: QExt | None = None) -> MuIdentification:
    """Transform the boundary quadric to y-coordinates and locate it in the pencil.

    ``branch`` selects which component of the double curve fixes the
    coordinate change; ``rescale`` multiplies the change by a common scalar.
    Neither may change the answer.
    """
    param = build_boundary_param()
    quadric, _ = unique_quadric_through_boundary(param)
    image = gamma_image_over_extension(param)
    k = image.factors[branch]
    change = _coordinate_change_from_branch([r.scale(k.inverse()) for r in image.raw[branch]])
    if rescale is not None:
        change = tuple(c * rescale for c in change)
    ys = gens(5, QQ5, Y_SPACE.labels)
    substituted = quadric.promote().substitute([y.scale(c) for y, c in zip(ys, change)])
    lead = substituted.leading_term()[1]
    rational = substituted.scale(lead.inverse()).to_rational()
    if rational is None:
        raise PipelineError("transformed quadric is not a scalar multiple of a rational quadric")
    point = express_in_pencil(gamma_pencil(), rational)
    if point is None:
        raise PipelineError("transformed quadric is not in the pencil through the sextic")
    pair = pencil_pair(point)
    member = gamma_pencil().member_poly(*pair).promote()
    factor = substituted.is_proportional(member)
    if factor is None:
        raise PipelineError("common factor extraction failed")
    u0, u1 = point.coords
    return MuIdentification(change, substituted, rational, factor, point, pair, u0 / u1)


def weights_check() -> dict[str, object]:
    """Weights of the five map coordinates and of the constant coordinate."""
    w = m12_weights()
    return {
        "z weights": tuple(w[i] for i in M12_INDICES),
        "zbar weight": 0,
        "z6 weight": w[6],
        "shift": weight_zero_shift(),
    }
