"""Registry of verification checks.

Each check id starts with a short location code (``L4.2`` for a lemma,
``P4.6`` for a proposition, ``R5.2`` for a remark, ``T2.5`` for a theorem,
``S5`` for a section) followed by a slug, so a report doubles as an index of
claims. A check returns ``(ok, witness)``; axioms return their imported
values and are never counted as failures.
"""

from __future__ import annotations

import fnmatch
from math import comb
from dataclasses import dataclass
from typing import Any, Callable

from .blowup import E, H, Q_SIDE, X_SIDE, blowup_ring, class_identity, dimension_count, triple_product
from .cert import Certificate, PipelineError
from .field import PHI, pretty_scalar
from .ideals import ideal_piece, is_quadratically_normal, max_coordinate_secant, same_span
from .mukai_umemura import (
    build_boundary_param,
    conic_orbit_certificate,
    displayed_coordinate_change,
    gamma_curve,
    gamma_image_over_extension,
    gamma_pencil,
    identify_mu_quadric,
    mu_quadric_expected,
    q0_poly,
    qinf_poly,
    unique_quadric_through_boundary,
    weights_check,
)
from .pencils import pencil_discriminant, singular_members
from .poly import format_poly
from .scenarios import verify_base_surface, verify_boundary_singularities, verify_nodal_member, verify_symmetries
from .varieties import ParamCurve

__all__ = ["Check", "REGISTRY", "select", "UnknownCheckError"]


class UnknownCheckError(ValueError):
    """A check pattern matched nothing in the registry."""


@dataclass(frozen=True)
class Check:
    id: str
    claim: str
    anchor: str
    run: Callable[[], tuple[bool, Any]]
    axiom: bool = False


def _cert(c: Certificate) -> tuple[bool, Any]:
    return c.passed, c.as_dict()


def _subcert(c: Certificate, keys: list[str]) -> tuple[bool, Any]:
    facts = {k: c.facts[k] for k in keys}
    failed = [k for k in keys if k in c.failures]
    return not failed, Certificate(c.name, facts, failed).as_dict()


def _cached(fn):
    box: dict = {}

    def wrapper():
        if "v" not in box:
            box["v"] = fn()
        return box["v"]

    return wrapper


boundary_cert = _cached(verify_boundary_singularities)
surface_cert = _cached(verify_base_surface)
nodal_cert = _cached(verify_nodal_member)
symmetry_cert = _cached(verify_symmetries)


def _ideal_gamma():
    piece = ideal_piece(gamma_curve(), 2)
    ok = piece.dim == 2 and same_span(piece.forms, [q0_poly(), qinf_poly()])
    return ok, piece.as_dict()


def _discriminant():
    pencil = gamma_pencil()
    disc = pencil_discriminant(pencil)
    members = singular_members(pencil)
    found = {str(m.point): m.corank for m in members}
    expected = {"(0 : 1)": 2, "(1 : 0)": 2, "(1 : 1)": 1}
    witness = {
        "discriminant": format_poly(disc),
        "members": [{"point": str(m.point), "u": m.u, "corank": m.corank, "multiplicity": m.multiplicity} for m in members],
    }
    return found == expected, witness


def _normality():
    out, ok = {}, True
    for exps, normal in (((0, 1, 3, 5, 6), True), ((0, 1, 2, 5, 6), False), ((0, 1, 4, 5, 6), False)):
        qn = is_quadratically_normal(ParamCurve.from_exponents(exps))
        ok &= qn.normal == normal and (normal or qn.kernel_dim == 3)
        out[str(exps)] = {"normal": qn.normal, "rank": qn.rank, "kernel_dim": qn.kernel_dim, "target_dim": qn.target_dim}
    return ok, out


def _secants():
    out, ok = {}, True
    for exps, bound in (((0, 1, 3, 5, 6), 3), ((0, 1, 2, 5, 6), 4), ((0, 1, 4, 5, 6), 4)):
        best, where = max_coordinate_secant(ParamCurve.from_exponents(exps))
        ok &= best == bound
        out[str(exps)] = {"max coordinate secant": best, "line": list(where) if where else None}
    return ok, out


def _cubics():
    c = ideal_piece(gamma_curve(), 3)
    lin = ideal_piece(gamma_curve(), 1)
    return c.dim == 16 and lin.dim == 0, {"linear forms": lin.dim, "cubics": c.dim, "cubic rank": c.rank}


def _x_ring():
    r = blowup_ring(X_SIDE)
    val = triple_product(r, H - E, H - E, E)
    return r.as_tuple() == (22, 0, -2, 0) and val == 4, {"ring": list(r.as_tuple()), "(H'-E)^2 E": val}


def _q_ring():
    r = blowup_ring(Q_SIDE)
    vals = {m: triple_product(r, 3 * H - E, 3 * H - E, 2 * H - m * E) for m in (1, 2, 3)}
    ok = all(v == 24 - 20 * m for m, v in vals.items())
    return ok, {"ring": list(r.as_tuple()), "(3H'-E)^2 (2H'-mE)": {str(m): v for m, v in vals.items()}}


def _class_identity():
    ok = class_identity([(2, H - 2 * E), (-1, 2 * H - 5 * E)], E)
    return ok, "2(H'-2E) - (2H'-5E) = E"


def _dimension_axioms():
    d = dimension_count()
    return True, d["axioms"]


def _dimension_bound():
    d = dimension_count()
    ok = d["dim |H' - 2E| lower bound"] == 4 and d["projective dim of quadrics through sextic"] == 1
    return ok, {k: v for k, v in d.items() if k != "axioms"}


def _boundary_param():
    param = build_boundary_param()
    # build_boundary_param raises on any mismatch with the closed forms
    binomials = (comb(11, 2), comb(11, 3), comb(11, 5))
    witness = {f"z{i}": format_poly(p) for i, p in param.polys.items()}
    witness["binomials"] = list(binomials)
    return binomials == (55, 165, 462), witness


def _unique_quadric():
    q, piece = unique_quadric_through_boundary()
    ok = q.is_proportional(mu_quadric_expected()) is not None and piece.rank == 14
    return ok, {"quadric": format_poly(q), "rank": piece.rank, "source_dim": piece.n_source, "dim": piece.dim}


def _gamma_image():
    img = gamma_image_over_extension()
    k1, k2 = img.factors
    ok = k1 == 11 and k2 == -11 * PHI**10 and img.conic_factorization
    return ok, {"factor first branch": f"{pretty_scalar(k1)}*t^3", "factor second branch": f"{pretty_scalar(k2)}*t^3", "curve": [str(f) for f in img.curve.forms]}


def _coordinate_change():
    mu = identify_mu_quadric()
    ok = tuple(mu.coordinate_change) == displayed_coordinate_change() and all(c != 0 for c in mu.coordinate_change)
    return ok, [pretty_scalar(c) for c in mu.coordinate_change]


def _pencil_point():
    mu = identify_mu_quadric()
    other = identify_mu_quadric(branch=1)
    scaled = identify_mu_quadric(rescale=PHI * 3)
    ok = (
        mu.pair == (-1, 4)
        and str(mu.u) == "-1/4"
        and mu.common_factor == 44100 * PHI**2
        and other.pair == mu.pair
        and scaled.pair == mu.pair
    )
    return ok, {
        "pencil point": list(mu.pair),
        "u": str(mu.u),
        "common factor": pretty_scalar(mu.common_factor),
        "quadric in y": format_poly(mu.rational_quadric),
        "other branch": list(other.pair),
        "rescaled change": list(scaled.pair),
    }


def _map_weights():
    w = weights_check()
    ok = w["z weights"] == (-3, -2, 0, 2, 3) and w["shift"] == 11
    return ok, {"z weights": list(w["z weights"]), "z6(phi12, 1)": str(w["shift"])}


def _pencil_weights():
    c = symmetry_cert()
    keys = [k for k in c.facts if k.startswith("member")]
    return _subcert(c, keys)


def _gamma_symmetry():
    c = symmetry_cert()
    return _subcert(c, ["gamma swap invariant", "gamma meets singular loci only at P0, P6"])


def _r47(keys_prefix: tuple[str, ...]):
    def run():
        c = boundary_cert()
        keys = [k for k in c.facts if k.startswith(keys_prefix)]
        return _subcert(c, keys)

    return run


def _r52(keep: Callable[[str], bool]):
    def run():
        c = surface_cert()
        sel = [k for k in c.facts if keep(k)]
        return _subcert(c, sel)

    return run


def _s5(keys: tuple[str, ...]):
    def run():
        c = nodal_cert()
        sel = [k for k in c.facts if k.startswith(keys)]
        return _subcert(c, sel)

    return run


REGISTRY: list[Check] = [
    Check("L2.3.blowup-conic", "blowup of X along the conic: ring (22, 0, -2, 0) and (H'-E)^2.E = 4", "L2.3", _x_ring),
    Check("L2.3.dimension-axioms", "imported section counts 14, 3, 6", "L2.3", _dimension_axioms, axiom=True),
    Check("L2.3.dimension-bound", "dim |H'-2E| >= 13 - 3 - 6 = 4", "L2.3", _dimension_bound),
    Check("L2.6.cubics", "sextic lies on no hyperplane and on 16 independent cubics", "L2.6", _cubics),
    Check("L3.2.secant-lines", "non-normal exponent curves have coordinate 4-secant lines, the sextic does not", "L3.2", _secants),
    Check("L3.4.gamma-symmetry", "sextic is swap invariant and meets singular loci only at P0, P6", "L3.4", _gamma_symmetry),
    Check("L3.4.pencil-weights", "pencil members have weight 6 and are swap invariant", "L3.4", _pencil_weights),
    Check("L4.2.discriminant", "singular members at (1:0), (0:1), (1:1) with coranks 2, 2, 1", "L4.2", _discriminant),
    Check("L4.2.ideal", "quadrics through the sextic are spanned by Q0 and Qinf", "L4.2", _ideal_gamma),
    Check("P4.6.boundary-param", "boundary coordinates match the closed binomial forms", "P4.6", _boundary_param),
    Check("P4.6.conic", "torus orbit of (phi12, 1) is a conic on which the map is undefined", "P4.6", lambda: _cert(conic_orbit_certificate())),
    Check("P4.6.coordinate-change", "diagonal coordinate change matches the displayed constants", "P4.6", _coordinate_change),
    Check("P4.6.gamma-image", "double curve branches map to the displayed sextic", "P4.6", _gamma_image),
    Check("P4.6.map-weights", "map coordinates have weights (-3,-2,0,2,3) and z6(phi12,1) = 11", "P4.6", _map_weights),
    Check("P4.6.pencil-point", "Mukai-Umemura quadric is the member (-1:4), u = -1/4", "P4.6", _pencil_point),
    Check("P4.6.unique-quadric", "unique quadric through the boundary surface", "P4.6", _unique_quadric),
    Check("R2.1.normality", "quadratic normality of the three exponent curves", "R2.1", _normality),
    Check("R4.7.diagonal", "diagonal image is the sextic (20:45:84:45:20)", "R4.7", _r47(("diagonal image",))),
    Check("R4.7.quintic", "boundary surface lies on the quintic, a new generator in degree 5", "R4.7", _r47(("quintic",))),
    Check("R4.7.singular-loci", "boundary surface is singular along two lines and two sextics", "R4.7", _r47(("singular along", "point (a,b)", "line", "sextic", "diagonal sextic on"))),
    Check("R5.2.degree", "base surface has degree 8/2 = 4", "R5.2", _r52(lambda k: k in ("degree of F", "map is 2:1"))),
    Check("R5.2.lines", "base surface contains the four coordinate lines l01, l16, l65, l50", "R5.2", _r52(lambda k: k.startswith("l") and k.endswith("on F"))),
    Check("R5.2.points", "P0, P1, P5, P6 are singular points of the base surface", "R5.2", _r52(lambda k: k.startswith("P") or k == "generic point smooth")),
    Check("R5.2.quotient", "quotient map lands in both quadrics and is sign invariant", "R5.2", _r52(lambda k: k.startswith(("quadrics vanish", "map invariant")))),
    Check("R5.2.tangency", "sextic passes through P0, P6 only and l01, l65 are 3-tangent", "R5.2", _r52(lambda k: k.startswith("gamma through") or k.endswith("3-tangent to gamma"))),
    Check("S5.nodal-member", "Q0 + Qinf = y0y6 - y1y5 is a cone with vertex P3 off the base surface", "S5", _s5(("Q0 + Qinf", "singular locus", "corank", "P3 not"))),
    Check("S5.planes", "planes in Q1 through P3 meet the sextic in 5 points and miss l01, l65", "S5", _s5(("plane", "cut equations"))),
    Check("T2.2.class-identity", "2(H'-2E) - (2H'-5E) = E", "T2.2", _class_identity),
    Check("T2.5.24-20m", "(3H'-E)^2.(2H'-mE) = 24 - 20m for m = 1, 2, 3", "T2.5", _q_ring),
]
REGISTRY.sort(key=lambda c: c.id)


def select(pattern: str | None = None) -> list[Check]:
    if not pattern:
        return list(REGISTRY)
    chosen = [c for c in REGISTRY if fnmatch.fnmatchcase(c.id, pattern)]
    if not chosen:
        raise UnknownCheckError(f"no check matches {pattern!r}")
    return chosen


def run_one(check: Check) -> tuple[str, Any]:
    try:
        ok, witness = check.run()
    except PipelineError as exc:
        return "fail", {"error": str(exc)}
    if check.axiom:
        return "axiom", witness
    return ("pass" if ok else "fail"), witness
