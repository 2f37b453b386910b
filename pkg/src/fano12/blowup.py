"""Intersection numbers on the blowup of a threefold along a smooth curve.

For a threefold with ample generator ``H``, ``K = -r H``, and a smooth curve
``C`` of degree ``H.C`` and genus ``g``, the blowup has Picard lattice spanned
by the pullback ``H'`` and the exceptional divisor ``E`` with

    H'^3 = H^3,  H'^2 E = 0,  H' E^2 = -H.C,  E^3 = -deg N = -(r H.C + 2g - 2).

Only numbers before any flop are modelled: flops change cubic intersections.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "ThreefoldData",
    "BlowupRing",
    "DivClass",
    "blowup_ring",
    "triple_product",
    "class_identity",
    "dimension_count",
    "X_SIDE",
    "Q_SIDE",
]


@dataclass(frozen=True)
class ThreefoldData:
    h3: int
    index: int
    curve_deg: int
    curve_genus: int

    def __post_init__(self):
        if self.h3 <= 0:
            raise ValueError("H^3 must be positive")
        if self.index not in (1, 2, 3, 4):
            raise ValueError("Fano index must be 1..4")
        if self.curve_deg < 1 or self.curve_genus < 0:
            raise ValueError("bad curve invariants")

    @property
    def normal_degree(self) -> int:
        return self.index * self.curve_deg + 2 * self.curve_genus - 2


# genus 12 Fano threefold blown up along a conic; quadric threefold blown up
# along a smooth rational sextic
X_SIDE = ThreefoldData(h3=22, index=1, curve_deg=2, curve_genus=0)
Q_SIDE = ThreefoldData(h3=2, index=3, curve_deg=6, curve_genus=0)


@dataclass(frozen=True)
class DivClass:
    """The divisor class ``h*H' + e*E``."""

    h: int
    e: int

    def __add__(self, other: DivClass) -> DivClass:
        return DivClass(self.h + other.h, self.e + other.e)

    def __sub__(self, other: DivClass) -> DivClass:
        return DivClass(self.h - other.h, self.e - other.e)

    def __neg__(self) -> DivClass:
        return DivClass(-self.h, -self.e)

    def __rmul__(self, k: int) -> DivClass:
        return DivClass(k * self.h, k * self.e)

    def __str__(self):
        return f"{self.h}H' {'+' if self.e >= 0 else '-'} {abs(self.e)}E"


H = DivClass(1, 0)
E = DivClass(0, 1)


@dataclass(frozen=True)
class BlowupRing:
    h3: int
    h2e: int
    he2: int
    e3: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.h3, self.h2e, self.he2, self.e3)

    def anticanonical(self, data: ThreefoldData) -> DivClass:
        return DivClass(data.index, -1)


def blowup_ring(t: ThreefoldData) -> BlowupRing:
    return BlowupRing(t.h3, 0, -t.curve_deg, -t.normal_degree)


def triple_product(ring: BlowupRing, a: DivClass, b: DivClass, c: DivClass) -> int:
    """Trilinear expansion of ``a.b.c`` over the four basic numbers."""
    # number of E factors -> basic intersection number
    basic = ring.as_tuple()
    total = 0
    for x in ((a.h, 0), (a.e, 1)):
        for y in ((b.h, 0), (b.e, 1)):
            for z in ((c.h, 0), (c.e, 1)):
                total += x[0] * y[0] * z[0] * basic[x[1] + y[1] + z[1]]
    return total


def class_identity(lhs: list[tuple[int, DivClass]], rhs: DivClass) -> bool:
    """Whether ``sum k_i * D_i`` equals ``rhs`` in the lattice."""
    acc = DivClass(0, 0)
    for k, d in lhs:
        acc = acc + k * d
    return acc == rhs


def dimension_count() -> dict:
    """Replay the section-count arithmetic; cohomological inputs are axioms.

    The three dimensions (sections of ``H`` on the genus 12 threefold, of
    ``O(2)`` on the conic, of the twisted conormal bundle) are imported, not
    computed; the subtraction and the projective dimension of quadrics
    through the sextic are checked.
    """
    h0_h, h0_conic, h0_conormal = 14, 3, 6
    axioms = {"h0(X, H)": h0_h, "h0(C, O(2))": h0_conic, "h0(C, I/I^2(2))": h0_conormal}
    bound = (h0_h - 1) - h0_conic - h0_conormal
    quadrics_p4, sections_o12 = 15, 13
    return {
        "axioms": axioms,
        "dim |H' - 2E| lower bound": bound,
        "projective dim of quadrics through sextic": quadrics_p4 - sections_o12 - 1,
        "affine dim of quadrics through sextic": quadrics_p4 - sections_o12,
    }
