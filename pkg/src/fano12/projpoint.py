"""Projective points with canonical scaling."""

from __future__ import annotations

from typing import Sequence

from .field import QQ, Field, Scalar, field_of, format_scalar, pretty_scalar

__all__ = ["ProjPoint"]


class ProjPoint:
    """A point of projective space, stored with first nonzero coordinate 1."""

    __slots__ = ("coords", "field")

    def __init__(self, coords: Sequence, field: Field | None = None):
        if field is None:
            field = QQ
            for c in coords:
                if field_of(c) is not QQ:
                    field = field_of(c)
        coords = [field(c) for c in coords]
        lead = next((c for c in coords if c != 0), None)
        if lead is None:
            raise ValueError("projective point with all coordinates zero")
        self.coords: tuple[Scalar, ...] = tuple(c / lead for c in coords)
        self.field = field

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        if isinstance(other, ProjPoint):
            return self.coords == other.coords
        if isinstance(other, (tuple, list)):
            try:
                return self == ProjPoint(other)
            except (ValueError, TypeError):
                return False
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __lt__(self, other: ProjPoint):
        return _sort_key(self) < _sort_key(other)

    def __str__(self):
        return "(" + " : ".join(pretty_scalar(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"ProjPoint{self}"

    def serialize(self) -> str:
        return "(" + " : ".join(format_scalar(c) for c in self.coords) + ")"


def _sort_key(p: ProjPoint):
    # zero coordinates first so (0:1) < (1:0) < (1:x)
    return tuple((c != 0, format_scalar(c)) for c in p.coords)
