"""Cable surgeries as integer Mobius maps on slopes.

Surgery with coefficient one less than the cabling-torus framing on the
(p,q)-cable of a knot K is a surgery on K itself; on slopes it acts by
an explicit determinant-1 integer matrix fixing q/p.  Applying that map
to the meridian-side part of a decorated path realises Legendrian
surgery on the cable as a map of solid-torus structures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .slopes import DomainError, Slope, cw_interval_contains, make_slope
from .paths import FareyPath
from .tori import (
    DecoratedPath,
    SolidTorusStructure,
    consistently_shorten,
    lengthen_decorated,
    shuffle_canonical,
)


@dataclass(frozen=True)
class MobiusMap:
    """Matrix [[a,b],[c,d]], determinant 1, acting on the vector
    (den,num) of a slope; the slope y/x maps to (c*x+d*y)/(a*x+b*y)."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise DomainError("Mobius map must have determinant 1")

    def apply(self, s: Slope) -> Slope:
        x, y = s.den, s.num
        return make_slope(self.c * x + self.d * y, self.a * x + self.b * y)

    def compose(self, other: "MobiusMap") -> "MobiusMap":
        """self after other (matrix product self * other)."""
        return MobiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __pow__(self, k: int) -> "MobiusMap":
        if k < 0:
            raise DomainError("negative powers are not needed; invert by hand")
        out = IDENTITY
        for _ in range(k):
            out = out.compose(self)
        return out

    def to_json(self) -> dict:
        return {"m": [[self.a, self.b], [self.c, self.d]]}

    def __str__(self) -> str:
        return "[[%d,%d],[%d,%d]]" % (self.a, self.b, self.c, self.d)


IDENTITY = MobiusMap(1, 0, 0, 1)


def _check_cable(p: int, q: int) -> None:
    if p < 2:
        raise DomainError("cabling requires p >= 2")
    if math.gcd(p, abs(q)) != 1:
        raise DomainError("cabling requires gcd(p,q) = 1")


def cable_surgery_slope(p: int, q: int, sign: int) -> Slope:
    """Surgery coefficient on K matching the framing+-1 surgery on the
    (p,q)-cable: (pq + sign)/p**2."""
    _check_cable(p, q)
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    return make_slope(p * q + sign, p * p)


def reglue_map(p: int, q: int, sign: int) -> MobiusMap:
    """The re-gluing matrix of the framing+-sign surgery on the
    (p,q)-cable; determinant 1 and fixes the slope q/p."""
    _check_cable(p, q)
    if sign == 1:
        return MobiusMap(1 - p * q, p * p, -q * q, 1 + p * q)
    if sign == -1:
        return MobiusMap(1 + p * q, -p * p, q * q, 1 - p * q)
    raise DomainError("sign must be +1 or -1")


def apply_map(m: MobiusMap, s: Slope) -> Slope:
    return m.apply(s)


def legendrian_cable_surgery(
    x: SolidTorusStructure, p: int, q: int, count: int
) -> SolidTorusStructure:
    """Result of count framing-minus-1 surgeries on the (p,q)-cable,
    performed inside the solid torus x.

    The path of x is lengthened through q/p if needed, the part between
    the meridian and q/p is pushed through reglue_map(p,q,-1)**count
    (signs carried along unchanged), and the composite is consistently
    shortened.
    """
    _check_cable(p, q)
    if count < 1:
        raise DomainError("count must be a positive integer")
    t = make_slope(q, p)
    if t == x.meridian:
        raise DomainError("cabling slope coincides with the meridian")
    d = x.iso_class.canonical_decorated()
    if t not in d.path.vertices:
        if not cw_interval_contains(t, x.meridian, x.dividing):
            raise DomainError(
                "cabling slope %s is outside the interval (%s, %s)"
                % (t, x.meridian, x.dividing)
            )
        d = lengthen_decorated(d, t)
    idx = d.path.vertices.index(t)
    m = reglue_map(p, q, -1) ** count
    new_verts = tuple(m.apply(v) for v in d.path.vertices[: idx + 1]) + d.path.vertices[idx + 1 :]
    moved = DecoratedPath(FareyPath(new_verts), d.signs)
    short = consistently_shorten(moved)
    if short is None:
        raise DomainError("surgered path did not shorten to a tight structure")
    return SolidTorusStructure(new_verts[0], x.dividing, shuffle_canonical(short))
