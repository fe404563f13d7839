"""Exact slope arithmetic on the boundary torus, and the Farey graph.

A slope is an element of Q union {inf} labelling an isotopy class of
essential curves on a torus.  Slopes are kept as reduced integer pairs
(num, den) with den >= 0; infinity is stored as 1/0.  No floats are used
anywhere: every geometric predicate reduces to an integer cross product.

Conventions for the circle at infinity of the hyperbolic disk carrying
the Farey tessellation (0 at the top, inf at the bottom, positives on
the right): moving clockwise from 0 runs through the positive rationals
in increasing order to inf, then through the negative rationals
(increasing, i.e. from very negative up towards 0) back to 0.

Internally a slope p/q is represented by the primitive vector (q, p),
i.e. (den, num).  With that convention the clockwise circular order of
slopes is the cyclic closure of the linear order

    negatives < 0 < positives < inf

which is decided by the sign of det(a, b) = a.num*b.den - b.num*a.den.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class DomainError(ValueError):
    """A value is outside the mathematical domain of an operation."""


class ParseError(ValueError):
    """Malformed textual input."""


@dataclass(frozen=True)
class Slope:
    """Reduced fraction num/den with den >= 0; infinity is Slope(1, 0)."""

    num: int
    den: int

    def __post_init__(self):
        if self.den < 0:
            raise DomainError("slope denominator must be nonnegative")
        if self.den == 0 and self.num != 1:
            raise DomainError("infinite slope must be stored as 1/0")
        if self.den > 0 and math.gcd(abs(self.num), self.den) != 1:
            raise DomainError("slope %d/%d is not reduced" % (self.num, self.den))

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def reciprocal(self) -> "Slope":
        return make_slope(self.den, self.num)

    def __str__(self) -> str:
        if self.den == 0:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return "%d/%d" % (self.num, self.den)

    def __repr__(self) -> str:
        return "Slope(%s)" % self


def make_slope(num: int, den: int) -> Slope:
    """Reduce (num, den) to the canonical representative."""
    if num == 0 and den == 0:
        raise DomainError("0/0 is not a slope")
    if den == 0:
        return Slope(1, 0)
    if den < 0:
        num, den = -num, -den
    g = math.gcd(abs(num), den)
    return Slope(num // g, den // g)


INF = Slope(1, 0)
ZERO = Slope(0, 1)
ONE = Slope(1, 1)


def parse_slope(text: str) -> Slope:
    """Parse 'p/q', 'p' or 'inf' (case-insensitive)."""
    tok = text.strip()
    if tok.lower() == "inf":
        return INF
    try:
        if "/" in tok:
            p, q = tok.split("/", 1)
            return make_slope(int(p), int(q))
        return make_slope(int(tok), 1)
    except (ValueError, DomainError) as exc:
        # DomainError covers 0/0; anything else is a bad token.
        raise ParseError("not a slope: %r" % text) from exc


def det(a: Slope, b: Slope) -> int:
    """Integer cross product; |det| == 1 characterises Farey adjacency."""
    return a.num * b.den - b.num * a.den


def is_edge(a: Slope, b: Slope) -> bool:
    """True when a and b span an edge of the Farey tessellation."""
    return abs(det(a, b)) == 1


def _pos_lt(a: Slope, b: Slope) -> bool:
    # linear position order: negatives < 0 < positives < inf
    return det(a, b) < 0


def _pos_le(a: Slope, b: Slope) -> bool:
    return a == b or _pos_lt(a, b)


def slope_sort_key(s: Slope):
    """Sort key realising the linear position order (inf last)."""
    if s.is_infinite:
        return (1, Fraction(0))
    return (0, Fraction(s.num, s.den))


def cw_interval_contains(x: Slope, a: Slope, b: Slope, closed: bool = False) -> bool:
    """Is x on the clockwise arc from a to b?

    The arc starts at a and moves clockwise (positives increasing, then
    inf, then negatives) until it reaches b.  Endpoints count only when
    closed=True.  Requires a != b.
    """
    if a == b:
        raise DomainError("interval endpoints must be distinct")
    if x == a or x == b:
        return closed
    if _pos_lt(a, b):
        return _pos_lt(a, x) and _pos_lt(x, b)
    return _pos_lt(a, x) or _pos_lt(x, b)


def farey_sum(a: Slope, b: Slope) -> Slope:
    """Mediant of two distinct slopes.

    inf enters the mediant as 1/0 when the other operand is >= 0 and as
    -1/0 when the other operand is negative, so that the result is the
    Farey child on the correct side of the circle.
    """
    if a == b:
        raise DomainError("Farey sum requires distinct slopes")
    na, da = a.num, a.den
    nb, db = b.num, b.den
    if a.is_infinite and b.num < 0:
        na = -1
    if b.is_infinite and a.num < 0:
        nb = -1
    num, den = na + nb, da + db
    if num == 0 and den == 0:
        raise DomainError("mediant of opposite infinities is undefined")
    return make_slope(num, den)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    # returns (g, u, v) with u*a + v*b == g
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    return old_r, old_u, old_v


def _cross(v: tuple[int, int], w: tuple[int, int]) -> int:
    return v[0] * w[1] - v[1] * w[0]


def _fan_basis(s: Slope) -> tuple[tuple[int, int], tuple[int, int]]:
    """Vector v0 = (den, num) of s and some w0 with cross(v0, w0) == 1.

    The Farey neighbours of s are exactly the slopes of w0 + k*v0 over
    integer k, swept monotonically around the circle and accumulating
    at s on both ends.
    """
    v0 = (s.den, s.num)
    g, u, v = _egcd(s.den, s.num)
    # cross(v0, (-v, u)) = den*u + num*v = g = 1 for a reduced slope
    return v0, (-v, u)


def _fan_member(v0, w0, k: int) -> Slope:
    return make_slope(w0[1] + k * v0[1], w0[0] + k * v0[0])


def _fan_param(v0, w0, t: Slope) -> Fraction:
    """Exact k with t parallel to w0 + k*v0 (t must differ from the apex)."""
    vt = (t.den, t.num)
    denom = _cross(vt, v0)
    if denom == 0:
        raise DomainError("slope coincides with the fan apex")
    return Fraction(-_cross(vt, w0), denom)


def neighbors_in_interval(s0: Slope, a: Slope, b: Slope) -> frozenset[Slope]:
    """All Farey neighbours of s0 strictly inside the clockwise arc (a, b).

    Finite exactly when s0 lies outside the closed arc [a, b]; the
    neighbour fan of s0 accumulates at s0, so an arc whose closure
    touches s0 contains infinitely many neighbours.
    """
    if a == b:
        raise DomainError("interval endpoints must be distinct")
    if s0 == a or s0 == b or cw_interval_contains(s0, a, b):
        raise DomainError("neighbour set inside the interval is infinite")
    v0, w0 = _fan_basis(s0)
    ka = _fan_param(v0, w0, a)
    kb = _fan_param(v0, w0, b)
    lo, hi = min(ka, kb), max(ka, kb)
    # the fan parametrises the circle minus s0; the arc away from s0 is
    # the bounded parameter window, endpoints excluded
    out = set()
    for k in range(math.floor(lo) + 1, math.ceil(hi)):
        out.add(_fan_member(v0, w0, k))
    return frozenset(out)


@dataclass(frozen=True)
class ContinuedFraction:
    """Minus-convention continued fraction [a0, ..., an], every ai >= 2.

    Value is a0 - 1/(a1 - 1/(... - 1/an)), always a rational > 1.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries:
            raise DomainError("continued fraction needs at least one entry")
        if any(e < 2 for e in self.entries):
            raise DomainError("minus continued fraction entries must be >= 2")

    def __str__(self) -> str:
        return "[%s]" % ",".join(str(e) for e in self.entries)


def cf_minus(x: Slope) -> ContinuedFraction:
    """Minus-convention continued fraction of a rational x > 1."""
    if x.is_infinite or not _pos_lt(ONE, x):
        raise DomainError("continued fraction domain is rationals > 1")
    p, q = x.num, x.den
    entries = []
    while True:
        a = -((-p) // q)  # ceil(p / q)
        entries.append(a)
        r = a * q - p
        if r == 0:
            break
        p, q = q, r
    return ContinuedFraction(tuple(entries))


def cf_value(cf: ContinuedFraction) -> Slope:
    """Exact value of a minus continued fraction."""
    num, den = cf.entries[-1], 1
    for a in reversed(cf.entries[:-1]):
        num, den = a * num - den, num
    return make_slope(num, den)
