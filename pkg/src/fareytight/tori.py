"""Tight contact structures on solid tori as decorated Farey paths.

A tight structure on a solid torus with lower meridian r and boundary
dividing slope s is a minimal clockwise path from r to s with a sign on
every edge but the first, taken up to shuffling signs inside continued
fraction blocks.  Counting is a product of (block size + 1) over the
signed blocks, which reproduces the continued fraction count phi.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .slopes import (
    DomainError,
    ONE,
    Slope,
    cf_minus,
    cw_interval_contains,
    det,
    is_edge,
    make_slope,
    _pos_lt,
)
from .paths import BlockDecomposition, FareyPath, edge_runs, lengthen_through, minimal_path


@dataclass(frozen=True)
class DecoratedPath:
    """Farey path with a sign (+1 or -1) on every edge except the first."""

    path: FareyPath
    signs: tuple[int, ...]

    def __post_init__(self):
        m = len(self.path)
        if m < 1:
            raise DomainError("decorated path needs at least one edge")
        if len(self.signs) != m - 1:
            raise DomainError("expected %d signs, got %d" % (m - 1, len(self.signs)))
        if any(s not in (1, -1) for s in self.signs):
            raise DomainError("signs must be +1 or -1")

    def __str__(self) -> str:
        vs = self.path.vertices
        out = [str(vs[0])]
        for e in range(1, len(vs)):
            mark = "" if e == 1 else ("+" if self.signs[e - 2] == 1 else "-")
            out.append(" →%s %s" % (mark, vs[e]))
        return "".join(out)


def signed_blocks(path: FareyPath) -> BlockDecomposition:
    """Block decomposition of the signed edges (all edges but the first).

    The unsigned first edge is excluded even when it is geometrically
    contiguous with the first signed block.
    """
    return BlockDecomposition(edge_runs(path, 1, len(path) - 1))


@dataclass(frozen=True)
class ShuffleClass:
    """A decorated path up to shuffling: per-signed-block minus counts."""

    path: FareyPath
    minus_counts: tuple[int, ...]

    def __post_init__(self):
        runs = signed_blocks(self.path).runs
        if len(self.minus_counts) != len(runs):
            raise DomainError(
                "expected %d block counts, got %d" % (len(runs), len(self.minus_counts))
            )
        for cnt, run in zip(self.minus_counts, runs):
            if not 0 <= cnt <= len(run):
                raise DomainError("minus count %d outside block of size %d" % (cnt, len(run)))

    @property
    def blocks(self) -> BlockDecomposition:
        return signed_blocks(self.path)

    def canonical_decorated(self) -> DecoratedPath:
        """Representative with the minus signs at the clockwise end of
        each block."""
        signs = [1] * (len(self.path) - 1)
        for cnt, run in zip(self.minus_counts, self.blocks.runs):
            for e in run[len(run) - cnt :]:
                signs[e - 1] = -1
        return DecoratedPath(self.path, tuple(signs))

    def to_json(self) -> dict:
        # the unsigned first edge is reported as its own block with count 0
        runs = [[e + 1 for e in run] for run in self.blocks.runs]
        return {
            "path": [str(v) for v in self.path.vertices],
            "blocks": [[1]] + runs,
            "minus": [0] + list(self.minus_counts),
        }

    def __str__(self) -> str:
        return str(self.canonical_decorated())


def shuffle_canonical(d: DecoratedPath) -> ShuffleClass:
    """The shuffle class of a decorated path (on a minimal path this is
    the isotopy class of the structure it describes)."""
    counts = []
    for run in signed_blocks(d.path).runs:
        counts.append(sum(1 for e in run if d.signs[e - 1] == -1))
    return ShuffleClass(d.path, tuple(counts))


@dataclass(frozen=True)
class SolidTorusStructure:
    """Tight structure on the solid torus with the given lower meridian
    and boundary dividing slope."""

    meridian: Slope
    dividing: Slope
    iso_class: ShuffleClass

    def __post_init__(self):
        if self.iso_class.path.start != self.meridian:
            raise DomainError("class path must start at the meridian")
        if self.iso_class.path.end != self.dividing:
            raise DomainError("class path must end at the dividing slope")


def count_tight(r: Slope, s: Slope) -> int:
    """Number of tight structures with lower meridian r and dividing
    slope s: product of (size + 1) over signed blocks of the minimal
    path from r to s."""
    out = 1
    for run in signed_blocks(minimal_path(r, s)).runs:
        out *= len(run) + 1
    return out


def phi(r: Slope) -> int:
    """For r in (0,1) with 1/r = [a0,...,an]: the product
    (a1-1)...(an-1).  This is count_tight(r, 1/n) for the maximal n
    with 1/n > r."""
    if r.is_infinite or not 0 < r.num < r.den:
        raise DomainError("phi is defined for slopes in (0,1)")
    entries = cf_minus(make_slope(r.den, r.num)).entries
    out = 1
    for a in entries[1:]:
        out *= a - 1
    return out


def count_tight_upper(x: Slope, s: Slope) -> int:
    """Count for the upper-meridian solid torus: meridian x > 1,
    dividing slope s anticlockwise of x.  Here the unsigned edge is the
    last one (incident to x), so the block product runs over all edges
    of minimal_path(s, x) except the last."""
    if x.is_infinite or not _pos_lt(ONE, x):
        raise DomainError("upper meridian must be a rational > 1")
    if s.is_infinite or not _pos_lt(s, x):
        raise DomainError("dividing slope must be a rational below the meridian")
    path = minimal_path(s, x)
    out = 1
    for run in edge_runs(path, 0, len(path) - 2):
        out *= len(run) + 1
    return out


def enumerate_tight(r: Slope, s: Slope) -> list[SolidTorusStructure]:
    """All tight structures, in lexicographic minus-count order."""
    path = minimal_path(r, s)
    sizes = signed_blocks(path).sizes
    out = []
    for counts in itertools.product(*[range(sz + 1) for sz in sizes]):
        out.append(SolidTorusStructure(r, s, ShuffleClass(path, counts)))
    return out


def lengthen_decorated(d: DecoratedPath, t: Slope) -> DecoratedPath:
    """Refine the edge containing t.  Edges replacing a signed edge all
    inherit its sign; edges replacing the unsigned first edge stay
    unsigned next to the meridian and take + elsewhere (the two sign
    choices there give the same structure, + is the canonical pick)."""
    vs = d.path.vertices
    new_path = lengthen_through(d.path, t)
    grown = len(new_path) - len(d.path)
    for i in range(len(vs) - 1):
        if cw_interval_contains(t, vs[i], vs[i + 1]):
            c = grown + 1  # edges replacing edge i
            if i == 0:
                new_signs = (1,) * (c - 1) + d.signs
            else:
                new_signs = d.signs[: i - 1] + (d.signs[i - 1],) * c + d.signs[i:]
            return DecoratedPath(new_path, new_signs)
    raise DomainError("slope %s is not interior to any edge of the path" % t)


def _successors(verts: tuple[Slope, ...], signs: tuple[int, ...]):
    # consistent shortenings: drop an interior vertex when the outer
    # vertices span an edge and the two merged edges agree in sign (the
    # unsigned first edge merges with anything and stays unsigned)
    for i in range(1, len(verts) - 1):
        if not is_edge(verts[i - 1], verts[i + 1]):
            continue
        if i == 1:
            yield verts[:1] + verts[2:], signs[1:]
        elif signs[i - 2] == signs[i - 1]:
            yield verts[:i] + verts[i + 1 :], signs[: i - 1] + signs[i:]
    # shuffles: adjacent signed edges in one block may swap their signs
    for j in range(1, len(verts) - 2):
        if signs[j - 1] != signs[j] and abs(det(verts[j], verts[j + 2])) == 2:
            yield verts, signs[: j - 1] + (signs[j], signs[j - 1]) + signs[j + 1 :]


def consistently_shorten(d: DecoratedPath) -> DecoratedPath | None:
    """Shorten d to a decorated minimal path, shuffling inside blocks as
    needed; None when no sequence of moves reaches the minimal path."""
    target = minimal_path(d.path.start, d.path.end).vertices
    start = (d.path.vertices, d.signs)
    if start[0] == target:
        return d
    queue = deque([start])
    seen = {start}
    while queue:
        state = queue.popleft()
        for nxt in _successors(*state):
            if nxt in seen:
                continue
            if nxt[0] == target:
                return DecoratedPath(FareyPath(nxt[0]), nxt[1])
            seen.add(nxt)
            queue.append(nxt)
    return None


def is_tight(d: DecoratedPath) -> bool:
    """A decorated path describes a tight structure exactly when it can
    be consistently shortened to the minimal path."""
    return consistently_shorten(d) is not None
