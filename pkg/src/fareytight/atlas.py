"""The tight contact structures on r-surgery on the right-handed
trefoil, for r in (0,1), and their fillability status.

With n maximal such that r < 1/n, a structure is a triple (k, l, P):
row k in 1..n, offset l in 0..n-k, and P a tight structure on the
solid torus from r to 1/n.  The triples form a triangle with n(n+1)/2
vertices, each holding phi(r) choices of P.  Verdicts are looked up in
a rule table encoding known classification results; each verdict cites
the result it comes from, and anything outside the covered surgery
ranges is reported as NotCoveredByPaper rather than guessed.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .slopes import (
    DomainError,
    Slope,
    ZERO,
    cw_interval_contains,
    is_edge,
    make_slope,
    neighbors_in_interval,
    slope_sort_key,
    _pos_lt,
)
from .paths import FareyPath, concat
from .tori import DecoratedPath, ShuffleClass, enumerate_tight, signed_blocks


class Fillability(str, Enum):
    STEIN = "Stein"
    STRONG_NOT_EXACT = "StrongNotExact"
    STRONG_STEIN_CONDITIONAL = "StrongSteinConditional"
    NOT_COVERED = "NotCoveredByPaper"

    @property
    def json_key(self) -> str:
        return _JSON_KEYS[self]


_JSON_KEYS = {
    Fillability.STEIN: "stein",
    Fillability.STRONG_NOT_EXACT: "strong_not_exact",
    Fillability.STRONG_STEIN_CONDITIONAL: "strong_stein_conditional",
    Fillability.NOT_COVERED: "not_covered_by_paper",
}

# citation tags attached to verdicts, one per encoded result
CITE_BASE_ROW = "Lemma 4.2"
CITE_INTERIOR = "Thm 4.4"
CITE_WIDE_INTERVAL = "Thm 1.3"  # r in [(2n-1)/2n^2, 2/(2n+1))
CITE_N2_INTERVAL = "Thm 1.4"  # n = 2, r in [9/25, 4/11)
CITE_N3_INTERVAL = "Thm 1.5"  # n = 3, r in [13/49, 4/15)


def n_of(r: Slope) -> int:
    """The unique n with 1/(n+1) <= r < 1/n, for r in (0,1)."""
    if r.is_infinite or not 0 < r.num < r.den:
        raise DomainError("surgery coefficient must lie in (0,1)")
    return (r.den - 1) // r.num


@dataclass(frozen=True)
class TightStructureId:
    """Coordinates (k, l, P) of one tight structure on the r-surgery."""

    r: Slope
    k: int
    l: int
    P: ShuffleClass

    def __post_init__(self):
        n = n_of(self.r)
        if not 1 <= self.k <= n:
            raise DomainError("k must lie in 1..%d" % n)
        if not 0 <= self.l <= n - self.k:
            raise DomainError("l must lie in 0..%d" % (n - self.k))
        if self.P.path.start != self.r or self.P.path.end != make_slope(1, n):
            raise DomainError("P must run from %s to 1/%d" % (self.r, n))


@dataclass(frozen=True)
class TrianglePosition:
    tag: str  # Base, Top, Interior or Side
    side: str | None = None  # "low" (l=0) or "high" (l=n-k) when Side


@dataclass(frozen=True)
class MixedTorus:
    """Convex torus with dividing slope s0 flanked by opposite-sign
    basic slices whose far dividing slopes are s1 and s_neg1."""

    s0: Slope
    s1: Slope
    s_neg1: Slope

    def __post_init__(self):
        if not (is_edge(self.s0, self.s1) and is_edge(self.s0, self.s_neg1)):
            raise DomainError("associated slopes must be Farey-adjacent to s0")


@dataclass(frozen=True)
class FillabilityVerdict:
    status: Fillability
    cite: str | None
    note: str | None = None

    def __post_init__(self):
        if self.status is Fillability.NOT_COVERED:
            if self.cite is not None:
                raise DomainError("uncovered verdicts carry no citation")
        elif not self.cite:
            raise DomainError("covered verdicts must cite their source result")


def enumerate_structures(r: Slope) -> list[TightStructureId]:
    """All (k, l, P), k ascending, l ascending, P in enumeration order;
    n(n+1)/2 * phi(r) entries."""
    n = n_of(r)
    classes = [st.iso_class for st in enumerate_tight(r, make_slope(1, n))]
    out = []
    for k in range(1, n + 1):
        for l in range(0, n - k + 1):
            for cls in classes:
                out.append(TightStructureId(r, k, l, cls))
    return out


def triangle_position(sid: TightStructureId) -> TrianglePosition:
    n = n_of(sid.r)
    if sid.k == 1:
        return TrianglePosition("Base")
    if sid.k == n:
        return TrianglePosition("Top")
    if 1 <= sid.l <= n - sid.k - 1:
        return TrianglePosition("Interior")
    return TrianglePosition("Side", "low" if sid.l == 0 else "high")


def full_path(sid: TightStructureId) -> DecoratedPath:
    """Decorated path of the structure: a representative of P followed
    by the integer-reciprocal block 1/n, ..., 1/k with l minus signs at
    its clockwise end."""
    n = n_of(sid.r)
    d = sid.P.canonical_decorated()
    if sid.k == n:
        return d
    tail = FareyPath(tuple(make_slope(1, j) for j in range(n, sid.k - 1, -1)))
    tail_signs = (1,) * (n - sid.k - sid.l) + (-1,) * sid.l
    return DecoratedPath(concat(d.path, tail), d.signs + tail_signs)


def mixed_tori(sid: TightStructureId) -> list[MixedTorus]:
    """All interior vertices of the structure's path where some shuffle
    representative has opposite signs on the two adjacent edges."""
    full = full_path(sid)
    vs = full.path.vertices
    runs = signed_blocks(full.path).runs
    counts = [sum(1 for e in run if full.signs[e - 1] == -1) for run in runs]
    spots = set()
    for run, cnt in zip(runs, counts):
        if 0 < cnt < len(run):
            # both signs inside one block: every interior vertex works
            for e in run[:-1]:
                spots.add(e + 1)
    for (run_a, cnt_a), (run_b, cnt_b) in zip(
        zip(runs, counts), zip(runs[1:], counts[1:])
    ):
        can_flip = (cnt_a < len(run_a) and cnt_b > 0) or (cnt_a > 0 and cnt_b < len(run_b))
        if can_flip:
            spots.add(run_b[0])
    return [MixedTorus(vs[i], vs[i - 1], vs[i + 1]) for i in sorted(spots)]


def exceptional_slopes(t: MixedTorus, paper_mode: bool = False) -> frozenset[Slope]:
    """Farey neighbours of s0 in the arc between the associated slopes
    not containing s0.

    paper_mode drops slope 0 in the one tabulated pattern where s0 is
    1/n with associated slopes 2/(2n+1) and 1/(n-1); the raw neighbour
    computation is the default.
    """
    if cw_interval_contains(t.s0, t.s1, t.s_neg1):
        a, b = t.s_neg1, t.s1
    else:
        a, b = t.s1, t.s_neg1
    out = neighbors_in_interval(t.s0, a, b)
    if paper_mode and t.s0.num == 1 and t.s0.den >= 2:
        n = t.s0.den
        if {t.s1, t.s_neg1} == {make_slope(2, 2 * n + 1), make_slope(1, n - 1)}:
            out = out - {ZERO}
    return frozenset(out)


def _in_interval(r: Slope, lo: Slope, hi: Slope) -> bool:
    # left-closed right-open, all slopes in (0,1)
    return (r == lo or _pos_lt(lo, r)) and _pos_lt(r, hi)


def _uniform(cls: ShuffleClass) -> bool:
    total = sum(cls.blocks.sizes)
    minus = sum(cls.minus_counts)
    return minus == 0 or minus == total


def classify(sid: TightStructureId) -> FillabilityVerdict:
    """Fillability verdict by rule table, first match wins."""
    n = n_of(sid.r)
    pos = triangle_position(sid)
    if pos.tag == "Base":
        return FillabilityVerdict(Fillability.STEIN, CITE_BASE_ROW)
    if pos.tag == "Interior":
        return FillabilityVerdict(Fillability.STRONG_NOT_EXACT, CITE_INTERIOR)
    if n == 2 and _in_interval(sid.r, make_slope(9, 25), make_slope(4, 11)):
        if _uniform(sid.P):
            return FillabilityVerdict(Fillability.STEIN, CITE_N2_INTERVAL)
        return FillabilityVerdict(Fillability.STRONG_NOT_EXACT, CITE_N2_INTERVAL)
    if n == 3 and _in_interval(sid.r, make_slope(13, 49), make_slope(4, 15)):
        if pos.tag == "Side" or _uniform(sid.P):
            return FillabilityVerdict(Fillability.STEIN, CITE_N3_INTERVAL)
        return FillabilityVerdict(Fillability.STRONG_NOT_EXACT, CITE_N3_INTERVAL)
    if _in_interval(sid.r, make_slope(2 * n - 1, 2 * n * n), make_slope(2, 2 * n + 1)):
        if n <= 3 or pos.tag == "Top":
            return FillabilityVerdict(Fillability.STEIN, CITE_WIDE_INTERVAL)
        runs = sid.P.blocks.runs
        last_size = len(runs[-1]) if runs else 0
        last_minus = sid.P.minus_counts[-1] if runs else 0
        if (pos.side == "low" and last_minus == 0) or (
            pos.side == "high" and last_minus == last_size
        ):
            return FillabilityVerdict(Fillability.STEIN, CITE_WIDE_INTERVAL)
        return FillabilityVerdict(
            Fillability.STRONG_STEIN_CONDITIONAL,
            CITE_WIDE_INTERVAL,
            note="Stein exactly when the matching side structure on the 1/%d-surgery "
            "is Stein (open)" % (n + 1),
        )
    return FillabilityVerdict(Fillability.NOT_COVERED, None)


def verdict_summary(r: Slope) -> dict[Fillability, int]:
    """Verdict tallies over all structures of the r-surgery; statuses
    with count 0 are omitted."""
    tally = Counter(classify(sid).status for sid in enumerate_structures(r))
    return {status: tally[status] for status in Fillability if tally[status]}


def structure_record(sid: TightStructureId) -> dict:
    """JSON-ready record of one structure and its verdict."""
    verdict = classify(sid)
    rec = {
        "r": str(sid.r),
        "k": sid.k,
        "l": sid.l,
        "P": sid.P.to_json(),
        "position": triangle_position(sid).tag,
        "status": verdict.status.value,
        "cite": verdict.cite,
    }
    if verdict.note is not None:
        rec["note"] = verdict.note
    return rec


def sorted_slopes(slopes) -> list[Slope]:
    return sorted(slopes, key=slope_sort_key)
