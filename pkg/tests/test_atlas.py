import random
from fractions import Fraction
from math import gcd

import pytest

from fareytight.slopes import DomainError, INF, ONE, ZERO, make_slope, parse_slope
from fareytight.paths import minimal_path
from fareytight.tori import ShuffleClass, phi
from fareytight.atlas import (
    CITE_BASE_ROW,
    CITE_INTERIOR,
    CITE_N2_INTERVAL,
    CITE_N3_INTERVAL,
    CITE_WIDE_INTERVAL,
    Fillability,
    MixedTorus,
    TightStructureId,
    classify,
    enumerate_structures,
    exceptional_slopes,
    full_path,
    mixed_tori,
    n_of,
    sorted_slopes,
    structure_record,
    triangle_position,
    verdict_summary,
)

from helpers import random_unit_rational


def S(text):
    return parse_slope(text)


def class_of(r, counts):
    rr = S(r)
    return ShuffleClass(minimal_path(rr, make_slope(1, n_of(rr))), counts)


def sid_of(r, k, l, counts):
    return TightStructureId(S(r), k, l, class_of(r, counts))


def test_n_of_fixtures():
    assert n_of(S("9/25")) == 2
    assert n_of(S("13/49")) == 3
    assert n_of(S("7/32")) == 4
    assert n_of(S("1/3")) == 2  # 1/(n+1) <= r < 1/n puts 1/3 at n=2
    assert n_of(S("2/3")) == 1
    assert n_of(S("1/7")) == 6


def test_n_of_domain():
    for bad in (ZERO, ONE, INF, S("3/2"), S("-1/4")):
        with pytest.raises(DomainError):
            n_of(bad)


def test_structure_id_validation():
    with pytest.raises(DomainError):
        sid_of("9/25", 3, 0, (0,))  # k > n
    with pytest.raises(DomainError):
        sid_of("9/25", 1, 2, (0,))  # l > n - k
    with pytest.raises(DomainError):
        TightStructureId(S("9/25"), 1, 0, class_of("13/49", (0,)))


def test_enumerate_structures_counts():
    assert len(enumerate_structures(S("1/7"))) == 21  # n=6, phi=1
    assert len(enumerate_structures(S("9/25"))) == 12  # n=2, phi=4
    assert len(enumerate_structures(S("7/32"))) == 20  # n=4, phi=2
    assert len(enumerate_structures(S("13/49"))) == 24  # n=3, phi=4


def test_enumerate_structures_count_formula():
    rng = random.Random(2026)
    for _ in range(25):
        r = random_unit_rational(rng, 80)
        if r.num == 1:
            continue
        n = n_of(r)
        assert len(enumerate_structures(r)) == n * (n + 1) // 2 * phi(r), r


def test_enumerate_structures_ordering():
    sids = enumerate_structures(S("1/4"))  # n=3, phi=1, 6 entries
    assert [(s.k, s.l) for s in sids] == [
        (1, 0),
        (1, 1),
        (1, 2),
        (2, 0),
        (2, 1),
        (3, 0),
    ]


def test_triangle_position_fixtures():
    # n = 6 surgeries: r = 1/7
    def pos(k, l):
        return triangle_position(sid_of("1/7", k, l, ()))

    assert pos(1, 3).tag == "Base"
    assert pos(6, 0).tag == "Top"
    assert pos(3, 2).tag == "Interior"
    assert pos(3, 0) .tag == "Side" and pos(3, 0).side == "low"
    assert pos(3, 3).tag == "Side" and pos(3, 3).side == "high"
    assert pos(1, 0).tag == "Base"  # base beats side on the corner


def test_triangle_position_n1_is_base():
    p = triangle_position(sid_of("2/3", 1, 0, ()))
    assert p.tag == "Base"


def test_full_path_fixture_side():
    d = full_path(sid_of("1/4", 2, 1, ()))
    assert [str(v) for v in d.path.vertices] == ["1/4", "1/3", "1/2"]
    assert d.signs == (-1,)


def test_full_path_fixture_base():
    d = full_path(sid_of("1/4", 1, 2, ()))
    assert [str(v) for v in d.path.vertices] == ["1/4", "1/3", "1/2", "1"]
    assert d.signs == (-1, -1)


def test_full_path_fixture_top_with_P():
    d = full_path(sid_of("9/25", 2, 0, (0,)))
    assert [str(v) for v in d.path.vertices] == ["9/25", "4/11", "3/8", "2/5", "1/2"]
    assert d.signs == (1, 1, 1)


def test_full_path_fixture_mixed_tail():
    d = full_path(sid_of("13/49", 1, 1, (2,)))
    assert [str(v) for v in d.path.vertices] == [
        "13/49",
        "4/15",
        "3/11",
        "2/7",
        "1/3",
        "1/2",
        "1",
    ]
    # P contributes (+,-,-); tail of 2 edges gets first 1 plus, last 1 minus
    assert d.signs == (1, -1, -1, 1, -1)


def test_mixed_tori_in_block():
    tori = mixed_tori(sid_of("9/25", 2, 0, (1,)))
    assert [(str(t.s0), str(t.s1), str(t.s_neg1)) for t in tori] == [
        ("3/8", "4/11", "2/5"),
        ("2/5", "3/8", "1/2"),
    ]


def test_mixed_tori_uniform_is_empty():
    assert mixed_tori(sid_of("9/25", 2, 0, (0,))) == []
    assert mixed_tori(sid_of("9/25", 2, 0, (3,))) == []


def test_mixed_tori_in_merged_tail():
    # r=1/5, k=2, l=1: the two tail edges merge into one block carrying
    # a plus and a minus, so the interior vertex 1/3 is mixed
    tori = mixed_tori(sid_of("1/5", 2, 1, ()))
    assert [(str(t.s0), str(t.s1), str(t.s_neg1)) for t in tori] == [
        ("1/3", "1/4", "1/2")
    ]


def test_mixed_tori_junction_between_blocks():
    # 9/25 at k=1: P's block (edges into 1/2) abuts the single tail edge
    # (1/2 -> 1); opposite exposure at the junction vertex 1/2
    tori = mixed_tori(sid_of("9/25", 1, 1, (0,)))
    assert [(str(t.s0), str(t.s1), str(t.s_neg1)) for t in tori] == [
        ("1/2", "2/5", "1")
    ]
    tori = mixed_tori(sid_of("9/25", 1, 0, (3,)))
    assert [(str(t.s0), str(t.s1), str(t.s_neg1)) for t in tori] == [
        ("1/2", "2/5", "1")
    ]
    assert mixed_tori(sid_of("9/25", 1, 0, (0,))) == []
    assert mixed_tori(sid_of("9/25", 1, 1, (3,))) == []


def test_mixed_torus_validation():
    with pytest.raises(DomainError):
        MixedTorus(S("1/3"), S("1/5"), S("1/2"))


def test_exceptional_slopes_integer_reciprocal():
    # (1/k; 1/(k+1), 1/(k-1)) has the single exceptional slope 0
    for k in range(2, 9):
        t = MixedTorus(make_slope(1, k), make_slope(1, k + 1), make_slope(1, k - 1))
        assert exceptional_slopes(t) == frozenset({ZERO}), k
        assert exceptional_slopes(t, paper_mode=True) == frozenset({ZERO}), k


def test_exceptional_slopes_with_infinite_flank():
    t = MixedTorus(ONE, S("1/2"), INF)
    assert exceptional_slopes(t) == frozenset({ZERO})


def test_exceptional_slopes_mid_block_torus():
    t = MixedTorus(S("3/8"), S("4/11"), S("2/5"))
    assert exceptional_slopes(t) == frozenset({S("1/3")})
    assert exceptional_slopes(t, paper_mode=True) == frozenset({S("1/3")})


def test_exceptional_slopes_paper_mode_drops_zero():
    t = MixedTorus(S("1/4"), S("2/9"), S("1/3"))
    assert exceptional_slopes(t) == frozenset({ZERO, S("1/5")})
    assert exceptional_slopes(t, paper_mode=True) == frozenset({S("1/5")})


def test_sorted_slopes_order():
    out = sorted_slopes({S("1/2"), ZERO, INF, S("-1/3"), S("2")})
    assert [str(s) for s in out] == ["-1/3", "0", "1/2", "2", "inf"]


def test_classify_base_is_stein():
    v = classify(sid_of("9/25", 1, 0, (2,)))
    assert v.status is Fillability.STEIN
    assert v.cite == CITE_BASE_ROW
    v = classify(sid_of("2/3", 1, 0, ()))
    assert v.status is Fillability.STEIN


def test_classify_interior_not_exact():
    v = classify(sid_of("1/7", 3, 2, ()))
    assert v.status is Fillability.STRONG_NOT_EXACT
    assert v.cite == CITE_INTERIOR


def test_classify_n2_interval():
    assert classify(sid_of("9/25", 2, 0, (0,))).status is Fillability.STEIN
    assert classify(sid_of("9/25", 2, 0, (0,))).cite == CITE_N2_INTERVAL
    assert classify(sid_of("9/25", 2, 0, (3,))).status is Fillability.STEIN
    assert classify(sid_of("9/25", 2, 0, (1,))).status is Fillability.STRONG_NOT_EXACT
    assert classify(sid_of("9/25", 2, 0, (2,))).cite == CITE_N2_INTERVAL


def test_classify_n3_interval():
    # top row: uniform P Stein, mixed P strong-not-exact
    assert classify(sid_of("13/49", 3, 0, (0,))).status is Fillability.STEIN
    assert classify(sid_of("13/49", 3, 0, (1,))).status is Fillability.STRONG_NOT_EXACT
    assert classify(sid_of("13/49", 3, 0, (1,))).cite == CITE_N3_INTERVAL
    # side rows in that interval are Stein whatever P does
    assert classify(sid_of("13/49", 2, 0, (2,))).status is Fillability.STEIN
    assert classify(sid_of("13/49", 2, 1, (2,))).status is Fillability.STEIN


def test_classify_wide_interval_top():
    assert classify(sid_of("7/32", 4, 0, (0,))).status is Fillability.STEIN
    assert classify(sid_of("7/32", 4, 0, (0,))).cite == CITE_WIDE_INTERVAL


def test_classify_wide_interval_sides():
    # n=4, r=7/32 in [7/32, 2/9); P has one block of one edge
    stein_low = classify(sid_of("7/32", 3, 0, (0,)))
    assert stein_low.status is Fillability.STEIN
    cond_low = classify(sid_of("7/32", 3, 0, (1,)))
    assert cond_low.status is Fillability.STRONG_STEIN_CONDITIONAL
    assert cond_low.cite == CITE_WIDE_INTERVAL
    assert cond_low.note is not None and "1/5" in cond_low.note
    stein_high = classify(sid_of("7/32", 3, 1, (1,)))
    assert stein_high.status is Fillability.STEIN
    cond_high = classify(sid_of("7/32", 3, 1, (0,)))
    assert cond_high.status is Fillability.STRONG_STEIN_CONDITIONAL


def test_classify_wide_interval_interior():
    v = classify(sid_of("7/32", 2, 1, (0,)))
    assert v.status is Fillability.STRONG_NOT_EXACT
    assert v.cite == CITE_INTERIOR


def test_classify_uncovered():
    v = classify(sid_of("1/3", 2, 0, ()))  # r = 1/(n+1) misses every interval
    assert v.status is Fillability.NOT_COVERED
    assert v.cite is None
    # 7/20 has n=2 but sits below 9/25, outside both classified windows
    sids = [s for s in enumerate_structures(S("7/20")) if s.k == 2]
    assert sids and all(classify(s).status is Fillability.NOT_COVERED for s in sids)


def test_classify_n2_wide_interval_is_stein():
    # 5/13 lies in [3/8, 2/5); with n <= 3 the whole top is Stein there
    sids = [s for s in enumerate_structures(S("5/13")) if s.k == 2]
    for s in sids:
        v = classify(s)
        assert v.status is Fillability.STEIN
        assert v.cite == CITE_WIDE_INTERVAL


def test_verdict_summary_fixtures():
    assert verdict_summary(S("9/25")) == {
        Fillability.STEIN: 10,
        Fillability.STRONG_NOT_EXACT: 2,
    }
    assert verdict_summary(S("13/49")) == {
        Fillability.STEIN: 22,
        Fillability.STRONG_NOT_EXACT: 2,
    }
    assert verdict_summary(S("7/32")) == {
        Fillability.STEIN: 14,
        Fillability.STRONG_NOT_EXACT: 2,
        Fillability.STRONG_STEIN_CONDITIONAL: 4,
    }
    assert verdict_summary(S("22/61")) == {
        Fillability.STEIN: 18,
        Fillability.STRONG_NOT_EXACT: 6,
    }


def test_verdict_summary_uncovered_slope():
    # base row still Stein; only the top of the n=2 triangle is uncovered
    assert verdict_summary(S("1/3")) == {
        Fillability.STEIN: 2,
        Fillability.NOT_COVERED: 1,
    }
    assert verdict_summary(S("7/20")) == {
        Fillability.STEIN: 12,
        Fillability.NOT_COVERED: 6,
    }


def test_position_tallies():
    from collections import Counter

    rng = random.Random(510)
    for _ in range(10):
        r = random_unit_rational(rng, 60)
        if r.num == 1:
            continue
        n = n_of(r)
        f = phi(r)
        tally = Counter(triangle_position(s).tag for s in enumerate_structures(r))
        assert tally["Base"] == n * f
        assert tally["Top"] == (f if n > 1 else 0)
        if n >= 2:
            assert tally["Side"] == 2 * (n - 2) * f
            assert tally["Interior"] == (n - 3) * (n - 2) // 2 * f


def test_structure_record_shape():
    rec = structure_record(sid_of("7/32", 3, 0, (1,)))
    assert rec["r"] == "7/32"
    assert rec["k"] == 3 and rec["l"] == 0
    assert rec["position"] == "Side"
    assert rec["status"] == "StrongSteinConditional"
    assert rec["cite"] == CITE_WIDE_INTERVAL
    assert "note" in rec
    rec2 = structure_record(sid_of("9/25", 2, 0, (0,)))
    assert rec2["status"] == "Stein"
    assert rec2["position"] == "Top"
    assert "note" not in rec2
    assert rec2["P"] == {
        "path": ["9/25", "4/11", "3/8", "2/5", "1/2"],
        "blocks": [[1], [2, 3, 4]],
        "minus": [0, 0],
    }


def test_fillability_json_keys():
    assert Fillability.STEIN.json_key == "stein"
    assert Fillability.STRONG_NOT_EXACT.json_key == "strong_not_exact"
    assert Fillability.STRONG_STEIN_CONDITIONAL.json_key == "strong_stein_conditional"
    assert Fillability.NOT_COVERED.json_key == "not_covered_by_paper"
    assert Fillability.STEIN.value == "Stein"
    assert Fillability.NOT_COVERED.value == "NotCoveredByPaper"
