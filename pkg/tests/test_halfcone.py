import pytest
import sympy as sp

from racg_anosov.core import DomainError
from racg_anosov.projgeom import (CROSSING, INCONCLUSIVE, MARGIN_DECAY, NESTED, STRONGLY_NESTED_AT_DEPTH, DepthRecord,
                                  classify, halfcone_approx, halfcone_containment_check, halfcone_duality_check,
                                  halfspaces_nest, nesting_probe, point_margins, projective_point, shared_face_vertices)
from racg_anosov.racg import parse_word
from racg_anosov.walls import make_wall


def wall(sys, prefix, s):
    return make_wall(sys, parse_word(sys, prefix), sys.index(s))


def test_halfcone_generators(free3_rep, free3):
    W = wall(free3, "", "a")
    plus = halfcone_approx(free3_rep, W, 1, 2)
    # the link of a is empty, so only the fundamental face survives
    assert len(plus.generators) == 3
    assert plus.generators[0] == projective_point(plus.geometry.polar)
    minus = halfcone_approx(free3_rep, W, -1, 2)
    assert minus.generators[0] == projective_point(-plus.geometry.polar)
    assert minus.generators[1:] == plus.generators[1:]
    assert plus.to_dict()["sign"] == "+"


def test_halfcone_grows_with_the_link(fig_a1_rep, fig_a1):
    W = wall(fig_a1, "", "a")
    sizes = [len(halfcone_approx(fig_a1_rep, W, 1, depth).generators) for depth in range(3)]
    assert sizes[0] < sizes[1] < sizes[2]


def test_halfcone_sign(free3_rep, free3):
    with pytest.raises(DomainError):
        halfcone_approx(free3_rep, wall(free3, "", "a"), 0, 1)


@pytest.mark.parametrize("prefix,s", [("", "a"), ("b", "c")])
def test_containment_in_the_free_product(free3_rep, free3, prefix, s):
    report = halfcone_containment_check(free3_rep, wall(free3, prefix, s), 2)
    assert report["checked"] > 0
    assert report["contained"] == report["checked"]
    assert report["failures"] == []


def test_containment_for_the_isolated_letter(fig_a1_rep, fig_a1):
    report = halfcone_containment_check(fig_a1_rep, wall(fig_a1, "", "e"), 2)
    assert report["contained"] == report["checked"] > 0


def test_halfspaces_nest(fig_a1):
    W, V = wall(fig_a1, "", "a"), wall(fig_a1, "a", "c")
    assert halfspaces_nest(fig_a1, W, V)
    assert not halfspaces_nest(fig_a1, V, W)
    assert not halfspaces_nest(fig_a1, W, wall(fig_a1, "", "b"))
    assert not halfspaces_nest(fig_a1, W, W)


def test_point_margins_in_the_depth_zero_chart(free3_rep, free3):
    W = wall(free3, "", "a")
    base = halfcone_approx(free3_rep, W, 1, 0).generators
    center = tuple(sum(g[i] for g in base) for i in range(3))
    margins = point_margins(free3_rep, W, 0, base + [center, tuple(-x for x in center)])
    assert margins == [0, 0, 0, sp.Rational(1, 3), None]


def record(depth, margin, certified=1, total=1, at_infinity=0):
    return DepthRecord(depth, None if margin is None else sp.Rational(margin), certified, total, at_infinity)


@pytest.mark.parametrize("records,expected", [
    ([], (INCONCLUSIVE, None)),
    ([record(0, 1), record(1, 1)], (STRONGLY_NESTED_AT_DEPTH, 0)),
    ([record(0, 0), record(1, "1/2")], (STRONGLY_NESTED_AT_DEPTH, 1)),
    ([record(0, "1/2"), record(1, "1/4"), record(2, 0)], (MARGIN_DECAY, 2)),
    ([record(0, 0), record(1, "1/10000000")], (NESTED, 1)),
    ([record(0, "1/2"), record(1, -1, certified=0)], (INCONCLUSIVE, None)),
    ([record(0, None, certified=0, at_infinity=1)], (INCONCLUSIVE, None)),
])
def test_classify(records, expected):
    assert classify(records) == expected


def test_depth_record_to_dict():
    doc = record(3, "1/4").to_dict()
    assert doc["min_margin"] == 0.25 and doc["min_margin_exact"] == "1/4"
    assert record(0, None, 0, 1, 1).to_dict()["min_margin"] is None


def test_probe_on_crossing_walls(fig_a1_rep, fig_a1):
    report = nesting_probe(fig_a1_rep, wall(fig_a1, "", "a"), wall(fig_a1, "", "b"), 2)
    assert report.relation == CROSSING
    assert report.records == []


def test_probe_rejects_reversed_walls(fig_a1_rep, fig_a1):
    with pytest.raises(DomainError):
        nesting_probe(fig_a1_rep, wall(fig_a1, "a", "c"), wall(fig_a1, "", "a"), 1)
    with pytest.raises(DomainError):
        nesting_probe(fig_a1_rep, wall(fig_a1, "", "a"), wall(fig_a1, "b", "a"), 1)


def test_walls_sharing_a_face_only_touch(pentagon_rep, pentagon):
    # a·W(c) meets the closure of W(a), so no depth separates them
    report = nesting_probe(pentagon_rep, wall(pentagon, "", "a"), wall(pentagon, "a", "c"), 1)
    assert report.relation == MARGIN_DECAY
    assert [r.min_margin for r in report.records] == [0, 0]
    assert [r.depth for r in report.records] == [0, 1]
    assert all(r.total == len(halfcone_approx(pentagon_rep, wall(pentagon, "a", "c"), 1, r.depth).generators) for r in report.records)
    assert len(report.rows()) == 2
    assert report.to_dict()["witnesses"] is False


@pytest.mark.slow
def test_disjoint_pentagon_walls_nest_strongly(pentagon_rep, pentagon):
    report = nesting_probe(pentagon_rep, wall(pentagon, "", "a"), wall(pentagon, "acebda", "c"), 6)
    assert report.relation == STRONGLY_NESTED_AT_DEPTH
    deep = [r for r in report.records if r.depth >= 2]
    assert [r.depth for r in deep] == [2, 3, 4, 5, 6]
    assert all(r.full for r in deep)
    floors = [float(r.min_margin) for r in deep]
    assert min(floors) >= 0.06
    assert floors[-1] >= 0.066


def test_duality_pairings_are_nonpositive(free3_rep, free3):
    report = halfcone_duality_check(free3_rep, wall(free3, "", "a"), 1)
    assert report["pairings"] > 0
    assert report["violations"] == 0
    assert report["nonpositive"]


def test_shared_face_vertices(fig_a1_rep, fig_a1):
    # W(a) and W(b) cross along a codimension two face of the fundamental simplex
    shared = shared_face_vertices(fig_a1_rep, wall(fig_a1, "", "a"), wall(fig_a1, "", "b"), 1)
    corners = [projective_point(c) for c in fig_a1_rep.simplex_vertices()]
    assert set(corners[2:]) <= set(shared)
