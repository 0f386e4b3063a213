from __future__ import annotations

from fractions import Fraction as F
from itertools import product

from hypothesis import given
from hypothesis import strategies as st

from dofic import AntennaConfig, BoundLabel, RegionRelation, delayed_region, relation
from dofic.classify import classify_case
from dofic.polytope import (
    DofPoint,
    DofRegion,
    HalfPlaneBound,
    active_bounds,
    contains,
    convex_hull,
    enumerate_vertices,
    in_hull,
)
from dofic.regions import no_csi_region

L = BoundLabel


def box(x, y, *extra):
    return DofRegion.from_bounds([HalfPlaneBound(L.LO1, 1, 0, x), HalfPlaneBound(L.LO2, 0, 1, y), *extra])


def pts(*pairs):
    return [DofPoint(F(a), F(b)) for a, b in pairs]


def test_enumerate_examples():
    r = box(3, 1, HalfPlaneBound(L.L1, F(1, 3), F(1, 2), 1))
    assert r.vertices == tuple(pts((3, 0), (F(3, 2), 1), (0, 1), (0, 0)))
    r = box(2, 2, HalfPlaneBound(L.L3, 1, 1, 2))
    assert r.vertices == tuple(pts((2, 0), (0, 2), (0, 0)))
    assert box(1, 1).vertices == tuple(pts((1, 0), (1, 1), (0, 1), (0, 0)))


def test_enumerate_merges_collinear_and_duplicate_bounds():
    same = [HalfPlaneBound(L.L1, 1, 1, 2), HalfPlaneBound(L.L3, 2, 2, 4)]
    assert box(2, 2, *same).vertices == tuple(pts((2, 0), (0, 2), (0, 0)))


def test_contains_examples():
    r = delayed_region(AntennaConfig(3, 1, 4, 2))
    assert contains(r, (F(3, 2), 1))
    assert not contains(r, (2, 1))
    assert contains(r, (0, 0))
    assert not contains(r, (-1, 0))


def test_relation_examples():
    from dofic import perfect_region

    c = AntennaConfig(2, 2, 2, 2)
    assert relation(delayed_region(c), perfect_region(c)) is RegionRelation.EQUAL
    c = AntennaConfig(8, 1, 4, 3)
    assert relation(no_csi_region(c), delayed_region(c)) is RegionRelation.FIRST_STRICT_SUBSET
    assert relation(delayed_region(c), no_csi_region(c)) is RegionRelation.SECOND_STRICT_SUBSET
    assert relation(box(2, 1), box(1, 2)) is RegionRelation.INCOMPARABLE


def test_active_bounds_examples():
    assert active_bounds(delayed_region(AntennaConfig(3, 1, 4, 2))) == {L.L1}
    assert active_bounds(delayed_region(AntennaConfig(8, 1, 4, 3))) == {L.L3}
    assert active_bounds(delayed_region(AntennaConfig(7, 3, 5, 4))) == {L.L3, L.L4}


coef = st.fractions(min_value=0, max_value=5, max_denominator=6)
pos = st.fractions(min_value=F(1, 6), max_value=6, max_denominator=6)
bounds = st.lists(st.tuples(coef, coef, pos).filter(lambda t: t[0] or t[1]), max_size=4)


@given(pos, pos, bounds, st.lists(st.tuples(coef, coef), min_size=1, max_size=20))
def test_vertices_reproduce_membership(x, y, extra, probes):
    r = box(x, y, *[HalfPlaneBound(L.L3, a, b, c) for a, b, c in extra])
    verts = list(r.vertices)
    assert len(set(verts)) == len(verts)
    for v in verts:  # every vertex is tight on two constraints (axes count)
        tight = sum(b.tight(v) for b in r.bounds) + (v.d1 == 0) + (v.d2 == 0)
        assert tight >= 2
    hull = convex_hull(verts)
    for p in probes:
        inside = contains(r, p)
        assert inside == (in_hull(hull, p) if len(hull) >= 3 else inside)


@given(pos, pos, pos, pos)
def test_relation_antisymmetric(a, b, c, d):
    r1, r2 = box(a, b), box(c, d)
    rel, back = relation(r1, r2), relation(r2, r1)
    flip = {
        RegionRelation.EQUAL: RegionRelation.EQUAL,
        RegionRelation.FIRST_STRICT_SUBSET: RegionRelation.SECOND_STRICT_SUBSET,
        RegionRelation.SECOND_STRICT_SUBSET: RegionRelation.FIRST_STRICT_SUBSET,
        RegionRelation.INCOMPARABLE: RegionRelation.INCOMPARABLE,
    }
    assert back is flip[rel]
    assert relation(r1, r1) is RegionRelation.EQUAL


def test_enumerate_matches_brute_force_grid():
    # Oracle: a grid point p/6 is inside iff it is a convex combination of
    # the vertices, decided here by the half-plane test on each bound.
    for t in product(range(1, 6), repeat=4):
        c = AntennaConfig(*t)
        if not c.is_canonical:
            continue
        r = delayed_region(c)
        hull = convex_hull(r.vertices)
        for i, j in product(range(0, 37, 5), repeat=2):
            p = (F(i, 6), F(j, 6))
            assert contains(r, p) == in_hull(hull, p)


def test_region_shape_lemmas():
    for t in product(range(1, 8), repeat=4):
        c = AntennaConfig(*t)
        if not c.is_canonical:
            continue
        m1, m2, n1, n2 = t
        r = delayed_region(c)
        if m1 > n2:
            for v in r.vertices:
                if v.d1 == min(m1, n1):
                    assert v.d2 == 0, t
            if m2 >= n2:
                for v in r.vertices:
                    if v.d2 == min(m2, n2):
                        assert v.d1 == 0, t
            else:
                assert contains(r, (n2 - m2, m2)), t
        assert classify_case(c)  # total


def test_enumerate_vertices_function_directly():
    b = [HalfPlaneBound(L.LO1, 1, 0, 1), HalfPlaneBound(L.LO2, 0, 1, 1)]
    assert enumerate_vertices(b) == pts((1, 0), (1, 1), (0, 1), (0, 0))
