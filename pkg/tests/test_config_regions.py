from __future__ import annotations

from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dofic import (
    AntennaConfig,
    BoundLabel,
    ConditionNotSatisfied,
    CsiRegime,
    NonPositiveAntennaCount,
    RegionRelation,
    canonicalize,
    condition_holds,
    delayed_region,
    no_csi_region,
    perfect_region,
    region_for,
    relation,
    validate,
)
from dofic.polytope import DofPoint, contains
from dofic.regions import PRINTED_FORMULA_SUSPECT, bound

counts = st.integers(min_value=1, max_value=9)
configs = st.builds(AntennaConfig, counts, counts, counts, counts)
ALL6 = [AntennaConfig(*t) for t in product(range(1, 7), repeat=4)]
CANON6 = [c for c in ALL6 if c.is_canonical]


def vset(region):
    return set(region.vertices)


def pts(*pairs):
    return {DofPoint(F(a), F(b)) for a, b in pairs}


def test_validate():
    assert validate(3, 1, 4, 2).tuple == (3, 1, 4, 2)
    assert validate(1, 1, 1, 1).tuple == (1, 1, 1, 1)
    with pytest.raises(NonPositiveAntennaCount):
        validate(0, 1, 4, 2)
    with pytest.raises(TypeError):
        validate(1.5, 1, 1, 1)


def test_canonicalize_examples():
    assert canonicalize(AntennaConfig(3, 1, 4, 2)) == (AntennaConfig(3, 1, 4, 2), False)
    assert canonicalize(AntennaConfig(1, 3, 2, 4)) == (AntennaConfig(3, 1, 4, 2), True)
    assert canonicalize(AntennaConfig(2, 2, 3, 3)) == (AntennaConfig(2, 2, 3, 3), False)


@given(configs)
def test_canonicalize_idempotent(c):
    once, _ = canonicalize(c)
    assert canonicalize(once) == (once, False)
    assert once.n1 >= once.n2


@given(configs, st.sampled_from(list(CsiRegime)), st.fractions(0, 10), st.fractions(0, 10))
def test_mirror_consistency(c, regime, d1, d2):
    assert contains(region_for(c, regime), (d1, d2)) == contains(region_for(c.swapped(), regime), (d2, d1))


def test_condition_examples():
    assert condition_holds(1, AntennaConfig(7, 3, 5, 4))
    assert not condition_holds(1, AntennaConfig(3, 1, 4, 2))
    for c in CANON6:
        assert not condition_holds(2, c)


def _condition_literal(i, c):
    """Definition read left to right, each link checked separately."""
    mi, mj, ni, nj = (c.m1, c.m2, c.n1, c.n2) if i == 1 else (c.m2, c.m1, c.n2, c.n1)
    chain = [mi, ni + nj - mj, ni, nj, mj]
    if not all(a > b for a, b in zip(chain, chain[1:])):
        return False
    return F(mj) > F(nj * (nj - mj), ni - mj)


def test_conditions_never_both_and_match_literal():
    for t in product(range(1, 9), repeat=4):
        c = AntennaConfig(*t)
        h1, h2 = condition_holds(1, c), condition_holds(2, c)
        assert not (h1 and h2)
        assert h1 == _condition_literal(1, c) and h2 == _condition_literal(2, c)


def test_bound_examples():
    l3 = bound(BoundLabel.L3, AntennaConfig(4, 2, 3, 3))
    assert (l3.a, l3.b, l3.c) == (1, 1, 3)
    l1 = bound(BoundLabel.L1, AntennaConfig(3, 1, 4, 2))
    assert (l1.a, l1.b, l1.c) == (F(1, 3), F(1, 2), 1)
    l4 = bound(BoundLabel.L4, AntennaConfig(7, 3, 5, 4))
    assert (l4.a, l4.b, l4.c) == (1, F(5, 2), 9)
    with pytest.raises(ConditionNotSatisfied):
        bound(BoundLabel.L4, AntennaConfig(3, 1, 4, 2))
    with pytest.raises(ConditionNotSatisfied):
        bound(BoundLabel.L5, AntennaConfig(7, 3, 5, 4))


def test_delayed_examples():
    assert vset(delayed_region(AntennaConfig(3, 1, 4, 2))) == pts((0, 0), (3, 0), (F(3, 2), 1), (0, 1))
    assert vset(delayed_region(AntennaConfig(2, 2, 2, 2))) == pts((0, 0), (2, 0), (0, 2))
    assert DofPoint(F(7, 3), F(8, 3)) in delayed_region(AntennaConfig(7, 3, 5, 4)).vertices


def test_delayed_bound_set():
    for c in CANON6:
        labels = set(delayed_region(c).labels)
        expected = {BoundLabel.LO1, BoundLabel.LO2, BoundLabel.L1, BoundLabel.L2, BoundLabel.L3}
        if condition_holds(1, c):
            expected.add(BoundLabel.L4)
        assert labels == expected


def test_perfect_examples():
    assert vset(perfect_region(AntennaConfig(8, 1, 4, 3))) == pts((0, 0), (4, 0), (3, 1), (0, 1))
    c = AntennaConfig(2, 2, 2, 2)
    assert relation(perfect_region(c), delayed_region(c)) is RegionRelation.EQUAL
    assert vset(perfect_region(AntennaConfig(1, 1, 1, 1))) == pts((0, 0), (1, 0), (0, 1))


def _weighted(region):
    return next(b for b in region.bounds if b.label is BoundLabel.L1)


def test_no_csi_examples():
    b = _weighted(no_csi_region(AntennaConfig(3, 3, 2, 2)))
    assert (b.a / b.c, b.b / b.c) == (F(1, 2), F(1, 2))
    b = _weighted(no_csi_region(AntennaConfig(8, 1, 4, 3)))
    assert (b.a, b.b, b.c) == (F(1, 4), F(1, 3), 1)
    r = no_csi_region(AntennaConfig(3, 1, 4, 2))
    b = _weighted(r)
    assert (b.a, b.b, b.c) == (F(1, 3), F(1, 2), 1)
    assert PRINTED_FORMULA_SUSPECT in r.flags


def test_region_for_variants_and_mirror():
    c = AntennaConfig(3, 1, 4, 2)
    base = region_for(c, CsiRegime.DELAYED)
    for regime in ("delayed-tx", "delayed-cross"):
        assert region_for(c, regime) == base
    swapped = region_for(AntennaConfig(1, 3, 2, 4), "delayed")
    assert vset(swapped) == {v.mirrored() for v in base.vertices}


def test_containment_chain():
    allowed = (RegionRelation.EQUAL, RegionRelation.FIRST_STRICT_SUBSET)
    for c in CANON6:
        no, d, p = no_csi_region(c), delayed_region(c), perfect_region(c)
        assert relation(no, d) in allowed
        assert relation(d, p) in allowed


def test_coefficient_denominators_and_l4_slope():
    for c in CANON6:
        m1, m2, n1, n2 = c.tuple
        allowed = {min(n1 + n2, m1), min(n2, m1), min(n1, m2), min(n1 + n2, m2), n2, n1}
        for b in delayed_region(c).bounds:
            for x in (b.a, b.b, b.c):
                assert any(d % x.denominator == 0 for d in allowed), (c, b)
            if b.label is BoundLabel.L4:
                assert b.b > 1
