"""Case taxonomy, corner points and the three-regime comparison.

All functions take a canonical configuration (``n1 >= n2``) unless noted.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .config import AntennaConfig, CsiRegime, canonicalize
from .errors import CornerUndefinedForCase
from .polytope import (
    BoundLabel,
    DofPoint,
    RegionRelation,
    active_bounds,
    implied_by,
    relation,
    tight_somewhere,
)
from .regions import PRINTED_FORMULA_SUSPECT, condition_holds, region_for

L1, L2, L3, L4 = BoundLabel.L1, BoundLabel.L2, BoundLabel.L3, BoundLabel.L4
EQ = RegionRelation.EQUAL
SUB = RegionRelation.FIRST_STRICT_SUBSET


class CaseLabel(str, enum.Enum):
    CASE0 = "0"
    AI1 = "A.I.1"
    AI2 = "A.I.2"
    AI3 = "A.I.3"
    AII1 = "A.II.1"
    AII2 = "A.II.2"
    B0 = "B.0"
    BI = "B.I"
    BII1 = "B.II.1"
    BII2 = "B.II.2"
    BIII1 = "B.III.1"
    BIII2 = "B.III.2"


class CornerLabel(str, enum.Enum):
    P12 = "P12"
    P13 = "P13"
    P14 = "P14"
    P34 = "P34"
    PO21 = "Po21"
    PO23 = "Po23"
    PO24 = "Po24"


@dataclass(frozen=True)
class TableRow:
    active: tuple[frozenset[BoundLabel], ...]  # alternatives, e.g. "L2 or L3"
    no_vs_delayed: RegionRelation
    delayed_vs_perfect: RegionRelation
    corners: tuple[CornerLabel, ...]


def _row(active, no_d, d_p, corners=()):
    return TableRow(tuple(frozenset(a) for a in active), no_d, d_p, tuple(corners))


C = CornerLabel
TABLE = {
    CaseLabel.CASE0: _row([{L3}], EQ, EQ),
    CaseLabel.AI1: _row([{L1}], EQ, SUB),
    CaseLabel.AI2: _row([{L2}, {L3}], EQ, EQ),
    CaseLabel.AI3: _row([{L1, L2}], SUB, SUB, [C.P12]),
    CaseLabel.AII1: _row([{L1}], EQ, SUB),
    CaseLabel.AII2: _row([{L1, L3}], SUB, SUB, [C.P13]),
    CaseLabel.B0: _row([{L3}], EQ, EQ),
    CaseLabel.BI: _row([{L1}], SUB, SUB, [C.PO21]),
    CaseLabel.BII1: _row([{L3}], SUB, EQ, [C.PO23]),
    CaseLabel.BII2: _row([{L1, L3}], SUB, SUB, [C.PO21, C.P13]),
    CaseLabel.BIII1: _row([{L3, L4}], SUB, SUB, [C.PO24, C.P34]),
    CaseLabel.BIII2: _row([{L1, L3, L4}], SUB, SUB, [C.PO24, C.P14, C.P13]),
}
del C

# Cases whose delayed region already equals the no-CSI region.
NO_CSI_SUFFICES = frozenset(label for label, row in TABLE.items() if row.no_vs_delayed is EQ)


def m1_prime(config: AntennaConfig) -> int:
    """``min(M1, N1 + N2 - M2)``, the T1 antenna count the B-case schemes use."""
    return min(config.m1, config.n1 + config.n2 - config.m2)


def threshold_m(config: AntennaConfig) -> Fraction:
    """``N2 (M1' - N1) / (M1' - N2)``; needs ``M1' > N2``."""
    mp = m1_prime(config)
    return Fraction(config.n2 * (mp - config.n1), mp - config.n2)


def classify_case(config: AntennaConfig) -> CaseLabel:
    m1, m2, n1, n2 = config.tuple
    if not config.is_canonical:
        raise ValueError(f"{config} is not canonical (n1 < n2)")
    if n2 >= m1:
        return CaseLabel.CASE0
    if m2 >= n2:
        if m2 >= n1:
            if m1 <= n1:
                return CaseLabel.AI1
            return CaseLabel.AI2 if n2 == m2 else CaseLabel.AI3
        return CaseLabel.AII1 if n1 >= m1 else CaseLabel.AII2
    # Case B: m1 > n2 > m2
    if n1 == n2:
        return CaseLabel.B0
    if n1 >= m1:
        return CaseLabel.BI
    m = threshold_m(config)
    if not condition_holds(1, config):
        return CaseLabel.BII1 if m2 <= m else CaseLabel.BII2
    return CaseLabel.BIII1 if m1 >= n1 + n2 - m else CaseLabel.BIII2


def expected_active_bounds(label: CaseLabel) -> frozenset[BoundLabel]:
    """First listed Table I entry; see :data:`TABLE` for the alternatives."""
    return TABLE[label].active[0]


@dataclass(frozen=True)
class TaxonomyCheck:
    case: CaseLabel
    computed: frozenset[BoundLabel]
    expected: tuple[frozenset[BoundLabel], ...]
    matched: frozenset[BoundLabel] | None

    @property
    def ok(self) -> bool:
        return self.matched is not None


def taxonomy_check(config: AntennaConfig) -> TaxonomyCheck:
    """Compare the delayed region against the Table I entry for its case.

    An entry matches when the single-user bounds plus the listed bounds
    reproduce the region exactly and each listed bound touches the region.
    """
    case = classify_case(config)
    region = region_for(config, CsiRegime.DELAYED)
    matched = None
    for alternative in TABLE[case].active:
        if implied_by(region, alternative) and all(tight_somewhere(region, l) for l in alternative):
            matched = alternative
            break
    return TaxonomyCheck(case, active_bounds(region), TABLE[case].active, matched)


def corner_point(config: AntennaConfig, corner: CornerLabel) -> DofPoint:
    case = classify_case(config)
    if corner not in TABLE[case].corners:
        raise CornerUndefinedForCase(f"corner {corner.value} is not defined for case {case.value}")
    m1, m2, n1, n2 = config.tuple
    F = Fraction
    if corner is CornerLabel.P12:
        a, b = min(m1, n1 + n2), min(m2, n1 + n2)
        den = n1 * (b - n2) + b * (a - n1)
        return DofPoint(F(n1 * a * (b - n2), den), F(n2 * b * (a - n1), den))
    if corner is CornerLabel.P13:
        # A.II.2 caps T1 at N1 + N2 antennas; the B cases use M1 itself.
        a = min(m1, n1 + n2) if case is CaseLabel.AII2 else m1
        return DofPoint(F(a * (n1 - n2), a - n2), F(n2 * (a - n1), a - n2))
    if corner is CornerLabel.PO21:
        return DofPoint(F(m1 * (n2 - m2), n2), F(m2))
    if corner is CornerLabel.PO23:
        return DofPoint(F(n1 - m2), F(m2))
    a = n1 + n2 - m2
    if corner is CornerLabel.PO24:
        return DofPoint(F(a * (n2 - m2), n2), F(m2))
    if corner is CornerLabel.P34:
        return DofPoint(n1 - F(n2 * n2, a), F(n2 * n2, a))
    if corner is CornerLabel.P14:
        den = a + n2 - m1
        return DofPoint(F(m1 * (a - n1), den), F(n2 * (n1 + n2 - m1), den))
    raise ValueError(corner)


def corner_points(config: AntennaConfig) -> dict[CornerLabel, DofPoint]:
    case = classify_case(config)
    return {c: corner_point(config, c) for c in TABLE[case].corners}


@dataclass(frozen=True)
class CsiComparison:
    case: CaseLabel
    no_vs_delayed: RegionRelation
    delayed_vs_perfect: RegionRelation
    no_vs_perfect: RegionRelation
    claimed: tuple[RegionRelation, RegionRelation]
    flags: frozenset[str]

    @property
    def computed(self) -> tuple[RegionRelation, RegionRelation, RegionRelation]:
        return (self.no_vs_delayed, self.delayed_vs_perfect, self.no_vs_perfect)

    @property
    def agrees(self) -> bool:
        return (self.no_vs_delayed, self.delayed_vs_perfect) == self.claimed

    @property
    def documented_deviation(self) -> bool:
        """Disagreement explained by the printed no-CSI formula (Case B.I)."""
        return not self.agrees and PRINTED_FORMULA_SUSPECT in self.flags


def csi_comparison(config: AntennaConfig) -> CsiComparison:
    case = classify_case(config)
    no = region_for(config, CsiRegime.NO_CSI)
    delayed = region_for(config, CsiRegime.DELAYED)
    perfect = region_for(config, CsiRegime.PERFECT)
    row = TABLE[case]
    return CsiComparison(
        case=case,
        no_vs_delayed=relation(no, delayed),
        delayed_vs_perfect=relation(delayed, perfect),
        no_vs_perfect=relation(no, perfect),
        claimed=(row.no_vs_delayed, row.delayed_vs_perfect),
        flags=no.flags,
    )


def describe(config: AntennaConfig) -> dict:
    """Case label and corners for any valid config, in the caller's ordering."""
    canonical, swapped = canonicalize(config)
    corners = corner_points(canonical)
    if swapped:
        corners = {k: p.mirrored() for k, p in corners.items()}
    return {"canonical": canonical, "swapped": swapped,
            "case": classify_case(canonical), "corners": corners}
