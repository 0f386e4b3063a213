"""Exact 2-D polygon geometry for DoF regions.

Regions live in the first quadrant and are cut out by half-planes
``a*d1 + b*d2 <= c`` with non-negative coefficients, so they are convex,
bounded (given both single-user bounds) and contain the origin. All
arithmetic is over :class:`fractions.Fraction`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence


class BoundLabel(str, enum.Enum):
    LO1 = "Lo1"
    LO2 = "Lo2"
    L1 = "L1"
    L2 = "L2"
    L3 = "L3"
    L4 = "L4"
    L5 = "L5"

    @property
    def mirrored(self) -> "BoundLabel":
        return _MIRROR_LABEL[self]

    @property
    def single_user(self) -> bool:
        return self in (BoundLabel.LO1, BoundLabel.LO2)


_MIRROR_LABEL = {
    BoundLabel.LO1: BoundLabel.LO2,
    BoundLabel.LO2: BoundLabel.LO1,
    BoundLabel.L1: BoundLabel.L2,
    BoundLabel.L2: BoundLabel.L1,
    BoundLabel.L3: BoundLabel.L3,
    BoundLabel.L4: BoundLabel.L5,
    BoundLabel.L5: BoundLabel.L4,
}

# When several labels describe the same half-plane, the first one listed
# here names the group.
_LABEL_PREFERENCE = (BoundLabel.L3, BoundLabel.L1, BoundLabel.L2, BoundLabel.L4, BoundLabel.L5)


class DofPoint(NamedTuple):
    d1: Fraction
    d2: Fraction

    @classmethod
    def of(cls, d1, d2) -> "DofPoint":
        return cls(Fraction(d1), Fraction(d2))

    def mirrored(self) -> "DofPoint":
        return DofPoint(self.d2, self.d1)

    def __str__(self) -> str:
        return f"({self.d1},{self.d2})"


@dataclass(frozen=True)
class HalfPlaneBound:
    """``a*d1 + b*d2 <= c`` with exact rational coefficients."""

    label: BoundLabel
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.a < 0 or self.b < 0 or self.c < 0:
            raise ValueError(f"negative coefficient in {self}")
        if self.a == 0 and self.b == 0:
            raise ValueError("degenerate half-plane with a = b = 0")

    def value(self, p: Sequence[Fraction]) -> Fraction:
        return self.a * p[0] + self.b * p[1]

    def satisfied(self, p: Sequence[Fraction]) -> bool:
        return self.value(p) <= self.c

    def tight(self, p: Sequence[Fraction]) -> bool:
        return self.value(p) == self.c

    def mirrored(self) -> "HalfPlaneBound":
        return HalfPlaneBound(self.label.mirrored, self.b, self.a, self.c)

    def same_halfplane(self, other: "HalfPlaneBound") -> bool:
        # c > 0 for every bound the engine builds; cross-multiplied ratio test.
        return (self.a * other.c == other.a * self.c
                and self.b * other.c == other.b * self.c
                and (self.c == 0) == (other.c == 0))

    def __str__(self) -> str:
        return f"{self.label.value}: {self.a}*d1 + {self.b}*d2 <= {self.c}"


class RegionRelation(str, enum.Enum):
    EQUAL = "Equal"
    FIRST_STRICT_SUBSET = "FirstStrictSubset"
    SECOND_STRICT_SUBSET = "SecondStrictSubset"
    INCOMPARABLE = "Incomparable"


@dataclass(frozen=True)
class DofRegion:
    bounds: tuple[HalfPlaneBound, ...]
    vertices: tuple[DofPoint, ...]
    flags: frozenset[str] = field(default_factory=frozenset)

    @classmethod
    def from_bounds(cls, bounds: Iterable[HalfPlaneBound], flags: Iterable[str] = ()) -> "DofRegion":
        bounds = tuple(bounds)
        return cls(bounds, tuple(enumerate_vertices(bounds)), frozenset(flags))

    def bound(self, label: BoundLabel) -> HalfPlaneBound | None:
        for b in self.bounds:
            if b.label == label:
                return b
        return None

    @property
    def labels(self) -> tuple[BoundLabel, ...]:
        return tuple(b.label for b in self.bounds)

    def mirrored(self) -> "DofRegion":
        return DofRegion.from_bounds((b.mirrored() for b in self.bounds), self.flags)

    def with_flags(self, *flags: str) -> "DofRegion":
        return replace(self, flags=self.flags | frozenset(flags))


def _intersect(l1, l2):
    """Intersection of lines ``a*x + b*y = c``; None when parallel."""
    a1, b1, c1 = l1
    a2, b2, c2 = l2
    det = a1 * b2 - a2 * b1
    if det == 0:
        return None
    return DofPoint((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det)


def _order_ccw(points: Iterable[DofPoint]) -> list[DofPoint]:
    # Down-closed convex polygon: the upper boundary runs with d1 strictly
    # decreasing, so sorting by (-d1, d2) and closing at the origin walks it
    # counterclockwise from the largest d1-axis vertex.
    origin = DofPoint(Fraction(0), Fraction(0))
    rest = sorted((p for p in set(points) if p != origin), key=lambda p: (-p.d1, p.d2))
    return rest + [origin]


def enumerate_vertices(bounds: Iterable[HalfPlaneBound]) -> list[DofPoint]:
    """Vertex cycle of ``{d >= 0} ∩ bounds``, counterclockwise.

    The cycle starts at the vertex on the positive d1-axis and ends at the
    origin. Every pair of constraint lines (axes included) is intersected and
    infeasible points are dropped.
    """
    bounds = tuple(bounds)
    zero, one = Fraction(0), Fraction(1)
    lines = [(one, zero, zero), (zero, one, zero)] + [(b.a, b.b, b.c) for b in bounds]
    found = set()
    for l1, l2 in combinations(lines, 2):
        p = _intersect(l1, l2)
        if p is None or p.d1 < 0 or p.d2 < 0:
            continue
        if all(b.satisfied(p) for b in bounds):
            found.add(p)
    return _order_ccw(found)


def contains(region: DofRegion, p: Sequence) -> bool:
    p = DofPoint.of(*p)
    if p.d1 < 0 or p.d2 < 0:
        return False
    return all(b.satisfied(p) for b in region.bounds)


def _subset(r1: DofRegion, r2: DofRegion) -> bool:
    return all(contains(r2, v) for v in r1.vertices)


def relation(r1: DofRegion, r2: DofRegion) -> RegionRelation:
    in12 = _subset(r1, r2)
    in21 = _subset(r2, r1)
    if in12 and in21:
        return RegionRelation.EQUAL
    if in12:
        return RegionRelation.FIRST_STRICT_SUBSET
    if in21:
        return RegionRelation.SECOND_STRICT_SUBSET
    return RegionRelation.INCOMPARABLE


def same_polygon(r1: DofRegion, r2: DofRegion) -> bool:
    return set(r1.vertices) == set(r2.vertices)


def _group_weighted_bounds(bounds: Sequence[HalfPlaneBound]) -> dict[BoundLabel, list[HalfPlaneBound]]:
    groups: dict[BoundLabel, list[HalfPlaneBound]] = {}
    ordered = sorted((b for b in bounds if not b.label.single_user),
                     key=lambda b: _LABEL_PREFERENCE.index(b.label))
    for b in ordered:
        for rep, members in groups.items():
            if members[0].same_halfplane(b):
                members.append(b)
                break
        else:
            groups[b.label] = [b]
    return groups


def active_bounds(region: DofRegion) -> frozenset[BoundLabel]:
    """Weighted-sum bounds whose removal strictly enlarges the region.

    The single-user bounds stay in place throughout. Labels describing the
    identical half-plane are removed together and reported under one name,
    preferring L3, then L1, L2, L4, L5.
    """
    groups = _group_weighted_bounds(region.bounds)
    single = [b for b in region.bounds if b.label.single_user]
    target = set(region.vertices)
    active = set()
    for rep in groups:
        kept = single + [b for r, members in groups.items() if r != rep for b in members]
        if set(enumerate_vertices(kept)) != target:
            active.add(rep)
    return frozenset(active)


def implied_by(region: DofRegion, labels: Iterable[BoundLabel]) -> bool:
    """True when the single-user bounds plus ``labels`` already give ``region``."""
    labels = set(labels)
    kept = [b for b in region.bounds if b.label.single_user or b.label in labels]
    return set(enumerate_vertices(kept)) == set(region.vertices)


def tight_somewhere(region: DofRegion, label: BoundLabel) -> bool:
    b = region.bound(label)
    return b is not None and any(b.tight(v) for v in region.vertices)


def convex_hull(points: Iterable[Sequence]) -> list[DofPoint]:
    """Exact convex hull (monotone chain), collinear points dropped.

    Returned counterclockwise in the same order convention as
    :func:`enumerate_vertices` when the hull is down-closed.
    """
    pts = sorted({DofPoint.of(*p) for p in points})
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[DofPoint] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[DofPoint] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    origin = DofPoint(Fraction(0), Fraction(0))
    if origin in hull:
        return _order_ccw(hull)
    return hull


def in_hull(hull: Sequence[DofPoint], p: Sequence) -> bool:
    """Membership in a counterclockwise convex polygon (boundary included)."""
    p = DofPoint.of(*p)
    n = len(hull)
    for i in range(n):
        o, a = hull[i], hull[(i + 1) % n]
        if (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0]) < 0:
            return False
    return True
