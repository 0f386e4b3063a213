"""Deterministic partition of phase-2 transmissions into slots.

Each element is one thing to deliver in phase 2: a fresh user-2 data symbol
(``DS``) or a stored interference combination that receiver 2 either
already observed cleanly (``IS_R2known``) or saw mixed with its own signal
(``IS_R2unknown``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import PartitionInfeasible


class ElementClass(str, enum.Enum):
    DS = "DS"
    IS_R2_UNKNOWN = "IS_R2unknown"
    IS_R2_KNOWN = "IS_R2known"


@dataclass(frozen=True, order=True)
class Element:
    cls: ElementClass
    key: tuple  # (origin slot, antenna row) for IS, (index,) for DS


@dataclass(frozen=True)
class PartitionCaps:
    total: int  # per-subset size cap (N1), or the exact size when ``exact``
    ds: int  # DS per subset (M2)
    joint: int  # DS plus IS_R2unknown per subset (N2)
    exact: bool = False


@dataclass(frozen=True)
class Partition:
    subsets: tuple[tuple[Element, ...], ...]
    caps: PartitionCaps

    def count(self, j: int, *classes: ElementClass) -> int:
        return sum(e.cls in classes for e in self.subsets[j])

    def check(self, elements: Iterable[Element]) -> None:
        """Raise AssertionError unless every Partition invariant holds."""
        elements = list(elements)
        flat = [e for s in self.subsets for e in s]
        assert len(flat) == len(set(flat)), "subsets overlap"
        assert sorted(flat) == sorted(elements), "subsets do not cover the input"
        c = self.caps
        for j, subset in enumerate(self.subsets):
            size = len(subset)
            assert size == c.total if c.exact else size <= c.total, f"subset {j} size {size}"
            assert self.count(j, ElementClass.DS) <= c.ds, f"subset {j} DS cap"
            assert self.count(j, ElementClass.DS, ElementClass.IS_R2_UNKNOWN) <= c.joint, f"subset {j} joint cap"


def _fill(subsets, items, fits, label):
    j = 0
    for item in items:
        while j < len(subsets) and not fits(subsets[j]):
            j += 1
        if j == len(subsets):
            raise PartitionInfeasible(f"no subset left for {label} element {item.key}")
        subsets[j].append(item)


def partition_symbols(elements: Sequence[Element], t2: int, caps: PartitionCaps) -> Partition:
    """Greedy sequential fill: DS first, then IS_R2unknown, then IS_R2known.

    Within a class elements are placed in lexicographic key order, each into
    the first subset that still has room. Raises PartitionInfeasible when an
    element cannot be placed or, in the exact variant, a subset ends short.
    """
    if t2 < 1:
        raise PartitionInfeasible(f"t2={t2} leaves no subsets")
    by_class = {c: sorted(e for e in elements if e.cls is c) for c in ElementClass}
    subsets: list[list[Element]] = [[] for _ in range(t2)]

    def n(subset, *classes):
        return sum(e.cls in classes for e in subset)

    DS, UNK, KNOWN = ElementClass.DS, ElementClass.IS_R2_UNKNOWN, ElementClass.IS_R2_KNOWN
    _fill(subsets, by_class[DS], lambda s: n(s, DS) < caps.ds and len(s) < caps.total, "DS")
    _fill(subsets, by_class[UNK], lambda s: n(s, DS, UNK) < caps.joint and len(s) < caps.total, "IS_R2unknown")
    _fill(subsets, by_class[KNOWN], lambda s: len(s) < caps.total, "IS_R2known")
    if caps.exact:
        short = [j for j, s in enumerate(subsets) if len(s) != caps.total]
        if short:
            raise PartitionInfeasible(f"subsets {short} hold fewer than {caps.total} elements")
    return Partition(tuple(tuple(s) for s in subsets), caps)
