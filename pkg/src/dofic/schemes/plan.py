"""Slot-by-slot transmission plans.

A plan only names what each antenna carries. Coefficients of retransmitted
combinations depend on the channel draw, so they are materialized during
simulation (see :mod:`dofic.schemes.simulate`).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from ..config import AntennaConfig
from ..polytope import DofPoint


@dataclass(frozen=True, order=True)
class SymbolId:
    owner: int
    index: int

    def __str__(self) -> str:
        return f"u{self.owner}[{self.index}]"


@dataclass(frozen=True, order=True)
class LinCombRef:
    """Receive-antenna ``row`` of receiver ``receiver`` in slot ``slot``.

    Refers to the interference part of that observation after the receiver's
    own signal is eliminated from the trailing rows. Only the transmitter
    that caused the interference can rebuild it, so it is retransmitted by
    transmitter ``3 - receiver``.
    """

    receiver: int
    row: int
    slot: int

    def __str__(self) -> str:
        return f"I{self.receiver}[{self.row}]@{self.slot}"


@dataclass(frozen=True)
class Fresh:
    symbol: SymbolId

    def __str__(self) -> str:
        return str(self.symbol)


@dataclass(frozen=True)
class Retransmit:
    ref: LinCombRef

    def __str__(self) -> str:
        return str(self.ref)


@dataclass(frozen=True)
class Superposed:
    """Several entries summed on one antenna (used by the negative control)."""

    parts: tuple["Entry", ...]

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts)


Entry = Union[Fresh, Retransmit, Superposed]


def _leaves(entry: Entry):
    if isinstance(entry, Superposed):
        for part in entry.parts:
            yield from _leaves(part)
    else:
        yield entry


@dataclass(frozen=True)
class SlotPlan:
    """Entries for the leading antennas of each transmitter; the rest stay silent."""

    tx1: tuple[Entry, ...] = ()
    tx2: tuple[Entry, ...] = ()
    phase: int = 1

    def entries(self, tx: int) -> tuple[Entry, ...]:
        return self.tx1 if tx == 1 else self.tx2


@dataclass(frozen=True)
class SchemeSpec:
    config: AntennaConfig
    corner: str
    slots: tuple[SlotPlan, ...]
    d_star: tuple[int, int]
    phases: tuple[int, ...]  # slot count per phase
    params: dict = field(default_factory=dict, compare=False)

    @property
    def T(self) -> int:
        return len(self.slots)

    @property
    def target(self) -> DofPoint:
        return DofPoint(Fraction(self.d_star[0], self.T), Fraction(self.d_star[1], self.T))

    def validate(self) -> None:
        """Check antenna budgets, ownership and symbol bookkeeping.

        Causality is not checked here; the simulator enforces it while
        materializing each slot.
        """
        if sum(self.phases) != self.T:
            raise ValueError(f"phase lengths {self.phases} do not sum to T={self.T}")
        budgets = (self.config.m1, self.config.m2)
        seen: Counter[SymbolId] = Counter()
        for t, slot in enumerate(self.slots):
            for tx in (1, 2):
                entries = slot.entries(tx)
                if len(entries) > budgets[tx - 1]:
                    raise ValueError(f"slot {t}: transmitter {tx} uses {len(entries)} > {budgets[tx - 1]} antennas")
                for entry in entries:
                    for leaf in _leaves(entry):
                        if isinstance(leaf, Fresh):
                            if leaf.symbol.owner != tx:
                                raise ValueError(f"slot {t}: transmitter {tx} sends {leaf.symbol}")
                            seen[leaf.symbol] += 1
                        elif leaf.ref.receiver == tx:
                            raise ValueError(f"slot {t}: transmitter {tx} cannot rebuild {leaf.ref}")
        for user in (1, 2):
            expected = {SymbolId(user, k) for k in range(self.d_star[user - 1])}
            got = {s for s in seen if s.owner == user}
            if got != expected:
                raise ValueError(f"user {user} symbols {len(got)} != d{user}*={self.d_star[user - 1]}")
        repeated = [s for s, n in seen.items() if n > 1]
        if repeated:
            raise ValueError(f"fresh symbols sent twice: {sorted(repeated)[:3]}")

    def transcript(self) -> list[dict]:
        """Phase summary: slot range and the per-slot entry counts."""
        out, start = [], 0
        for phase, length in enumerate(self.phases, 1):
            slots = self.slots[start:start + length]
            out.append({
                "phase": phase,
                "slots": [start, start + length],
                "tx1": [_describe(s.tx1) for s in slots],
                "tx2": [_describe(s.tx2) for s in slots],
            })
            start += length
        return out


def _describe(entries) -> str:
    return " ".join(str(e) for e in entries) or "-"


class SymbolPool:
    """Hands out consecutive fresh symbols per user."""

    def __init__(self):
        self._next = [0, 0]

    def take(self, owner: int, count: int) -> tuple[Fresh, ...]:
        start = self._next[owner - 1]
        self._next[owner - 1] += count
        return tuple(Fresh(SymbolId(owner, k)) for k in range(start, start + count))

    @property
    def counts(self) -> tuple[int, int]:
        return tuple(self._next)
