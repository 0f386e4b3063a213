"""Run a scheme on random channels and test decodability exactly.

Columns of every matrix index the joint symbol space: user-1 symbols first,
then user-2 symbols. Transmitter ``i`` in slot ``t`` applies a precoder
``A_i(t)`` (``M_i`` rows) to the symbol vector; receiver ``r`` observes
``H_r1(t) A_1(t) + H_r2(t) A_2(t)``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from fractions import Fraction

import numpy as np

from ..errors import CausalityViolation
from .linalg import DRAW_BOUND, decodability_ranks, get_field
from .plan import Fresh, LinCombRef, Retransmit, SchemeSpec, SlotPlan, Superposed, SymbolId

DEFAULT_SEED = 0


def default_seed() -> int:
    return int(os.environ.get("DOFIC_SEED", DEFAULT_SEED))


@dataclass
class TrialResult:
    trial: int
    seed: tuple[int, int]
    ranks: dict[int, tuple[int, int]]  # receiver -> (rank G, rank G without desired)
    decodable: tuple[bool, bool]
    observations: dict[int, list] | None = None

    @property
    def passed(self) -> bool:
        return all(self.decodable)


@dataclass
class SimulationResult:
    scheme: SchemeSpec
    field: str
    trials: list[TrialResult] = field(default_factory=list)

    @property
    def passes(self) -> int:
        return sum(t.passed for t in self.trials)

    @property
    def all_passed(self) -> bool:
        return bool(self.trials) and self.passes == len(self.trials)

    @property
    def dof(self):
        return self.scheme.target


class _History:
    """Channels and precoders of finished slots, plus the elimination transforms."""

    def __init__(self, F, ncols):
        self.F = F
        self.ncols = ncols
        self.H: list[dict] = []
        self.A: list[dict] = []
        self._coef: dict[LinCombRef, list] = {}

    def record(self, H, A):
        self.H.append(H)
        self.A.append(A)

    def view(self, t: int) -> "_HistoryView":
        return _HistoryView(self, t)

    def coefficient_row(self, ref: LinCombRef) -> list:
        if ref not in self._coef:
            self._fill(ref.receiver, ref.slot)
        if ref not in self._coef:
            raise ValueError(f"{ref}: receiver has no row {ref.row}")
        return self._coef[ref]

    def _fill(self, r: int, s: int):
        F, H, A = self.F, self.H[s], self.A[s]
        own, other = r, 3 - r
        n = H[r, own].nrows()
        own_part = (H[r, own] * A[own]).tolist()
        # Row-reduce [H_rr A_r | I]: the right block E is invertible and the
        # rows of E H_rr A_r past its rank vanish.
        aug = [row + [F.one if c == k else F.zero for c in range(n)] for k, row in enumerate(own_part)]
        reduced, _ = F.matrix(aug).rref()
        E = F.matrix([row[self.ncols:] for row in reduced.tolist()])
        interference = (E * H[r, other] * A[other]).tolist()
        for j, row in enumerate(interference):
            self._coef[LinCombRef(r, j, s)] = row


class _HistoryView:
    def __init__(self, history: _History, t: int):
        self._history = history
        self.t = t

    def coefficient_row(self, ref: LinCombRef) -> list:
        if ref.slot >= self.t:
            raise CausalityViolation(f"slot {self.t} retransmits {ref}, which needs channels of slot {ref.slot}")
        return self._history.coefficient_row(ref)


def _column(sym: SymbolId, d1: int) -> int:
    return sym.index if sym.owner == 1 else d1 + sym.index


def _precoder(F, entries, antennas, ncols, d1, view):
    rows = [[F.zero] * ncols for _ in range(antennas)]

    def add(row, entry):
        if isinstance(entry, Fresh):
            row[_column(entry.symbol, d1)] += F.one
        elif isinstance(entry, Retransmit):
            coef = view.coefficient_row(entry.ref)
            for c, x in enumerate(coef):
                row[c] += x
        elif isinstance(entry, Superposed):
            for part in entry.parts:
                add(row, part)
        else:
            raise TypeError(f"unknown plan entry {entry!r}")

    for a, entry in enumerate(entries):
        add(rows[a], entry)
    return F.matrix(rows, ncols)


def _draw(F, rng, nrows, ncols):
    values = rng.integers(-DRAW_BOUND, DRAW_BOUND, size=(nrows, ncols), endpoint=True)
    return F.matrix([[F.scalar(int(v)) for v in row] for row in values], ncols)


def run_trial(scheme: SchemeSpec, seed: int, trial: int, field: str = "rational",
              keep_observations: bool = False) -> TrialResult:
    F = get_field(field)
    cfg = scheme.config
    m = {1: cfg.m1, 2: cfg.m2}
    n = {1: cfg.n1, 2: cfg.n2}
    d1, d2 = scheme.d_star
    ncols = d1 + d2
    rng = np.random.default_rng(np.random.SeedSequence([seed, trial]))
    history = _History(F, ncols)
    G = {1: [], 2: []}
    for t, slot in enumerate(scheme.slots):
        H = {(r, i): _draw(F, rng, n[r], m[i]) for r in (1, 2) for i in (1, 2)}
        view = history.view(t)
        A = {i: _precoder(F, slot.entries(i), m[i], ncols, d1, view) for i in (1, 2)}
        history.record(H, A)
        for r in (1, 2):
            G[r].extend((H[r, 1] * A[1] + H[r, 2] * A[2]).tolist())
    desired = {1: range(d1), 2: range(d1, ncols)}
    ranks, verdicts = {}, []
    for r in (1, 2):
        full, rest = decodability_ranks(G[r], desired[r], F.rank)
        ranks[r] = (full, rest)
        verdicts.append(full == rest + len(desired[r]))
    obs = {r: G[r] for r in (1, 2)} if keep_observations else None
    return TrialResult(trial, (seed, trial), ranks, tuple(verdicts), obs)


def simulate_scheme(scheme: SchemeSpec, seed: int | None = None, trials: int = 20,
                    field: str = "rational", keep_observations: bool = False) -> SimulationResult:
    seed = default_seed() if seed is None else seed
    result = SimulationResult(scheme, field)
    for k in range(trials):
        result.trials.append(run_trial(scheme, seed, k, field, keep_observations))
    return result


def inflate_d1(scheme: SchemeSpec, extra: int = 1) -> SchemeSpec:
    """Negative control: add ``extra`` user-1 symbols without adding slots.

    Each extra symbol goes on the first idle T1 antenna, or is superposed on
    antenna 0 of the first slot when T1 is fully loaded.
    """
    slots = list(scheme.slots)
    d1 = scheme.d_star[0]
    m1 = scheme.config.m1
    for k in range(extra):
        sym = Fresh(SymbolId(1, d1 + k))
        for t, slot in enumerate(slots):
            if len(slot.tx1) < m1:
                slots[t] = replace(slot, tx1=slot.tx1 + (sym,))
                break
        else:
            first = slots[0]
            head = first.tx1[0] if first.tx1 else None
            merged = Superposed((head, sym)) if head is not None else sym
            slots[0] = replace(first, tx1=(merged,) + first.tx1[1:])
    return replace(scheme, slots=tuple(slots), d_star=(d1 + extra, scheme.d_star[1]),
                   corner=f"{scheme.corner}+{extra}")


def with_same_slot_retransmit(scheme: SchemeSpec) -> SchemeSpec:
    """Causality injection: the last slot resends a combination from itself."""
    slots = list(scheme.slots)
    last = len(slots) - 1
    bad = Retransmit(LinCombRef(2, 0, last))
    slot = slots[last]
    tx1 = (Superposed((slot.tx1[0], bad)),) + slot.tx1[1:] if slot.tx1 else (bad,)
    slots[last] = SlotPlan(tx1=tx1, tx2=slot.tx2, phase=slot.phase)
    return replace(scheme, slots=tuple(slots))


def observation_fraction_rows(rows) -> list[list[Fraction]]:
    """Convert rational field rows to :class:`fractions.Fraction` for external checks."""
    return [[Fraction(int(x.p), int(x.q)) for x in row] for row in rows]
