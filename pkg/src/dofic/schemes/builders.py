"""Corner-point achievability schemes.

Every builder takes a canonical configuration and returns a validated
:class:`SchemeSpec` whose per-slot DoF pair equals the corner point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..classify import TABLE, CaseLabel, CornerLabel, classify_case, corner_point, threshold_m
from ..config import AntennaConfig
from ..errors import CornerUndefinedForCase, InfeasibleParameters, PartitionInfeasible
from .partition import Element, ElementClass, PartitionCaps, partition_symbols
from .plan import LinCombRef, Retransmit, SchemeSpec, SlotPlan, SymbolPool


def _chunks(items, size):
    return [tuple(items[k:k + size]) for k in range(0, len(items), size)]


def _retransmit(receiver, slots, rows):
    return [Retransmit(LinCombRef(receiver, j, s)) for s in slots for j in rows]


def _three_phase(config: AntennaConfig) -> SchemeSpec:
    """A.I.3: each user sends alone, then both retransmit overheard interference."""
    m1, m2, n1, n2 = config.tuple
    a, b = min(m1, n1 + n2), min(m2, n1 + n2)
    t1, t2, t3 = n1 * (b - n2), n2 * (a - n1), (b - n2) * (a - n1)
    pool = SymbolPool()
    slots = [SlotPlan(tx1=pool.take(1, a), phase=1) for _ in range(t1)]
    slots += [SlotPlan(tx2=pool.take(2, b), phase=2) for _ in range(t2)]
    # Receiver 1 is short a - N1 equations per phase-1 slot; receiver 2 holds
    # them as interference. Symmetrically for phase 2.
    to_rx1 = _chunks(_retransmit(2, range(t1), range(a - n1)), n1)
    to_rx2 = _chunks(_retransmit(1, range(t1, t1 + t2), range(b - n2)), n2)
    assert len(to_rx1) == len(to_rx2) == t3
    slots += [SlotPlan(tx1=x, tx2=y, phase=3) for x, y in zip(to_rx1, to_rx2)]
    return SchemeSpec(config, CornerLabel.P12.value, tuple(slots), pool.counts, (t1, t2, t3),
                      {"M1'": a, "M2'": b})


def _two_phase_p13(config: AntennaConfig) -> SchemeSpec:
    """A.II.2: T1 alone, then T1 resends receiver 2's interference beside fresh user-2 data."""
    m1, m2, n1, n2 = config.tuple
    a = min(m1, n1 + n2)
    t1, t2 = n1 - n2, a - n1
    pool = SymbolPool()
    slots = [SlotPlan(tx1=pool.take(1, a), phase=1) for _ in range(t1)]
    for k in range(t2):
        slots.append(SlotPlan(tx1=tuple(_retransmit(2, range(t1), [k])), tx2=pool.take(2, n2), phase=2))
    return SchemeSpec(config, CornerLabel.P13.value, tuple(slots), pool.counts, (t1, t2), {"M1'": a})


def _po21_elements(config: AntennaConfig, m1_eff: int):
    _, m2, n1, n2 = config.tuple
    t1, t2 = n2 - m2, m2
    known_rows = range(m2, m2 + max(0, m1_eff - n1))
    known = [Element(ElementClass.IS_R2_KNOWN, (s, j)) for s in range(t1) for j in known_rows]
    return known, t2, PartitionCaps(total=max(0, n1 - n2), ds=0, joint=0)


def _po21(config: AntennaConfig, m1_eff: int, corner: CornerLabel) -> SchemeSpec:
    """T2 sends M2 fresh symbols in all N2 slots; T1 front-loads and then resends.

    Phase-2 slot k carries row k of every phase-1 slot's mixed interference
    at receiver 2 plus a share of the rows receiver 2 saw cleanly (empty
    when ``m1_eff <= N1``).
    """
    _, m2, n1, n2 = config.tuple
    t1, t2 = n2 - m2, m2
    pool = SymbolPool()
    slots = [SlotPlan(tx1=pool.take(1, m1_eff), tx2=pool.take(2, m2), phase=1) for _ in range(t1)]
    part = _partition("known-LC budget", *_po21_elements(config, m1_eff))
    for k in range(t2):
        extra = [Retransmit(LinCombRef(2, e.key[1], e.key[0])) for e in part.subsets[k]]
        tx1 = tuple(_retransmit(2, range(t1), [k]) + extra)
        slots.append(SlotPlan(tx1=tx1, tx2=pool.take(2, m2), phase=2))
    return SchemeSpec(config, corner.value, tuple(slots), pool.counts, (t1, t2), {"M1_eff": m1_eff})


def _partition(constraint, elements, t2, caps):
    try:
        return partition_symbols(elements, t2, caps)
    except PartitionInfeasible as exc:
        raise InfeasibleParameters(constraint, str(exc)) from exc


def _po23_elements(config: AntennaConfig):
    m1, m2, n1, n2 = config.tuple
    a = min(m1, n1 + n2 - m2)
    t1, t2 = n1 - m2, a + m2 - n1
    elements = [Element(ElementClass.IS_R2_UNKNOWN, (s, j)) for s in range(t1) for j in range(m2)]
    elements += [Element(ElementClass.IS_R2_KNOWN, (s, j)) for s in range(t1) for j in range(m2, m2 + a - n1)]
    return elements, t2, PartitionCaps(total=n1 - m2, ds=0, joint=n2 - m2, exact=True)


def _po23(config: AntennaConfig) -> SchemeSpec:
    """B.II.1: phase-2 slots each carry exactly N1 - M2 stored combinations."""
    m1, m2, n1, n2 = config.tuple
    a = min(m1, n1 + n2 - m2)
    t1 = n1 - m2
    pool = SymbolPool()
    slots = [SlotPlan(tx1=pool.take(1, a), tx2=pool.take(2, m2), phase=1) for _ in range(t1)]
    elements, t2, caps = _po23_elements(config)
    part = _partition("exact partition", elements, t2, caps)
    for subset in part.subsets:
        tx1 = tuple(Retransmit(LinCombRef(2, e.key[1], e.key[0])) for e in subset)
        slots.append(SlotPlan(tx1=tx1, tx2=pool.take(2, m2), phase=2))
    return SchemeSpec(config, CornerLabel.PO23.value, tuple(slots), pool.counts, (t1, t2),
                      {"M1'": a, "partition": part})


@dataclass(frozen=True)
class IAParams:
    T: int
    t1: int
    d1: int
    d2: int
    m: tuple[int, ...]
    n: tuple[int, ...]

    @property
    def t2(self) -> int:
        return self.T - self.t1


def generic_ia_scheme(config: AntennaConfig, params: IAParams, corner: str = "custom") -> SchemeSpec:
    """Two-phase scheme: m_t/n_t fresh symbols per phase-1 slot, then a partitioned phase 2.

    Phase-1 slot t leaves receiver 2 with ``n_t`` rows mixing its own data
    with interference and ``m_t - N1`` further interference rows it sees
    cleanly; receiver 1 needs all of them. Phase 2 delivers those plus
    ``n' = d2 - sum(n_t)`` fresh user-2 symbols.
    """
    m1, m2, n1, n2 = config.tuple
    p = params

    def require(ok, name, detail=""):
        if not ok:
            raise InfeasibleParameters(name, detail)

    require(len(p.m) == p.t1 == len(p.n), "slot counts", f"len(m)={len(p.m)}, len(n)={len(p.n)}, t1={p.t1}")
    require(0 < p.t1 < p.T, "t1 < T", f"t1={p.t1}, T={p.T}")
    require(all(n1 <= mt <= m1 for mt in p.m), "N1 <= m_t <= M1", str(p.m))
    require(all(0 <= nt <= m2 for nt in p.n), "n_t <= M2", str(p.n))
    require(all(mt + nt <= n1 + n2 for mt, nt in zip(p.m, p.n)), "m_t + n_t <= N1 + N2")
    require(sum(p.m) == p.d1, "sum m_t = d1*", f"{sum(p.m)} != {p.d1}")
    n_prime = p.d2 - sum(p.n)
    require(n_prime >= 0, "n' >= 0", f"n'={n_prime}")
    unknown = sum(p.n)
    known = sum(mt - n1 for mt in p.m)
    require(m2 * p.t2 >= n_prime, "(a) M2 t2 >= n'", f"{m2 * p.t2} < {n_prime}")
    require(n2 * p.t2 - n_prime >= unknown, "(b) N2 t2 - n' >= |IS_R2unknown|")
    require(n1 * p.t2 - n_prime - unknown >= known, "(c) N1 t2 - n' - |IS_R2unknown| >= |IS_R2known|")

    pool = SymbolPool()
    slots = [SlotPlan(tx1=pool.take(1, mt), tx2=pool.take(2, nt), phase=1) for mt, nt in zip(p.m, p.n)]
    data = pool.take(2, n_prime)
    part = _partition("partition", *_ia_elements(config, p))
    for subset in part.subsets:
        tx1 = tuple(Retransmit(LinCombRef(2, e.key[1], e.key[0])) for e in subset if e.cls is not ElementClass.DS)
        tx2 = tuple(data[e.key[0]] for e in subset if e.cls is ElementClass.DS)
        slots.append(SlotPlan(tx1=tx1, tx2=tx2, phase=2))
    return SchemeSpec(config, corner, tuple(slots), pool.counts, (p.t1, p.t2),
                      {"ia": p, "n'": n_prime, "partition": part})


def _ia_elements(config: AntennaConfig, p: IAParams):
    m1, m2, n1, n2 = config.tuple
    elements = [Element(ElementClass.DS, (k,)) for k in range(p.d2 - sum(p.n))]
    for s, (mt, nt) in enumerate(zip(p.m, p.n)):
        elements += [Element(ElementClass.IS_R2_UNKNOWN, (s, j)) for j in range(nt)]
        elements += [Element(ElementClass.IS_R2_KNOWN, (s, j)) for j in range(nt, nt + mt - n1)]
    return elements, p.t2, PartitionCaps(total=n1, ds=m2, joint=n2)


def _spread(total: int, parts: int) -> tuple[int, ...]:
    """``total`` split into ``parts`` near-equal integers, larger ones first."""
    q, r = divmod(total, parts)
    return tuple(q + 1 if k < r else q for k in range(parts))


def ia_params(config: AntennaConfig, corner: CornerLabel) -> IAParams:
    """Parameter recipe for the corners reached by the generic scheme."""
    m1, m2, n1, n2 = config.tuple
    case = classify_case(config)
    if corner is CornerLabel.P13 and case in (CaseLabel.BII2, CaseLabel.BIII2):
        T, t1 = m1 - n2, n1 - n2
        d1, d2 = m1 * (n1 - n2), n2 * (m1 - n1)
        cap = min(m2, n1 + n2 - m1)
        return IAParams(T, t1, d1, d2, (m1,) * t1, _spread(min(cap * t1, d2), t1))
    a = n1 + n2 - m2
    if corner is CornerLabel.P34 and case is CaseLabel.BIII1:
        T, t1 = a, n1 - m2
        d1, d2 = n1 * a - n2 * n2, n2 * n2
        target = n1 + n2 - threshold_m(config)
        lo, hi = math.floor(target), math.ceil(target)
        r = d1 - lo * t1 if hi != lo else 0
        if not 0 <= r <= t1 or (hi == lo and lo * t1 != d1):
            raise InfeasibleParameters("sum m_t = d1*", f"no ceil/floor split of {d1} over {t1} slots")
        m = (hi,) * r + (lo,) * (t1 - r)
        return IAParams(T, t1, d1, d2, m, tuple(n1 + n2 - mt for mt in m))
    if corner is CornerLabel.P14 and case is CaseLabel.BIII2:
        m2pp = n1 + n2 - m1
        T, t1 = a + n2 - m1, a - n1
        return IAParams(T, t1, m1 * t1, n2 * m2pp, (m1,) * t1, (m2pp,) * t1)
    raise CornerUndefinedForCase(f"no generic-scheme recipe for {corner.value} in case {case.value}")


def partition_problem(config: AntennaConfig, corner: CornerLabel | str):
    """``(elements, t2, caps)`` the corner's scheme partitions, or None if it needs none."""
    corner = CornerLabel(corner)
    case = classify_case(config)
    if corner not in TABLE[case].corners:
        raise CornerUndefinedForCase(f"corner {corner.value} is not defined for case {case.value}")
    if case in (CaseLabel.AI3, CaseLabel.AII2):
        return None
    if corner is CornerLabel.PO21:
        return _po21_elements(config, config.m1)
    if corner is CornerLabel.PO24:
        return _po21_elements(config, config.n1 + config.n2 - config.m2)
    if corner is CornerLabel.PO23:
        return _po23_elements(config)
    return _ia_elements(config, ia_params(config, corner))


def build_corner_scheme(config: AntennaConfig, corner: CornerLabel | str) -> SchemeSpec:
    corner = CornerLabel(corner)
    case = classify_case(config)
    if corner not in TABLE[case].corners:
        raise CornerUndefinedForCase(f"corner {corner.value} is not defined for case {case.value}")
    C = CornerLabel
    if case is CaseLabel.AI3:
        scheme = _three_phase(config)
    elif case is CaseLabel.AII2:
        scheme = _two_phase_p13(config)
    elif corner is C.PO21:
        scheme = _po21(config, config.m1, corner)
    elif corner is C.PO23:
        scheme = _po23(config)
    elif corner is C.PO24:
        scheme = _po21(config, config.n1 + config.n2 - config.m2, corner)
    else:
        scheme = generic_ia_scheme(config, ia_params(config, corner), corner.value)
    scheme.validate()
    if scheme.target != corner_point(config, corner):
        raise AssertionError(f"{corner.value} scheme reaches {scheme.target}, corner is {corner_point(config, corner)}")
    return scheme
