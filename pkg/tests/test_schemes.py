from __future__ import annotations

from fractions import Fraction as F
from itertools import product

import pytest
import sympy

from dofic import AchievabilityGap, AntennaConfig, CaseLabel, CausalityViolation, CornerLabel, InfeasibleParameters
from dofic.classify import TABLE, classify_case
from dofic.polytope import DofPoint
from dofic.schemes import (
    IAParams,
    LinCombRef,
    Retransmit,
    build_corner_scheme,
    generic_ia_scheme,
    ia_params,
    inflate_d1,
    simulate_scheme,
    verify_region,
    with_same_slot_retransmit,
)
from dofic.schemes import verify as verify_mod
from dofic.schemes.plan import Fresh, SymbolId, _leaves
from dofic.schemes.simulate import default_seed, observation_fraction_rows

C = CornerLabel
CANON = [AntennaConfig(*t) for t in product(range(1, 8), repeat=4) if t[2] >= t[3]]
ALL_SCHEMES = [(c, k) for c in CANON for k in TABLE[classify_case(c)].corners]


def test_po21_example_plan():
    s = build_corner_scheme(AntennaConfig(3, 1, 4, 2), C.PO21)
    assert (s.T, s.d_star, s.phases) == (2, (3, 2), (1, 1))
    assert s.slots[0].tx1 == tuple(Fresh(SymbolId(1, k)) for k in range(3))
    assert s.slots[0].tx2 == (Fresh(SymbolId(2, 0)),)
    assert s.slots[1].tx1 == (Retransmit(LinCombRef(2, 0, 0)),)
    assert s.slots[1].tx2 == (Fresh(SymbolId(2, 1)),)


def test_p34_example_params():
    p = ia_params(AntennaConfig(7, 3, 5, 4), C.P34)
    assert (p.T, p.t1, p.m, p.n, p.d1, p.d2) == (6, 2, (7, 7), (2, 2), 14, 16)
    s = build_corner_scheme(AntennaConfig(7, 3, 5, 4), C.P34)
    assert s.params["n'"] == 12 and s.T == 6


def test_p12_example():
    s = build_corner_scheme(AntennaConfig(3, 3, 2, 2), C.P12)
    assert (s.phases, s.T, s.d_star) == ((2, 2, 1), 5, (6, 6))
    assert s.target == DofPoint(F(6, 5), F(6, 5))


def test_generic_p13_example():
    c = AntennaConfig(5, 2, 4, 3)
    p = IAParams(T=2, t1=1, d1=5, d2=3, m=(5,), n=(2,))
    assert ia_params(c, C.P13) == p
    s = generic_ia_scheme(c, p)
    assert s.params["n'"] == 1 and s.d_star == (5, 3)


@pytest.mark.parametrize("params,constraint", [
    (IAParams(2, 1, 4, 3, (5,), (2,)), "sum m_t = d1*"),
    (IAParams(2, 1, 3, 3, (3,), (2,)), "N1 <= m_t <= M1"),
    (IAParams(2, 1, 5, 3, (5,), (3,)), "n_t <= M2"),
    (IAParams(1, 1, 5, 3, (5,), (2,)), "t1 < T"),
    (IAParams(2, 1, 5, 9, (5,), (2,)), "(a) M2 t2 >= n'"),
])
def test_generic_rejects_bad_params(params, constraint):
    with pytest.raises(InfeasibleParameters) as err:
        generic_ia_scheme(AntennaConfig(5, 2, 4, 3), params)
    assert err.value.constraint == constraint


def test_ai3_bookkeeping():
    for c in CANON:
        if classify_case(c) is not CaseLabel.AI3:
            continue
        s = build_corner_scheme(c, C.P12)
        m1, m2, n1, n2 = c.tuple
        a, b = min(m1, n1 + n2), min(m2, n1 + n2)
        t1, t2, t3 = s.phases
        assert a * t1 == s.d_star[0] and b * t2 == s.d_star[1]
        assert n1 * t3 == (a - n1) * t1 and n2 * t3 == (b - n2) * t2


def test_budgets_causality_and_targets():
    for c, k in ALL_SCHEMES:
        s = build_corner_scheme(c, k)  # validates budgets and bookkeeping
        case = classify_case(c)
        for t, slot in enumerate(s.slots):
            for tx in (1, 2):
                for entry in slot.entries(tx):
                    for leaf in _leaves(entry):
                        if isinstance(leaf, Retransmit):
                            assert leaf.ref.slot < t
            if slot.phase == 2 and case in (CaseLabel.AII2, CaseLabel.BI, CaseLabel.BII1, CaseLabel.BII2):
                assert len(slot.tx1) + len(slot.tx2) <= c.n1, (c, k, t)


def test_corner_not_defined():
    from dofic import CornerUndefinedForCase

    with pytest.raises(CornerUndefinedForCase):
        build_corner_scheme(AntennaConfig(3, 1, 4, 2), C.P34)


@pytest.mark.parametrize("t,corner", [((3, 1, 4, 2), C.PO21), ((7, 3, 5, 4), C.P34), ((7, 3, 5, 4), C.PO24)])
def test_simulation_examples(t, corner):
    sim = simulate_scheme(build_corner_scheme(AntennaConfig(*t), corner), seed=7, trials=20)
    assert sim.passes == 20


def test_negative_control_example():
    s = inflate_d1(build_corner_scheme(AntennaConfig(3, 1, 4, 2), C.PO21))
    assert s.d_star == (4, 2)
    assert simulate_scheme(s, seed=7, trials=20).passes == 0


def test_inflate_superposes_when_t1_is_full():
    s = build_corner_scheme(AntennaConfig(3, 3, 2, 2), C.P12)
    bad = inflate_d1(s)
    bad.validate()
    assert simulate_scheme(bad, seed=1, trials=5).passes == 0


def test_causality_injection():
    s = with_same_slot_retransmit(build_corner_scheme(AntennaConfig(7, 3, 5, 4), C.P34))
    with pytest.raises(CausalityViolation):
        simulate_scheme(s, seed=0, trials=1)


def test_observations_match_sympy_rank_oracle():
    s = build_corner_scheme(AntennaConfig(5, 2, 4, 3), C.P13)
    sim = simulate_scheme(s, seed=11, trials=2, keep_observations=True)
    d1, d2 = s.d_star
    for trial in sim.trials:
        for r, desired in ((1, range(d1)), (2, range(d1, d1 + d2))):
            G = sympy.Matrix(observation_fraction_rows(trial.observations[r]))
            rest = G[:, [c for c in range(d1 + d2) if c not in desired]]
            assert (G.rank(), rest.rank()) == trial.ranks[r]
            assert G.rank() == rest.rank() + len(desired)


def test_prime_field_agrees():
    for t, k in [((3, 3, 2, 2), C.P12), ((8, 1, 4, 3), C.PO23), ((7, 3, 5, 4), C.P34)]:
        s = build_corner_scheme(AntennaConfig(*t), k)
        q = simulate_scheme(s, seed=5, trials=3)
        p = simulate_scheme(s, seed=5, trials=3, field="prime")
        assert [x.ranks for x in q.trials] == [x.ranks for x in p.trials]


def test_simulation_deterministic_and_env_seed(monkeypatch):
    s = build_corner_scheme(AntennaConfig(8, 1, 4, 3), C.PO23)
    a = simulate_scheme(s, seed=3, trials=2, keep_observations=True)
    b = simulate_scheme(s, seed=3, trials=2, keep_observations=True)
    assert [t.observations for t in a.trials] == [t.observations for t in b.trials]
    monkeypatch.setenv("DOFIC_SEED", "42")
    assert default_seed() == 42
    assert simulate_scheme(s, trials=1).trials[0].seed == (42, 0)


def test_verify_region_examples():
    rep = verify_region(AntennaConfig(3, 1, 4, 2), trials=3, seed=1)
    assert rep.equal and set(rep.simulations) == {C.PO21}
    rep = verify_region(AntennaConfig(2, 2, 2, 2), trials=3, seed=1)
    assert rep.mode == "no-csi-formula" and rep.equal
    rep = verify_region(AntennaConfig(7, 3, 5, 4), trials=3, seed=1)
    assert rep.equal and set(rep.simulations) == {C.PO24, C.P34}


def test_verify_region_reports_gap(monkeypatch):
    real = verify_mod.build_corner_scheme
    monkeypatch.setattr(verify_mod, "build_corner_scheme", lambda c, k: inflate_d1(real(c, k)))
    with pytest.raises(AchievabilityGap) as err:
        verify_region(AntennaConfig(3, 1, 4, 2), trials=2, seed=1)
    assert err.value.corner is C.PO21
