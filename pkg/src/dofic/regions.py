"""Bound sets for the no-, delayed- and perfect-CSI DoF regions.

Every function here expects a canonical configuration (``n1 >= n2``)
except :func:`region_for`, which canonicalizes internally and maps the
result back to the caller's user ordering.
"""

from __future__ import annotations

from fractions import Fraction

from .config import AntennaConfig, CsiRegime, canonicalize
from .errors import ConditionNotSatisfied
from .polytope import BoundLabel, DofRegion, HalfPlaneBound

# Attached to no-CSI regions whose printed bound coincides with the delayed L1.
PRINTED_FORMULA_SUSPECT = "printed_formula_suspect"

_WEIGHTED = (BoundLabel.L1, BoundLabel.L2, BoundLabel.L3)


def _counts(config: AntennaConfig, i: int):
    """(M_i, M_j, N_i, N_j) for user ``i`` and the other user ``j``."""
    c = config
    if i == 1:
        return c.m1, c.m2, c.n1, c.n2
    if i == 2:
        return c.m2, c.m1, c.n2, c.n1
    raise ValueError(f"user index must be 1 or 2, got {i}")


def condition_holds(i: int, config: AntennaConfig) -> bool:
    """Strict chain ``Mi > N1+N2-Mj > Ni > Nj > Mj > Nj(Nj-Mj)/(Ni-Mj)``."""
    mi, mj, ni, nj = _counts(config, i)
    total = ni + nj
    # Short-circuit keeps the final fraction's denominator positive (ni > mj).
    return (mi > total - mj > ni > nj > mj
            and mj > Fraction(nj * (nj - mj), ni - mj))


def bound(label: BoundLabel, config: AntennaConfig) -> HalfPlaneBound:
    m1, m2, n1, n2 = config.tuple
    F = Fraction
    if label is BoundLabel.LO1:
        return HalfPlaneBound(label, 1, 0, min(m1, n1))
    if label is BoundLabel.LO2:
        return HalfPlaneBound(label, 0, 1, min(m2, n2))
    if label is BoundLabel.L1:
        w = min(n2, m1)
        return HalfPlaneBound(label, F(1, min(n1 + n2, m1)), F(1, w), F(min(n2, m1 + m2), w))
    if label is BoundLabel.L2:
        w = min(n1, m2)
        return HalfPlaneBound(label, F(1, w), F(1, min(n1 + n2, m2)), F(min(n1, m1 + m2), w))
    if label is BoundLabel.L3:
        return HalfPlaneBound(label, 1, 1, min(m1 + m2, n1 + n2, max(m1, n2), max(m2, n1)))
    if label is BoundLabel.L4:
        if not condition_holds(1, config):
            raise ConditionNotSatisfied(f"Condition 1 fails for {config}")
        return HalfPlaneBound(label, 1, F(n1 + 2 * n2 - m2, n2), n1 + n2)
    if label is BoundLabel.L5:
        if not condition_holds(2, config):
            raise ConditionNotSatisfied(f"Condition 2 fails for {config}")
        return HalfPlaneBound(label, F(n2 + 2 * n1 - m1, n1), 1, n1 + n2)
    raise ValueError(label)


def _single_user(config: AntennaConfig) -> list[HalfPlaneBound]:
    return [bound(BoundLabel.LO1, config), bound(BoundLabel.LO2, config)]


def delayed_bounds(config: AntennaConfig) -> list[HalfPlaneBound]:
    bounds = _single_user(config) + [bound(label, config) for label in _WEIGHTED]
    if condition_holds(1, config):
        bounds.append(bound(BoundLabel.L4, config))
    if condition_holds(2, config):
        bounds.append(bound(BoundLabel.L5, config))
    return bounds


def delayed_region(config: AntennaConfig) -> DofRegion:
    return DofRegion.from_bounds(delayed_bounds(config))


def perfect_region(config: AntennaConfig) -> DofRegion:
    return DofRegion.from_bounds(_single_user(config) + [bound(BoundLabel.L3, config)])


def no_csi_bound(config: AntennaConfig) -> HalfPlaneBound:
    """The weighted no-CSI bound, evaluated exactly as printed (``n1 >= n2``).

    Labelled L1 because it plays the same role as the delayed L1 bound.
    """
    m1, m2, n1, n2 = config.tuple
    w = min(m1, n2)
    return HalfPlaneBound(BoundLabel.L1, Fraction(1, min(m1, n1)), Fraction(1, w),
                          Fraction(min(n2, m1 + m2), w))


def no_csi_region(config: AntennaConfig) -> DofRegion:
    weighted = no_csi_bound(config)
    flags = []
    m1, m2, n1, n2 = config.tuple
    # Case B.I: n1 > n2, n1 >= m1 > n2 > m2. The printed formula collapses
    # onto the delayed L1 bound there although a strict gap is claimed.
    if n1 > n2 and n1 >= m1 > n2 > m2:
        flags.append(PRINTED_FORMULA_SUSPECT)
    return DofRegion.from_bounds(_single_user(config) + [weighted], flags)


_CONSTRUCTORS = {
    CsiRegime.NO_CSI: no_csi_region,
    CsiRegime.DELAYED: delayed_region,
    CsiRegime.PERFECT: perfect_region,
}


def region_for(config: AntennaConfig, regime: CsiRegime | str) -> DofRegion:
    """Region for any valid config, reported in the caller's user ordering."""
    regime = CsiRegime(regime)
    canonical, swapped = canonicalize(config)
    region = _CONSTRUCTORS[regime.effective](canonical)
    return region.mirrored() if swapped else region
