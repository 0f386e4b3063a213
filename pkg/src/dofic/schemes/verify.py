"""Achievability check: simulated corners, time-shared, must rebuild the outer region."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..classify import TABLE, CaseLabel, CornerLabel, classify_case
from ..config import AntennaConfig
from ..errors import AchievabilityGap
from ..polytope import DofPoint, RegionRelation, convex_hull, relation
from ..regions import delayed_region, no_csi_region
from .builders import build_corner_scheme
from .simulate import SimulationResult, simulate_scheme


@dataclass
class RegionVerification:
    config: AntennaConfig
    case: CaseLabel
    mode: str  # "simulated" or "no-csi-formula"
    outer: tuple[DofPoint, ...]
    achieved: tuple[DofPoint, ...]
    simulations: dict[CornerLabel, SimulationResult] = field(default_factory=dict)

    @property
    def equal(self) -> bool:
        return set(self.outer) == set(self.achieved)


def verify_region(config: AntennaConfig, trials: int = 5, seed: int | None = None,
                  field: str = "rational") -> RegionVerification:
    """Raise AchievabilityGap unless the outer region is shown achievable.

    Cases without corners are covered by the no-CSI region, which needs no
    channel knowledge; there the formulas themselves must agree.
    """
    case = classify_case(config)
    outer = delayed_region(config)
    corners = TABLE[case].corners
    if not corners:
        no = no_csi_region(config)
        if relation(no, outer) is not RegionRelation.EQUAL:
            raise AchievabilityGap(f"{config}: case {case.value} expects no-CSI = delayed, vertices "
                                   f"{list(map(str, no.vertices))} vs {list(map(str, outer.vertices))}")
        return RegionVerification(config, case, "no-csi-formula", outer.vertices, no.vertices)
    sims = {}
    for corner in corners:
        sim = simulate_scheme(build_corner_scheme(config, corner), seed, trials, field)
        if not sim.all_passed:
            raise AchievabilityGap(f"{config}: {corner.value} scheme passed {sim.passes}/{len(sim.trials)} trials",
                                   corner=corner)
        sims[corner] = sim
    axis = [(0, 0), (min(config.m1, config.n1), 0), (0, min(config.m2, config.n2))]
    hull = tuple(convex_hull(axis + [s.dof for s in sims.values()]))
    report = RegionVerification(config, case, "simulated", outer.vertices, hull, sims)
    if not report.equal:
        raise AchievabilityGap(f"{config}: hull {list(map(str, hull))} != outer {list(map(str, outer.vertices))}")
    return report
