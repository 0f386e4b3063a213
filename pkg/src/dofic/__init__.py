"""Exact degrees-of-freedom regions for the two-user MIMO interference channel."""

from .classify import CaseLabel, CornerLabel, classify_case, corner_points, csi_comparison, expected_active_bounds
from .config import AntennaConfig, CsiRegime, canonicalize, validate
from .errors import (
    AchievabilityGap,
    CausalityViolation,
    ConditionNotSatisfied,
    CornerUndefinedForCase,
    DoficError,
    InfeasibleParameters,
    NonPositiveAntennaCount,
    PartitionInfeasible,
)
from .polytope import BoundLabel, DofPoint, DofRegion, HalfPlaneBound, RegionRelation, active_bounds, relation
from .regions import condition_holds, delayed_region, no_csi_region, perfect_region, region_for

__version__ = "0.1.0"

__all__ = [
    "AchievabilityGap", "AntennaConfig", "BoundLabel", "CaseLabel", "CausalityViolation",
    "ConditionNotSatisfied", "CornerLabel", "CornerUndefinedForCase", "CsiRegime", "DofPoint",
    "DofRegion", "DoficError", "HalfPlaneBound", "InfeasibleParameters", "NonPositiveAntennaCount",
    "PartitionInfeasible", "RegionRelation", "active_bounds", "canonicalize", "classify_case",
    "condition_holds", "corner_points", "csi_comparison", "delayed_region", "expected_active_bounds",
    "no_csi_region", "perfect_region", "region_for", "relation", "validate",
]
