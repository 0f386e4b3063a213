"""Interference-alignment schemes, their simulation and region verification."""

from .builders import IAParams, build_corner_scheme, generic_ia_scheme, ia_params
from .linalg import bareiss_rank, decodable, float_rank
from .partition import Element, ElementClass, Partition, PartitionCaps, partition_symbols
from .plan import Fresh, LinCombRef, Retransmit, SchemeSpec, SlotPlan, Superposed, SymbolId
from .simulate import SimulationResult, TrialResult, inflate_d1, simulate_scheme, with_same_slot_retransmit
from .verify import RegionVerification, verify_region

__all__ = [
    "Element", "ElementClass", "Fresh", "IAParams", "LinCombRef", "Partition", "PartitionCaps",
    "RegionVerification", "Retransmit", "SchemeSpec", "SimulationResult", "SlotPlan", "Superposed",
    "SymbolId", "TrialResult", "bareiss_rank", "build_corner_scheme", "decodable", "float_rank",
    "generic_ia_scheme", "ia_params", "inflate_d1", "partition_symbols", "simulate_scheme",
    "verify_region", "with_same_slot_retransmit",
]
