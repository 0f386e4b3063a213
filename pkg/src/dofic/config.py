"""Antenna configurations and CSI regimes."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import NonPositiveAntennaCount


class CsiRegime(str, enum.Enum):
    NO_CSI = "no"
    DELAYED = "delayed"
    DELAYED_AT_TRANSMITTERS = "delayed-tx"
    DELAYED_CROSS_ONLY = "delayed-cross"
    PERFECT = "perfect"

    @property
    def effective(self) -> "CsiRegime":
        """Regime whose region this one shares (both delayed variants collapse)."""
        if self in (CsiRegime.DELAYED_AT_TRANSMITTERS, CsiRegime.DELAYED_CROSS_ONLY):
            return CsiRegime.DELAYED
        return self


@dataclass(frozen=True, order=True)
class AntennaConfig:
    """Antenna counts ``(M1, M2, N1, N2)`` of a two-user MIMO interference channel.

    ``m1``/``m2`` are the transmitter counts and ``n1``/``n2`` the receiver
    counts; user ``i`` is the pair (transmitter i, receiver i).
    """

    m1: int
    m2: int
    n1: int
    n2: int

    def __post_init__(self):
        for name in ("m1", "m2", "n1", "n2"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an int, got {value!r}")
            if value < 1:
                raise NonPositiveAntennaCount(f"{name}={value} must be >= 1")

    @property
    def tuple(self) -> tuple[int, int, int, int]:
        return (self.m1, self.m2, self.n1, self.n2)

    @property
    def is_canonical(self) -> bool:
        return self.n1 >= self.n2

    def swapped(self) -> "AntennaConfig":
        return AntennaConfig(self.m2, self.m1, self.n2, self.n1)

    def __str__(self) -> str:
        return "({},{},{},{})".format(*self.tuple)


def validate(m1: int, m2: int, n1: int, n2: int) -> AntennaConfig:
    return AntennaConfig(m1, m2, n1, n2)


def canonicalize(config: AntennaConfig) -> tuple[AntennaConfig, bool]:
    """Return the user ordering with ``n1 >= n2`` and whether users were swapped.

    Ties (``n1 == n2``) keep the given order.
    """
    if config.n1 >= config.n2:
        return config, False
    return config.swapped(), True
