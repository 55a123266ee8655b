"""Normalized azimuth gain of a horn antenna.

    G(theta) = sinc^2(a * sin(theta)) * cos^2(theta)

with ``sinc(x) = sin(x) / x`` and ``a`` chosen so that G(HPBW/2) = 1/2.
Using the normalized sinc instead would only rescale ``a`` by pi; the gain
curve after calibration is the same.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from scipy.optimize import brentq

# Table I: 15 degree azimuth/elevation HPBW
DEFAULT_HPBW_DEG = 15.0


class PatternKind(str, Enum):
    ISOTROPIC = "isotropic"
    SINC_COS = "sinc_cos"


def _sinc(x: float) -> float:
    if x == 0.0:
        return 1.0
    return math.sin(x) / x


def solve_pattern_coefficient(hpbw_az_rad: float) -> float:
    """Smallest ``a > 0`` putting the half-power point at ``hpbw_az_rad / 2``.

    The root is searched on the main lobe, ``x = a*sin(HPBW/2)`` in (0, pi),
    where sinc is strictly decreasing.  Beamwidths with
    ``cos^2(HPBW/2) <= 1/2`` (HPBW >= 90 deg) are rejected: the cos^2 factor
    alone already drops below half power there.
    """
    if not (0.0 < hpbw_az_rad < math.pi):
        raise ValueError(f"hpbw_az_rad must be in (0, pi), got {hpbw_az_rad}")
    half = hpbw_az_rad / 2
    cos2 = math.cos(half) ** 2
    if cos2 <= 0.5 or hpbw_az_rad >= math.pi / 2:
        raise ValueError(
            f"no main-lobe solution for HPBW={math.degrees(hpbw_az_rad):.3f} deg: "
            f"cos^2(HPBW/2)={cos2:.4f} is not above 1/2"
        )
    target = math.sqrt(0.5 / cos2)
    x = brentq(lambda x: _sinc(x) - target, 1e-300, math.pi, xtol=1e-12)
    return x / math.sin(half)


@dataclass(frozen=True)
class AntennaPattern:
    kind: PatternKind = PatternKind.ISOTROPIC
    hpbw_az_rad: Optional[float] = None
    coefficient_a: Optional[float] = None

    @classmethod
    def isotropic(cls) -> "AntennaPattern":
        return cls(PatternKind.ISOTROPIC)

    @classmethod
    def sinc_cos(cls, hpbw_az_rad: float) -> "AntennaPattern":
        return cls(PatternKind.SINC_COS, hpbw_az_rad, solve_pattern_coefficient(hpbw_az_rad))

    @classmethod
    def from_hpbw_deg(cls, hpbw_az_deg: float = DEFAULT_HPBW_DEG) -> "AntennaPattern":
        return cls.sinc_cos(math.radians(hpbw_az_deg))

    @property
    def is_isotropic(self) -> bool:
        return self.kind is PatternKind.ISOTROPIC

    @property
    def hpbw_az_deg(self) -> Optional[float]:
        return None if self.hpbw_az_rad is None else math.degrees(self.hpbw_az_rad)

    def gain(self, theta_rad: float) -> float:
        return normalized_gain(theta_rad, self)


def normalized_gain(theta_rad: float, pattern: AntennaPattern) -> float:
    """Linear power gain relative to boresight (G(0) = 1).

    Angles behind the aperture plane (|theta| > pi/2) are outside the model
    for directional patterns and raise ``ValueError``.
    """
    if pattern.is_isotropic:
        return 1.0
    if abs(theta_rad) > math.pi / 2:
        raise ValueError(f"|theta|={abs(theta_rad):.6f} rad is behind the aperture plane")
    s = _sinc(pattern.coefficient_a * math.sin(theta_rad))
    return s * s * math.cos(theta_rad) ** 2
