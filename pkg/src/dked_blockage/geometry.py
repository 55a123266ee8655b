"""Link frame and screen geometry.

The link runs along the x axis from the TX (point A, x = 0) to the RX
(point B, x = r).  A blocker is a screen perpendicular to that axis at
``x = distance_from_tx_m``; its two width edges sit at lateral offsets
``y_c -/+ w/2`` in the top-down view and, for finite screens, its bottom and
top edges sit at vertical offsets relative to the link height in the side
view.  Both views reduce to the same planar problem: an edge at signed
offset ``y`` from the direct ray, ``d_tx`` from the TX plane and ``d_rx``
from the RX plane.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

SPEED_OF_LIGHT = 299_792_458.0

# Fig. 3 blocker dimensions (m)
BODY_DEPTH_M = 0.28
BODY_BREADTH_M = 0.47
BODY_HEIGHT_M = 1.8

# edges within this distance of the direct ray count as on it; keeps the
# shadow/LOS switch independent of rounding in offsets like -1 + 0.86
ON_RAY_TOL_M = 1e-12


class GeometryError(ValueError):
    """Raised for physically invalid link or screen geometry."""


@dataclass(frozen=True)
class LinkGeometry:
    """Point-to-point link with boresight-aligned endpoints."""

    separation_m: float = 5.0
    tx_height_m: float = 1.4
    rx_height_m: float = 1.4
    carrier_hz: float = 73.5e9

    def __post_init__(self):
        for name in ("separation_m", "tx_height_m", "rx_height_m", "carrier_hz"):
            if not math.isfinite(getattr(self, name)):
                raise GeometryError(f"{name} must be finite")
        if self.separation_m <= 0:
            raise GeometryError("separation_m must be > 0")
        if self.carrier_hz <= 0:
            raise GeometryError("carrier_hz must be > 0")
        if self.tx_height_m < 0 or self.rx_height_m < 0:
            raise GeometryError("antenna heights must be >= 0")

    @property
    def wavelength_m(self) -> float:
        return SPEED_OF_LIGHT / self.carrier_hz


@dataclass(frozen=True)
class HeightSpan:
    """Vertical extent of a finite screen, in meters above the floor."""

    bottom_m: float
    top_m: float

    def __post_init__(self):
        if not (math.isfinite(self.bottom_m) and math.isfinite(self.top_m)):
            raise GeometryError("screen height span must be finite")
        if self.top_m <= self.bottom_m:
            raise GeometryError("top_m must be greater than bottom_m")


@dataclass(frozen=True)
class ScreenBlocker:
    """Perpendicular screen standing in for a human body.

    ``height=None`` is the infinitely tall screen that only diffracts around
    its two side edges.
    """

    distance_from_tx_m: float
    lateral_offset_m: float = 0.0
    width_m: float = BODY_DEPTH_M
    height: Optional[HeightSpan] = None

    def __post_init__(self):
        for name in ("distance_from_tx_m", "lateral_offset_m", "width_m"):
            if not math.isfinite(getattr(self, name)):
                raise GeometryError(f"{name} must be finite")
        if self.width_m <= 0:
            raise GeometryError("width_m must be > 0")

    @property
    def is_infinite(self) -> bool:
        return self.height is None

    @property
    def width_edge_offsets(self) -> tuple[float, float]:
        half = self.width_m / 2
        return self.lateral_offset_m - half, self.lateral_offset_m + half

    def at_offset(self, lateral_offset_m: float) -> "ScreenBlocker":
        return ScreenBlocker(self.distance_from_tx_m, lateral_offset_m, self.width_m, self.height)

    def check_within(self, link: LinkGeometry) -> None:
        if not 0 < self.distance_from_tx_m < link.separation_m:
            raise GeometryError(
                f"distance_from_tx_m={self.distance_from_tx_m} must lie strictly "
                f"between 0 and separation_m={link.separation_m}"
            )


class EdgeProjection(NamedTuple):
    d2_m: float
    d1_m: float
    excess_m: float
    angle_tx_rad: float
    angle_rx_rad: float


@dataclass(frozen=True)
class EdgeDiffraction:
    """One diffracting edge: projected legs, excess path, shadow sign and F."""

    label: str
    offset_m: float
    d2_m: float
    d1_m: float
    excess_m: float
    sign: int
    angle_tx_rad: float
    angle_rx_rad: float
    f_value: float


def edge_projection(d_tx: float, d_rx: float, offset: float) -> EdgeProjection:
    """Project an edge at signed ``offset`` onto the TX-edge and edge-RX legs.

    Returns the two leg lengths, the excess path over the direct ray (clamped
    at zero against rounding) and the signed angles of the edge off boresight
    as seen from each endpoint.
    """
    if not (d_tx > 0 and d_rx > 0):
        raise GeometryError(f"edge must lie strictly between the endpoints (d_tx={d_tx}, d_rx={d_rx})")
    d2 = math.hypot(d_tx, offset)
    d1 = math.hypot(d_rx, offset)
    excess = max(0.0, d2 + d1 - (d_tx + d_rx))
    return EdgeProjection(d2, d1, excess, math.atan(offset / d_tx), math.atan(offset / d_rx))


def _classify(near_side: float, far_side: float) -> tuple[int, int, bool]:
    lo, hi = min(near_side, far_side), max(near_side, far_side)
    if lo <= ON_RAY_TOL_M and hi >= -ON_RAY_TOL_M:
        return 1, 1, True
    # LOS: the edge nearer the ray is lit (-), the other is in shadow (+)
    if abs(near_side) < abs(far_side):
        return -1, 1, False
    return 1, -1, False


def classify_width_edges(screen: ScreenBlocker) -> tuple[int, int, bool]:
    """Shadow signs for edges ``w1`` (y_c - w/2) and ``w2`` (y_c + w/2).

    Returns ``(sign_w1, sign_w2, boresight_blocked)``.  An edge lying exactly
    on the direct ray counts as blocking.
    """
    return _classify(*screen.width_edge_offsets)


def height_edge_offsets(screen: ScreenBlocker, link: LinkGeometry) -> tuple[float, float]:
    """Vertical offsets of the ``h1`` (bottom) and ``h2`` (top) edges from the link."""
    if screen.height is None:
        raise GeometryError("infinite screen has no height edges; use the 2-edge model")
    if link.tx_height_m != link.rx_height_m:
        raise GeometryError("side-view geometry requires equal TX and RX heights")
    h_link = link.tx_height_m
    return screen.height.bottom_m - h_link, screen.height.top_m - h_link


def classify_height_edges(screen: ScreenBlocker, link: LinkGeometry) -> tuple[int, int, bool]:
    """Shadow signs for the bottom (``h1``) and top (``h2``) edges.

    The h1/h2 labelling is arbitrary; every model is symmetric in it.
    """
    return _classify(*height_edge_offsets(screen, link))
