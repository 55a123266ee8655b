"""Screen blockage losses: METIS 2-edge and 4-edge DKED, and the
antenna-weighted directional variant of the 2-edge model."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from .antenna import AntennaPattern, normalized_gain
from .geometry import (
    EdgeDiffraction,
    GeometryError,
    LinkGeometry,
    ScreenBlocker,
    classify_height_edges,
    classify_width_edges,
    edge_projection,
    height_edge_offsets,
)

LOSS_CAP_DB = 200.0
LOG_ARG_FLOOR = 1e-10


class Model(str, Enum):
    METIS_2EDGE = "metis_2edge"
    METIS_4EDGE = "metis_4edge"
    MODIFIED_DIRECTIONAL = "modified_directional"


@dataclass(frozen=True)
class GainWeights:
    """Normalized antenna gains along the four diffracted legs."""

    g_d2_w1: float = 1.0
    g_d1_w1: float = 1.0
    g_d2_w2: float = 1.0
    g_d1_w2: float = 1.0


@dataclass(frozen=True)
class BlockageLoss:
    loss_db: float
    model: Model
    boresight_blocked: bool
    per_edge: tuple[EdgeDiffraction, ...] = ()
    gains: Optional[GainWeights] = None
    # set when the log argument hit the floor or the loss hit the cap
    log_guarded: bool = False
    capped: bool = False


def knife_edge_f(excess_m: float, wavelength_m: float, sign: int) -> float:
    """Single-edge diffraction term F in (-1/2, 1/2).

    ``sign=+1`` for an edge in the shadow zone, ``-1`` for the lit edge
    nearer the ray.
    """
    if not excess_m >= 0:
        raise ValueError(f"excess path must be >= 0, got {excess_m}")
    if not wavelength_m > 0:
        raise ValueError(f"wavelength must be > 0, got {wavelength_m}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return math.atan(sign * (math.pi / 2) * math.sqrt(math.pi / wavelength_m * excess_m)) / math.pi


def _edge(label: str, offset: float, sign: int, link: LinkGeometry, d_tx: float) -> EdgeDiffraction:
    proj = edge_projection(d_tx, link.separation_m - d_tx, offset)
    return EdgeDiffraction(
        label=label,
        offset_m=offset,
        d2_m=proj.d2_m,
        d1_m=proj.d1_m,
        excess_m=proj.excess_m,
        sign=sign,
        angle_tx_rad=proj.angle_tx_rad,
        angle_rx_rad=proj.angle_rx_rad,
        f_value=knife_edge_f(proj.excess_m, link.wavelength_m, sign),
    )


def width_edges(link: LinkGeometry, screen: ScreenBlocker) -> tuple[EdgeDiffraction, EdgeDiffraction, bool]:
    screen.check_within(link)
    s1, s2, blocked = classify_width_edges(screen)
    y1, y2 = screen.width_edge_offsets
    d = screen.distance_from_tx_m
    return _edge("w1", y1, s1, link, d), _edge("w2", y2, s2, link, d), blocked


def height_edges(link: LinkGeometry, screen: ScreenBlocker) -> tuple[EdgeDiffraction, EdgeDiffraction, bool]:
    screen.check_within(link)
    z1, z2 = height_edge_offsets(screen, link)
    s1, s2, blocked = classify_height_edges(screen, link)
    d = screen.distance_from_tx_m
    return _edge("h1", z1, s1, link, d), _edge("h2", z2, s2, link, d), blocked


def _to_db(arg: float) -> tuple[float, bool, bool]:
    guarded = arg <= 0.0
    if guarded:
        arg = LOG_ARG_FLOOR
    loss = -20.0 * math.log10(arg)
    capped = loss > LOSS_CAP_DB
    return min(max(loss, 0.0), LOSS_CAP_DB), guarded, capped


def screen_loss_2edge(link: LinkGeometry, screen: ScreenBlocker) -> BlockageLoss:
    """Infinitely tall screen: only the two side edges diffract."""
    w1, w2, blocked = width_edges(link, screen)
    loss, guarded, capped = _to_db(1.0 - (w1.f_value + w2.f_value))
    return BlockageLoss(loss, Model.METIS_2EDGE, blocked, (w1, w2), log_guarded=guarded, capped=capped)


def screen_loss_4edge(link: LinkGeometry, screen: ScreenBlocker) -> BlockageLoss:
    if screen.is_infinite:
        raise GeometryError("4-edge model needs a finite screen height; use the 2-edge model")
    w1, w2, w_blocked = width_edges(link, screen)
    h1, h2, h_blocked = height_edges(link, screen)
    arg = 1.0 - (h1.f_value + h2.f_value) * (w1.f_value + w2.f_value)
    # the product of two sums in [0, 1) keeps arg in (0, 1]; clip rounding overshoot
    loss, guarded, capped = _to_db(min(arg, 1.0))
    return BlockageLoss(
        loss, Model.METIS_4EDGE, w_blocked and h_blocked, (w1, w2, h1, h2),
        log_guarded=guarded, capped=capped,
    )


def modified_screen_loss(
    link: LinkGeometry,
    screen: ScreenBlocker,
    tx_pattern: AntennaPattern,
    rx_pattern: AntennaPattern,
) -> BlockageLoss:
    """2-edge loss with each diffracted field weighted by the antenna gains.

    Gains are looked up at the projection angles only while the screen
    blocks boresight; otherwise every weight is 1 and the result equals the
    plain 2-edge model.  With isotropic patterns it reduces to the 2-edge
    model everywhere, since 1 - (F1 + F2) = (1/2 - F1) + (1/2 - F2).
    """
    w1, w2, blocked = width_edges(link, screen)
    if blocked:
        gains = GainWeights(
            g_d2_w1=normalized_gain(w1.angle_tx_rad, tx_pattern),
            g_d1_w1=normalized_gain(w1.angle_rx_rad, rx_pattern),
            g_d2_w2=normalized_gain(w2.angle_tx_rad, tx_pattern),
            g_d1_w2=normalized_gain(w2.angle_rx_rad, rx_pattern),
        )
    else:
        gains = GainWeights()
    field_sum = (
        (0.5 - w1.f_value) * math.sqrt(gains.g_d2_w1) * math.sqrt(gains.g_d1_w1)
        + (0.5 - w2.f_value) * math.sqrt(gains.g_d2_w2) * math.sqrt(gains.g_d1_w2)
    )
    loss, guarded, capped = _to_db(abs(field_sum))
    return BlockageLoss(
        loss, Model.MODIFIED_DIRECTIONAL, blocked, (w1, w2), gains,
        log_guarded=guarded, capped=capped,
    )


def screen_loss(
    model: Model | str,
    link: LinkGeometry,
    screen: ScreenBlocker,
    tx_pattern: Optional[AntennaPattern] = None,
    rx_pattern: Optional[AntennaPattern] = None,
) -> BlockageLoss:
    """Dispatch on ``model``; missing patterns default to isotropic."""
    model = Model(model)
    if model is Model.METIS_2EDGE:
        return screen_loss_2edge(link, screen)
    if model is Model.METIS_4EDGE:
        return screen_loss_4edge(link, screen)
    return modified_screen_loss(
        link, screen,
        tx_pattern or AntennaPattern.isotropic(),
        rx_pattern or AntennaPattern.isotropic(),
    )


def multi_screen_loss(losses: Iterable[BlockageLoss | float]) -> float:
    """Total loss of several screens: the per-screen dB losses add."""
    return sum((l.loss_db if isinstance(l, BlockageLoss) else float(l) for l in losses), 0.0)
