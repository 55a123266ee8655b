"""Perpendicular walks of a screen blocker through the link.

A trace is the loss seen at uniform time samples while the screen slides
laterally across the link axis at constant speed.  Received power is
referenced to the unobstructed link at 0 dBm, so ``rel_power_db`` is just
the negated loss.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterator, NamedTuple, Optional

import numpy as np

from .antenna import AntennaPattern
from .geometry import GeometryError, LinkGeometry, ScreenBlocker
from .models import Model, screen_loss

WALK_SPEED_MPS = 1.0
SAMPLE_INTERVAL_S = 0.002  # one PDP every 2 ms
WALK_SPAN_M = (-1.0, 1.0)
DEFAULT_EVENT_THRESHOLD_DB = 6.0
PRESET_DISTANCES_M = tuple(0.5 * k for k in range(1, 10))

# tolerance on the sample-count division; keeps 2.0 / 0.002 from flooring to 999
_GRID_EPS = 1e-9


@dataclass(frozen=True)
class WalkScenario:
    link: LinkGeometry
    blocker: ScreenBlocker
    speed_mps: float = WALK_SPEED_MPS
    start_offset_m: float = WALK_SPAN_M[0]
    end_offset_m: float = WALK_SPAN_M[1]
    sample_interval_s: float = SAMPLE_INTERVAL_S
    model: Model = Model.MODIFIED_DIRECTIONAL
    tx_pattern: AntennaPattern = field(default_factory=AntennaPattern.isotropic)
    rx_pattern: AntennaPattern = field(default_factory=AntennaPattern.isotropic)

    def __post_init__(self):
        object.__setattr__(self, "model", Model(self.model))
        for name in ("speed_mps", "start_offset_m", "end_offset_m", "sample_interval_s"):
            if not math.isfinite(getattr(self, name)):
                raise GeometryError(f"{name} must be finite")
        if self.speed_mps <= 0:
            raise GeometryError("speed_mps must be > 0")
        if self.sample_interval_s <= 0:
            raise GeometryError("sample_interval_s must be > 0")
        if not self.start_offset_m < self.end_offset_m:
            raise GeometryError("start_offset_m must be less than end_offset_m (zero-length walk)")
        self.blocker.check_within(self.link)

    @property
    def distance_from_tx_m(self) -> float:
        return self.blocker.distance_from_tx_m

    @property
    def n_samples(self) -> int:
        span = self.end_offset_m - self.start_offset_m
        return math.floor(span / (self.speed_mps * self.sample_interval_s) + _GRID_EPS) + 1

    def with_model(self, model: Model | str) -> "WalkScenario":
        return replace(self, model=Model(model))

    def loss_at(self, offset_m: float):
        return screen_loss(
            self.model, self.link, self.blocker.at_offset(offset_m), self.tx_pattern, self.rx_pattern
        )


class TraceSample(NamedTuple):
    time_s: float
    offset_m: float
    loss_db: float
    rel_power_db: float


@dataclass(frozen=True, eq=False)
class ShadowTrace:
    scenario: WalkScenario
    time_s: np.ndarray
    offset_m: np.ndarray
    loss_db: np.ndarray
    rel_power_db: np.ndarray
    blocked: np.ndarray

    def __len__(self) -> int:
        return len(self.time_s)

    @property
    def samples(self) -> list[TraceSample]:
        return list(iter(self))

    def __iter__(self) -> Iterator[TraceSample]:
        for row in zip(self.time_s, self.offset_m, self.loss_db, self.rel_power_db):
            yield TraceSample(*map(float, row))


def simulate_walk(scenario: WalkScenario) -> ShadowTrace:
    n = scenario.n_samples
    t = np.arange(n) * scenario.sample_interval_s
    y = scenario.start_offset_m + scenario.speed_mps * t
    loss = np.empty(n)
    blocked = np.empty(n, dtype=bool)
    for i, offset in enumerate(y):
        res = scenario.loss_at(float(offset))
        loss[i] = res.loss_db
        blocked[i] = res.boresight_blocked
    return ShadowTrace(scenario, t, y, loss, -loss, blocked)


@dataclass(frozen=True)
class EventStats:
    max_loss_db: float
    time_of_max_s: float
    threshold_db: float
    duration_s: float
    no_event: bool
    event_start_s: Optional[float]
    event_end_s: Optional[float]
    blocked_window_s: float


def blocked_window(scenario: WalkScenario) -> float:
    """Time during which the screen covers the direct ray.

    Equals ``width / speed`` whenever the walk crosses the whole screen over
    the link axis; partial crossings are clipped to the walk span.
    """
    half = scenario.blocker.width_m / 2
    lo = max(scenario.start_offset_m, -half)
    hi = min(scenario.end_offset_m, half)
    return max(0.0, hi - lo) / scenario.speed_mps


def _crossing(t0: float, l0: float, t1: float, l1: float, threshold: float) -> float:
    return t0 + (threshold - l0) / (l1 - l0) * (t1 - t0)


def event_stats(trace: ShadowTrace, threshold_db: float = DEFAULT_EVENT_THRESHOLD_DB) -> EventStats:
    """Peak loss and thresholded event duration of a trace.

    The event spans the first to the last sample with ``loss >= threshold``;
    its edges are refined by linear interpolation against the neighbouring
    sub-threshold samples.  A trace that never reaches the threshold reports
    ``no_event`` with zero duration.
    """
    if len(trace) == 0:
        raise ValueError("empty trace")
    if not threshold_db > 0:
        raise ValueError("threshold_db must be > 0")
    t, loss = trace.time_s, trace.loss_db
    k = int(np.argmax(loss))
    window = blocked_window(trace.scenario)
    above = np.flatnonzero(loss >= threshold_db)
    if above.size == 0:
        return EventStats(float(loss[k]), float(t[k]), threshold_db, 0.0, True, None, None, window)
    i0, i1 = int(above[0]), int(above[-1])
    start = float(t[i0]) if i0 == 0 else _crossing(t[i0 - 1], loss[i0 - 1], t[i0], loss[i0], threshold_db)
    if i1 == len(t) - 1:
        end = float(t[i1])
    else:
        end = _crossing(t[i1], loss[i1], t[i1 + 1], loss[i1 + 1], threshold_db)
    return EventStats(float(loss[k]), float(t[k]), threshold_db, end - start, False, start, end, window)


def nine_measurement_presets(model: Model | str = Model.MODIFIED_DIRECTIONAL) -> list[WalkScenario]:
    """The nine perpendicular walks at 0.5 m steps along a 5 m, 73.5 GHz link
    with 15 deg HPBW horns at both ends and a 0.28 m infinitely tall screen."""
    link = LinkGeometry(separation_m=5.0, tx_height_m=1.4, rx_height_m=1.4, carrier_hz=73.5e9)
    pattern = AntennaPattern.from_hpbw_deg(15.0)
    return [
        WalkScenario(
            link=link,
            blocker=ScreenBlocker(distance_from_tx_m=d, width_m=0.28),
            model=Model(model),
            tx_pattern=pattern,
            rx_pattern=pattern,
        )
        for d in PRESET_DISTANCES_M
    ]
